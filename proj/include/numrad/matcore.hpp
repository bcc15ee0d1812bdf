#pragma once

#include <complex>

#include <Eigen/Dense>

namespace numrad {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Relative tolerance for accepting a matrix as Hermitian before symmetrizing.
inline constexpr double kHermitianTol = 1e-8;
/// Relative tolerance under which eigenvalues of a PSD matrix count as zero.
inline constexpr double kPsdTol = 1e-10;
/// Relative cutoff under which singular values count as zero.
inline constexpr double kRankTol = 1e-10;

/// Throws DimensionError if `a` is not square (or empty), NonFiniteError if any
/// entry is NaN or Inf.
void require_square_finite(const CMatrix& a, const char* what = "matrix");

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Tolerance-based equality: max-entry modulus difference <= eps.
bool approx_equal(const CMatrix& a, const CMatrix& b, double eps);

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
struct HermEig {
    RVector values;
    CMatrix vectors;

    double max() const { return values(0); }
    double min() const { return values(values.size() - 1); }
};

/// Hermitian eigendecomposition. The input is symmetrized as (H + H*)/2; inputs
/// further than kHermitianTol * (1 + ||H||) from Hermitian are rejected.
HermEig herm_eig(const CMatrix& h);

/// Largest eigenvalue of a matrix that is Hermitian by construction.
/// No validation; used on hot paths.
double herm_lambda_max(const CMatrix& h);

/// max(|lambda_max|, |lambda_min|) of a Hermitian matrix, i.e. its numerical
/// radius and its operator norm.
double herm_radius(const CMatrix& h);

/// Singular value decomposition A = left * diag(values) * right^*.
struct Svd {
    RVector values; ///< non-negative, descending
    CMatrix left;
    CMatrix right;

    double max() const { return values.size() ? values(0) : 0.0; }
    /// Values at or below this are treated as exact zeros.
    double rank_cutoff() const { return kRankTol * (1.0 + max()); }
    int rank() const;
};

Svd svd(const CMatrix& a);

/// Spectral norm (largest singular value).
double op_norm(const CMatrix& a);

/// Functional calculus M^p for PSD M and p >= 0.
///
/// Eigenvalues with |lambda| <= kPsdTol * (1 + ||M||) are treated as zero and
/// 0^0 := 0, so psd_power(M, 0) is the orthogonal projection onto range(M).
CMatrix psd_power(const CMatrix& m, double p);

/// psd_power(m, 1/2).
CMatrix psd_sqrt(const CMatrix& m);

/// Scalar power with the 0^0 := 0 convention used by psd_power.
double power_zero_convention(double x, double p);

} // namespace numrad
