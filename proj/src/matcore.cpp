#include "numrad/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numrad/errors.hpp"

namespace numrad {

void require_square_finite(const CMatrix& a, const char* what) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
        throw DimensionError(std::string(what) + " must be square and non-empty, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
                throw NonFiniteError(std::string(what) + " has a non-finite entry at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double eps) {
    return max_abs_diff(a, b) <= eps;
}

HermEig herm_eig(const CMatrix& h) {
    require_square_finite(h, "herm_eig input");
    const CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("herm_eig: eigensolver did not converge");
    }
    const auto n = sym.rows();
    const RVector& asc = solver.eigenvalues();
    const double scale = std::max(std::abs(asc(0)), std::abs(asc(n - 1)));
    const double asym = max_abs_diff(h, h.adjoint());
    if (asym > kHermitianTol * (1.0 + scale)) {
        throw NotHermitianError("herm_eig: input is not Hermitian (max |H - H*| = " +
                                std::to_string(asym) + ")");
    }

    HermEig out;
    out.values = asc.reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

double herm_lambda_max(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("herm_lambda_max: eigensolver did not converge");
    }
    return solver.eigenvalues()(h.rows() - 1);
}

double herm_radius(const CMatrix& h) {
    const HermEig eig = herm_eig(h);
    return std::max(std::abs(eig.max()), std::abs(eig.min()));
}

int Svd::rank() const {
    const double cut = rank_cutoff();
    return static_cast<int>((values.array() > cut).count());
}

Svd svd(const CMatrix& a) {
    require_square_finite(a, "svd input");
    Eigen::JacobiSVD<CMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("svd: decomposition did not converge");
    }
    return Svd{solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

double op_norm(const CMatrix& a) {
    require_square_finite(a, "op_norm input");
    Eigen::JacobiSVD<CMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("op_norm: decomposition did not converge");
    }
    return solver.singularValues()(0);
}

double power_zero_convention(double x, double p) {
    if (x == 0.0) {
        return 0.0;
    }
    return p == 0.0 ? 1.0 : std::pow(x, p);
}

CMatrix psd_power(const CMatrix& m, double p) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw DomainError("psd_power: exponent must be finite and >= 0");
    }
    const HermEig eig = herm_eig(m);
    const double scale = std::max(std::abs(eig.max()), std::abs(eig.min()));
    const double tol = kPsdTol * (1.0 + scale);
    if (eig.min() < -tol) {
        throw NotPsdError("psd_power: eigenvalue " + std::to_string(eig.min()) +
                          " below -" + std::to_string(tol));
    }
    RVector powered(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double lambda = eig.values(i) <= tol ? 0.0 : eig.values(i);
        powered(i) = power_zero_convention(lambda, p);
    }
    return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

CMatrix psd_sqrt(const CMatrix& m) { return psd_power(m, 0.5); }

} // namespace numrad
