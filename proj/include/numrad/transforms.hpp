#pragma once

#include "numrad/matcore.hpp"

namespace numrad {

/// A = re + i * im with both parts Hermitian.
struct CartesianParts {
    CMatrix re;
    CMatrix im;
};

CartesianParts cartesian(const CMatrix& a);

/// A = u * modulus, modulus = |A| = (A^*A)^{1/2}, u a partial isometry with
/// ker u = ker A (so u^*u is the projection onto range |A|).
struct PolarParts {
    CMatrix u;
    CMatrix modulus;
};

/// Polar decomposition built from the SVD; singular directions with
/// sigma <= Svd::rank_cutoff() contribute nothing to u.
PolarParts polar(const CMatrix& a);

/// Aluthge transform |A|^{1/2} U |A|^{1/2}, computed from polar(a).
CMatrix aluthge(const CMatrix& a);

/// Powers of |A| and |A^*| sharing one SVD of A.
///
/// |A|^p = V diag(sigma^p) V^* and |A^*|^p = W diag(sigma^p) W^*, with singular
/// values below the rank cutoff treated as zero and 0^0 := 0.
class ModulusPowers {
public:
    explicit ModulusPowers(const CMatrix& a);

    /// |A|^p
    CMatrix modulus(double p) const;
    /// |A^*|^p
    CMatrix adjoint_modulus(double p) const;

    const Svd& decomposition() const { return svd_; }

private:
    RVector powered(double p) const;

    Svd svd_;
};

/// |A|^p
CMatrix modulus_power(const CMatrix& a, double p);
/// |A^*|^p
CMatrix adjoint_modulus_power(const CMatrix& a, double p);

} // namespace numrad
