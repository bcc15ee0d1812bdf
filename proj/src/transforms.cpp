#include "numrad/transforms.hpp"

#include <cmath>

#include "numrad/errors.hpp"

namespace numrad {

CartesianParts cartesian(const CMatrix& a) {
    require_square_finite(a, "cartesian input");
    const CMatrix adj = a.adjoint();
    return CartesianParts{0.5 * (a + adj), Complex(0.0, -0.5) * (a - adj)};
}

PolarParts polar(const CMatrix& a) {
    const Svd dec = svd(a);
    const double cut = dec.rank_cutoff();
    const auto n = a.rows();

    CMatrix u = CMatrix::Zero(n, n);
    RVector sigma = RVector::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (dec.values(k) > cut) {
            u += dec.left.col(k) * dec.right.col(k).adjoint();
            sigma(k) = dec.values(k);
        }
    }
    CMatrix modulus = dec.right * sigma.asDiagonal() * dec.right.adjoint();
    return PolarParts{std::move(u), std::move(modulus)};
}

CMatrix aluthge(const CMatrix& a) {
    const Svd dec = svd(a);
    const double cut = dec.rank_cutoff();
    const auto n = a.rows();

    // With A = W S V^*: |A|^{1/2} = V S^{1/2} V^*, U = W P V^* (P keeps sigma > cut),
    // so the transform is V R (V^* W) R V^* with R = P S^{1/2}.
    RVector root = RVector::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (dec.values(k) > cut) {
            root(k) = std::sqrt(dec.values(k));
        }
    }
    const CMatrix overlap = dec.right.adjoint() * dec.left;
    CMatrix core = root.asDiagonal() * overlap * root.asDiagonal();
    return dec.right * core * dec.right.adjoint();
}

ModulusPowers::ModulusPowers(const CMatrix& a) : svd_(svd(a)) {}

RVector ModulusPowers::powered(double p) const {
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw DomainError("modulus power: exponent must be finite and >= 0");
    }
    const double cut = svd_.rank_cutoff();
    RVector out(svd_.values.size());
    for (Eigen::Index k = 0; k < out.size(); ++k) {
        const double s = svd_.values(k) > cut ? svd_.values(k) : 0.0;
        out(k) = power_zero_convention(s, p);
    }
    return out;
}

CMatrix ModulusPowers::modulus(double p) const {
    return svd_.right * powered(p).asDiagonal() * svd_.right.adjoint();
}

CMatrix ModulusPowers::adjoint_modulus(double p) const {
    return svd_.left * powered(p).asDiagonal() * svd_.left.adjoint();
}

CMatrix modulus_power(const CMatrix& a, double p) { return ModulusPowers(a).modulus(p); }

CMatrix adjoint_modulus_power(const CMatrix& a, double p) {
    return ModulusPowers(a).adjoint_modulus(p);
}

} // namespace numrad
