#include <string>

#include "numrad/errors.hpp"
#include "numrad/harness.hpp"
#include "numrad/random.hpp"

namespace numrad::harness {

namespace {

CMatrix haar_unitary(Rng& rng, Eigen::Index n) {
    const CMatrix g = rng.ginibre(n);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

CMatrix draw(Family family, Rng& rng, Eigen::Index n) {
    switch (family) {
    case Family::ginibre:
        return rng.ginibre(n);
    case Family::normal: {
        const CMatrix q = haar_unitary(rng, n);
        CVector z(n);
        for (Eigen::Index k = 0; k < n; ++k) z(k) = rng.complex_normal();
        return q * z.asDiagonal() * q.adjoint();
    }
    case Family::hermitian: {
        const CMatrix g = rng.ginibre(n);
        return 0.5 * (g + g.adjoint());
    }
    case Family::nilpotent_square_zero: {
        CMatrix a = CMatrix::Zero(n, n);
        const Eigen::Index top = n / 2;
        for (Eigen::Index j = top; j < n; ++j) {
            for (Eigen::Index i = 0; i < top; ++i) a(i, j) = rng.complex_normal();
        }
        return a;
    }
    case Family::rank_deficient: {
        if (n == 1) return CMatrix::Zero(1, 1);
        const auto inner = 1 + static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(n - 1));
        CMatrix left(n, inner);
        CMatrix right(inner, n);
        for (Eigen::Index j = 0; j < inner; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) left(i, j) = rng.complex_normal();
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index i = 0; i < inner; ++i) right(i, j) = rng.complex_normal();
        }
        return left * right;
    }
    case Family::unitary:
        return haar_unitary(rng, n);
    }
    throw DomainError("generate: unknown family");
}

} // namespace

std::string_view to_string(Family family) {
    switch (family) {
    case Family::ginibre:
        return "ginibre";
    case Family::normal:
        return "normal";
    case Family::hermitian:
        return "hermitian";
    case Family::nilpotent_square_zero:
        return "nilpotent_square_zero";
    case Family::rank_deficient:
        return "rank_deficient";
    case Family::unitary:
        return "unitary";
    }
    return "unknown";
}

std::vector<Family> all_families() {
    return {Family::ginibre,       Family::normal,         Family::hermitian,
            Family::nilpotent_square_zero, Family::rank_deficient, Family::unitary};
}

Family parse_family(std::string_view name) {
    for (Family f : all_families()) {
        if (to_string(f) == name) return f;
    }
    throw DomainError("unknown matrix family '" + std::string(name) + "'");
}

std::vector<CMatrix> generate(const GenSpec& spec) {
    if (spec.n < 1) throw DomainError("generate: n must be >= 1");
    if (spec.count < 1) throw DomainError("generate: count must be >= 1");
    Rng rng(mix_seed(spec.seed));
    std::vector<CMatrix> out;
    out.reserve(spec.count);
    for (int k = 0; k < spec.count; ++k) {
        out.push_back(draw(spec.family, rng, spec.n));
    }
    return out;
}

} // namespace numrad::harness
