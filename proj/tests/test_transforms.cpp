#include <doctest.h>

#include <cmath>

#include "numrad/numerical_radius.hpp"
#include "numrad/random.hpp"
#include "numrad/transforms.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

const Complex I(0.0, 1.0);

CMatrix rank_deficient(Rng& rng, int n) {
    const int inner = std::max(1, n - 1 - static_cast<int>(rng.uniform() * (n - 1)));
    CMatrix left(n, inner), right(inner, n);
    for (int j = 0; j < inner; ++j)
        for (int i = 0; i < n; ++i) left(i, j) = rng.complex_normal();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < inner; ++i) right(i, j) = rng.complex_normal();
    return left * right;
}

} // namespace

TEST_CASE("cartesian: examples") {
    const CartesianParts d = cartesian(oracle::diag({1.0 + I, 0.0}));
    CHECK(approx_equal(d.re, oracle::diag({1.0, 0.0}), 1e-15));
    CHECK(approx_equal(d.im, oracle::diag({1.0, 0.0}), 1e-15));

    const CMatrix h = oracle::diag({2.0, -3.0});
    CHECK(cartesian(h).im.cwiseAbs().maxCoeff() == 0.0);

    const CartesianParts j = cartesian(oracle::jordan());
    CMatrix re(2, 2), im(2, 2);
    re << 0.0, 0.5, 0.5, 0.0;
    im << 0.0, -0.5 * I, 0.5 * I, 0.0;
    CHECK(approx_equal(j.re, re, 1e-15));
    CHECK(approx_equal(j.im, im, 1e-15));
}

TEST_CASE("cartesian: round trip and the (1+i) norm identity") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 7;
        const CMatrix a = rng.ginibre(n);
        const CartesianParts p = cartesian(a);
        CHECK(max_abs_diff(p.re + I * p.im, a) <= 1e-15 * (1.0 + a.cwiseAbs().maxCoeff()) * 4);
        CHECK(max_abs_diff(p.re, p.re.adjoint()) == 0.0);
        CHECK(max_abs_diff(p.im, p.im.adjoint()) <= 1e-15 * (1.0 + a.cwiseAbs().maxCoeff()));
        const CMatrix mixed = (p.re + p.im) + I * (p.re - p.im);
        CHECK(op_norm(mixed) == doctest::Approx(std::numbers::sqrt2 * op_norm(a)).epsilon(1e-12));
    }
}

TEST_CASE("polar: examples") {
    const PolarParts j = polar(oracle::jordan());
    CHECK(approx_equal(j.u, oracle::jordan(), 1e-14));
    CHECK(approx_equal(j.modulus, oracle::diag({0.0, 1.0}), 1e-14));
    CHECK(approx_equal(j.u.adjoint() * j.u, oracle::diag({0.0, 1.0}), 1e-14));

    Rng rng(2);
    const CMatrix q = Eigen::HouseholderQR<CMatrix>(rng.ginibre(3)).householderQ();
    const PolarParts u = polar(q);
    CHECK(approx_equal(u.u, q, 1e-12));
    CHECK(approx_equal(u.modulus, CMatrix::Identity(3, 3), 1e-12));

    // A3 = U |A3|: U e2 = e1, U e3 = e2, U e1 = 0.
    const PolarParts a = polar(oracle::a3());
    CMatrix expected_u = CMatrix::Zero(3, 3);
    expected_u(0, 1) = 1.0;
    expected_u(1, 2) = 1.0;
    CHECK(approx_equal(a.modulus, oracle::diag({0.0, 1.0, 2.0}), 1e-14));
    CHECK(approx_equal(a.u, expected_u, 1e-14));
}

TEST_CASE("polar: invariants on random and rank-deficient matrices") {
    Rng rng(33);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 6;
        const CMatrix a = trial % 2 ? rng.ginibre(n) : rank_deficient(rng, n);
        const PolarParts p = polar(a);
        const double tol = 1e-9 * (1.0 + op_norm(a));
        CHECK(max_abs_diff(p.u * p.modulus, a) <= tol);
        CHECK(max_abs_diff(p.u.adjoint() * p.u, psd_power(p.modulus, 0.0)) <= 1e-9);
        CHECK(max_abs_diff(p.modulus, psd_sqrt(a.adjoint() * a)) <= 1e-6 * (1.0 + op_norm(a)));
        // ker U = ker A: U annihilates every null vector of A.
        const Svd s = svd(a);
        for (int k = s.rank(); k < n; ++k) {
            CHECK((p.u * s.right.col(k)).norm() <= 1e-9);
        }
    }
}

TEST_CASE("aluthge: examples against explicit products") {
    CHECK(aluthge(oracle::jordan()).cwiseAbs().maxCoeff() <= 1e-15);

    const CMatrix normal = oracle::diag({1.0 + I, 2.0});
    CHECK(approx_equal(aluthge(normal), normal, 1e-13));

    // |A3|^{1/2} = diag(0, 1, sqrt2), U as above; multiply entry by entry.
    CMatrix u = CMatrix::Zero(3, 3);
    u(0, 1) = 1.0;
    u(1, 2) = 1.0;
    const CMatrix root = oracle::diag({0.0, 1.0, std::sqrt(2.0)});
    const CMatrix expected = oracle::product(oracle::product(root, u), root);
    CHECK(std::abs(expected(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK(approx_equal(aluthge(oracle::a3()), expected, 1e-14));
}

TEST_CASE("aluthge: contracts the norm and the numerical radius") {
    Rng rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 5;
        const CMatrix a = trial % 3 ? rng.ginibre(n) : rank_deficient(rng, n);
        const CMatrix t = aluthge(a);
        const double scale = 1.0 + op_norm(a);
        CHECK(op_norm(t) <= op_norm(a) + 1e-10 * scale);
        CHECK(numrad_value(t) <= numrad_value(a) + 1e-9 * scale);
    }
}

TEST_CASE("ModulusPowers: matches psd_power of the Gram matrices") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        const CMatrix a = rng.ginibre(n);
        const ModulusPowers mp(a);
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const double scale = 1.0 + std::pow(op_norm(a), p);
            CHECK(max_abs_diff(mp.modulus(p), psd_power(a.adjoint() * a, p / 2)) <= 1e-9 * scale);
            CHECK(max_abs_diff(mp.adjoint_modulus(p), psd_power(a * a.adjoint(), p / 2)) <=
                  1e-9 * scale);
        }
    }
    // Kernel directions stay in the kernel at exponent zero.
    const ModulusPowers j(oracle::jordan());
    CHECK(approx_equal(j.modulus(0.0), oracle::diag({0.0, 1.0}), 1e-14));
    CHECK(approx_equal(j.adjoint_modulus(0.0), oracle::diag({1.0, 0.0}), 1e-14));
}
