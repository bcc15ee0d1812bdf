#include <doctest.h>

#include <cmath>
#include <limits>

#include "numrad/errors.hpp"
#include "numrad/matcore.hpp"
#include "numrad/random.hpp"
#include "oracles.hpp"

using namespace numrad;

TEST_CASE("herm_eig: closed-form spectra") {
    const HermEig d = herm_eig(oracle::diag({3.0, -1.0}));
    CHECK(d.values(0) == doctest::Approx(3.0));
    CHECK(d.values(1) == doctest::Approx(-1.0));

    CMatrix swap = CMatrix::Zero(2, 2);
    swap(0, 1) = swap(1, 0) = 0.5;
    const HermEig s = herm_eig(swap);
    CHECK(s.max() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.min() == doctest::Approx(-0.5).epsilon(1e-14));

    // Re(A3) = 1/2 [[0,1,0],[1,0,2],[0,2,0]], characteristic polynomial l (l^2 - 5/4).
    const CMatrix a = oracle::a3();
    const HermEig r = herm_eig(0.5 * (a + a.adjoint()));
    CHECK(r.values(0) == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-14));
    CHECK(std::abs(r.values(1)) < 1e-14);
    CHECK(r.values(2) == doctest::Approx(-std::sqrt(5.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("herm_eig: error signals are distinct") {
    CHECK_THROWS_AS(herm_eig(CMatrix::Zero(2, 3)), DimensionError);
    CMatrix nan = CMatrix::Identity(2, 2);
    nan(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(herm_eig(nan), NonFiniteError);
    CHECK_THROWS_AS(herm_eig(oracle::jordan()), NotHermitianError);

    // Tiny asymmetry is repaired rather than rejected.
    CMatrix almost = oracle::diag({1.0, 2.0});
    almost(0, 1) = 1e-12;
    CHECK_NOTHROW(herm_eig(almost));
}

TEST_CASE("herm_eig: reconstruction and orthonormality on random Hermitian matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 8;
        const CMatrix g = rng.ginibre(n);
        const CMatrix h = 0.5 * (g + g.adjoint());
        const HermEig e = herm_eig(h);
        const double scale = 1.0 + h.cwiseAbs().maxCoeff() * n;
        const CMatrix rebuilt = e.vectors * e.values.asDiagonal() * e.vectors.adjoint();
        CHECK(max_abs_diff(rebuilt, h) <= 1e-10 * scale);
        CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, CMatrix::Identity(n, n)) <= 1e-12);
        for (int i = 1; i < n; ++i) CHECK(e.values(i - 1) >= e.values(i));
    }
}

TEST_CASE("svd: singular values of small examples") {
    const Svd d = svd(oracle::diag({2.0, 1.0}));
    CHECK(d.values(0) == doctest::Approx(2.0));
    CHECK(d.values(1) == doctest::Approx(1.0));

    const Svd j = svd(oracle::jordan());
    CHECK(j.values(0) == doctest::Approx(1.0));
    CHECK(std::abs(j.values(1)) < 1e-15);
    CHECK(j.rank() == 1);

    // A3^* A3 = diag(0, 1, 4)
    const Svd a = svd(oracle::a3());
    CHECK(a.values(0) == doctest::Approx(2.0));
    CHECK(a.values(1) == doctest::Approx(1.0));
    CHECK(std::abs(a.values(2)) < 1e-15);
}

TEST_CASE("svd: reconstruction on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 7;
        const CMatrix a = rng.ginibre(n);
        const Svd s = svd(a);
        const CMatrix rebuilt = s.left * s.values.asDiagonal() * s.right.adjoint();
        CHECK(max_abs_diff(rebuilt, a) <= 1e-12 * (1.0 + s.max()));
        for (int i = 1; i < n; ++i) CHECK(s.values(i - 1) >= s.values(i));
        CHECK(s.values.minCoeff() >= 0.0);
    }
}

TEST_CASE("op_norm: examples and adjoint identities") {
    CHECK(op_norm(oracle::jordan()) == doctest::Approx(1.0));
    CHECK(op_norm(oracle::a3()) == doctest::Approx(2.0));
    CHECK(op_norm(CMatrix::Zero(3, 3)) == 0.0);

    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const CMatrix a = rng.ginibre(n);
        const double norm = op_norm(a);
        CHECK(op_norm(a.adjoint()) == doctest::Approx(norm).epsilon(1e-12));
        CHECK(op_norm(a.adjoint() * a) == doctest::Approx(norm * norm).epsilon(1e-12));
        CHECK(op_norm(a * a.adjoint()) == doctest::Approx(norm * norm).epsilon(1e-12));
        CHECK(norm == doctest::Approx(oracle::spectral_norm(a)).epsilon(1e-9));
    }
}

TEST_CASE("psd_power: functional calculus and the range-projection convention") {
    CHECK(approx_equal(psd_power(oracle::diag({4.0, 9.0}), 0.5), oracle::diag({2.0, 3.0}), 1e-14));
    CHECK(approx_equal(psd_power(oracle::diag({0.0, 1.0, 4.0}), 0.0), oracle::diag({0.0, 1.0, 1.0}),
                       1e-14));
    CHECK(approx_equal(psd_sqrt(oracle::diag({0.0, 1.0, 4.0})), oracle::diag({0.0, 1.0, 2.0}), 1e-14));
    CHECK(approx_equal(psd_sqrt(CMatrix::Identity(3, 3)), CMatrix::Identity(3, 3), 1e-14));

    const CMatrix a = oracle::a3();
    CHECK(approx_equal(psd_sqrt(a.adjoint() * a), oracle::diag({0.0, 1.0, 2.0}), 1e-14));

    // Rounding-level negative eigenvalues are clamped, larger ones rejected.
    CHECK_NOTHROW(psd_power(oracle::diag({1.0, -1e-13}), 0.5));
    CHECK_THROWS_AS(psd_power(oracle::diag({1.0, -1e-3}), 0.5), NotPsdError);
    CHECK_THROWS_AS(psd_power(oracle::jordan(), 0.5), NotHermitianError);
    CHECK_THROWS_AS(psd_power(CMatrix::Identity(2, 2), -1.0), DomainError);
    CHECK(power_zero_convention(0.0, 0.0) == 0.0);
    CHECK(power_zero_convention(2.0, 0.0) == 1.0);
}

TEST_CASE("psd_power: semigroup law, projections and sqrt on random PSD matrices") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 5;
        CMatrix g = rng.ginibre(n);
        if (trial % 3 == 0) g.col(0).setZero(); // rank deficient
        const CMatrix m = g.adjoint() * g;
        const double scale = 1.0 + op_norm(m);

        const double p = 0.3 + 0.1 * (trial % 7);
        const double q = 0.2 + 0.15 * (trial % 5);
        CHECK(max_abs_diff(psd_power(m, p) * psd_power(m, q), psd_power(m, p + q)) <=
              1e-9 * std::pow(scale, p + q));

        const CMatrix proj = psd_power(m, 0.0);
        CHECK(max_abs_diff(proj * proj, proj) <= 1e-12);
        CHECK(max_abs_diff(proj, proj.adjoint()) <= 1e-12);
        CHECK(max_abs_diff(proj * m, m * proj) <= 1e-10 * scale);

        const CMatrix root = psd_sqrt(m);
        CHECK(max_abs_diff(root * root, m) <= 1e-10 * scale);
    }
}
