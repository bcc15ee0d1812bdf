import math

import numpy as np
import pytest

import numrad

A3 = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)
J = np.array([[0, 1], [0, 0]], dtype=complex)


def test_closed_forms():
    assert numrad.numrad_value(J) == pytest.approx(0.5, abs=1e-12)
    res = numrad.numerical_radius(A3)
    assert res.value == pytest.approx(math.sqrt(5) / 2, abs=1e-12)
    x = res.witness
    assert abs(np.vdot(x, A3 @ x)) == pytest.approx(res.value, abs=1e-10)
    assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)


def test_transforms():
    re, im = numrad.cartesian(A3)
    np.testing.assert_allclose(re + 1j * im, A3, atol=1e-15)
    u, mod = numrad.polar(A3)
    np.testing.assert_allclose(u @ mod, A3, atol=1e-12)
    t = numrad.aluthge(A3)
    expected = np.zeros((3, 3), dtype=complex)
    expected[1, 2] = math.sqrt(2)
    np.testing.assert_allclose(t, expected, atol=1e-12)
    p = numrad.psd_power(np.diag([4.0, 0.0]).astype(complex), 0.5)
    np.testing.assert_allclose(p, np.diag([2.0, 0.0]), atol=1e-12)


def test_profile_and_random_lower():
    prof = numrad.nr_profile(np.diag([1.0, 0.0]).astype(complex), 4)
    assert len(prof) == 4
    for k, (theta, lam) in enumerate(prof):
        assert theta == pytest.approx(k * math.pi / 2)
        assert lam == pytest.approx(max(math.cos(theta), 0.0), abs=1e-12)
    w = numrad.numrad_value(A3)
    assert numrad.nr_lower_random(A3, 2000, 3) <= w + 1e-12


def test_heinz_buzano_curve():
    rep = numrad.heinz_buzano_upper_sq(A3, 0.5)
    assert rep.id == "ub_thm25"
    assert rep.value == pytest.approx(2.25, abs=1e-12)
    curve = numrad.heinz_buzano_min_alpha(A3)
    assert curve.min_value == pytest.approx(2.0723471277, abs=1e-9)
    assert curve.argmin == pytest.approx(0.5449676311, abs=1e-6)
    assert curve.report().value == pytest.approx(curve.min_value)
    assert curve.min_value >= numrad.numrad_value(A3) ** 2


def test_bounds_bracket_w():
    a = numrad.generate("ginibre", 4, 11)[0]
    w = numrad.numrad_value(a)
    assert numrad.half_norm_lower(a).value <= w + 1e-10
    assert numrad.norm_upper(a).value >= w - 1e-10
    assert numrad.yamazaki_upper(a).value >= w - 1e-10
    assert numrad.aluthge_polar_upper(a).value >= w - 1e-10
    lo, hi = numrad.kittaneh_pair(a)
    assert lo.value <= w * w + 1e-10 <= hi.value + 2e-10
    d = numrad.dragomir_product_upper(a, a, 2.0)[0].to_dict()
    assert d["side"] == "upper" and "anchor" in d


def test_lemmas():
    rng = np.random.default_rng(5)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    x = rng.normal(size=3) + 1j * rng.normal(size=3)
    y = rng.normal(size=3) + 1j * rng.normal(size=3)
    assert numrad.verify_polarization(a, x, y) <= 1e-12 * (1 + np.linalg.norm(a, 2))
    assert numrad.verify_scalar_lemma(0.3, -1.2) >= 0


def test_errors():
    with pytest.raises(numrad.NumradError):
        numrad.numrad_value(np.zeros((2, 3), dtype=complex))
    with pytest.raises(numrad.DomainError):
        numrad.heinz_buzano_upper_sq(A3, 1.5)
    with pytest.raises(numrad.NotPsdError):
        numrad.psd_power(np.diag([-1.0, 1.0]).astype(complex), 0.5)
    with pytest.raises(ValueError):
        numrad.generate("nope", 2, 0)


def test_certify():
    report = numrad.certify(families=["normal", "nilpotent_square_zero"], sizes=[2, 3], count=1, r=[1.0, 2.0])
    assert report["passed"] is True
    assert report["matrices"] == 4
    failing = numrad.certify(families=["ginibre"], sizes=[2], count=1, self_test_fail=True, records=False)
    assert failing["passed"] is False
    assert len(failing["counterexamples"]) == 1
