import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import annulus_points, det_rational, polyval_inc, random_rational, series_of_rational
from padetype import rational as R
from padetype.errors import DuplicateNodes, InputError, NodeAtOrigin, PrescribedFactorAtNode
from padetype.functions import known
from padetype.nodes import equidistant

GEOM = np.ones(8)


def test_build_system_hand_example():
    A, rhs = R.build_system(GEOM, [0.5], [2.0], 1, 1, scaled=False)
    np.testing.assert_allclose(A, [[-0.5]])
    np.testing.assert_allclose(rhs, [0.5])


def test_row_scaling_keeps_solution():
    c, f = known("exp", 10)
    tau = np.array([0.3, -0.6, 0.9])
    a = R.fit(c, tau, f(tau), 3, scaled=True)
    b = R.fit(c, tau, f(tau), 3, scaled=False)
    np.testing.assert_allclose(a.den, b.den, rtol=1e-9)


def test_empty_data_rejected():
    with pytest.raises(InputError):
        R.build_system(GEOM, [], [], 1, 1)


def test_node_checks():
    with pytest.raises(NodeAtOrigin):
        R.fit(GEOM, [0.0, 1.0], [1, 2], 2)
    with pytest.raises(DuplicateNodes):
        R.fit(GEOM, [0.5, 0.5], [2, 2], 2)


def test_geometric_fixture_recovers_one_over_one_minus_t():
    m = R.fit(GEOM, [0.5], [2.0], 1)
    np.testing.assert_allclose(m.num, [1, 0], atol=1e-14)
    np.testing.assert_allclose(m.den, [1, -1], atol=1e-14)
    assert m(0.5) == pytest.approx(2)
    assert m.den[0] == 1


def test_data_from_partial_sum_gives_partial_sum():
    c = np.array([1.0, 0.3, -0.2, 0.7, 0.1])
    tau = np.array([0.4, -0.8])
    vals = polyval_inc(c[:3], tau)
    m = R.fit(c, tau, vals, 2)
    np.testing.assert_allclose(m.den, [1, 0, 0], atol=1e-12)
    np.testing.assert_allclose(m.num, c[:3], atol=1e-12)


def test_tan_taylor_match():
    c, f = known("tan_over", 17, omega=4.0)
    tau = equidistant(-1, 1, 8)
    m = R.fit(c, tau, f(tau), 8)
    assert R.order_of_contact(m, c) < 1e-8
    np.testing.assert_allclose(m(tau), f(tau), rtol=1e-8)


def test_partial_without_factors_equals_fit():
    c, f = known("exp", 10)
    tau = np.array([0.2, 0.5, -0.7])
    a = R.fit_partial(c, tau, f(tau), 3)
    b = R.fit(c, tau, f(tau), 3)
    np.testing.assert_allclose(a.num, b.num)
    np.testing.assert_allclose(a.den, b.den)


def test_partial_with_known_pole():
    # f = 1 / ((1 - t)(t - 2)); expansion from the Toeplitz oracle
    num = np.array([1.0])
    den = np.polynomial.polynomial.polymul([1, -1], [-2, 1])
    c = series_of_rational(num, den, 8)
    tau = np.array([0.5, -0.5])
    f = lambda t: 1 / ((1 - t) * (t - 2))
    m = R.fit_partial(c, tau, f(tau), 1, poles=[2.0])
    np.testing.assert_allclose(m(tau), f(tau), rtol=1e-10)
    probe = np.array([0.3, -1.1, 1.5j])
    np.testing.assert_allclose(m(probe), f(probe), rtol=1e-10)
    assert any(p.prescribed and abs(p.location - 2) < 1e-14 for p in m.poles())


def test_prescribed_factor_at_node_rejected():
    with pytest.raises(PrescribedFactorAtNode):
        R.fit_partial(GEOM, [0.5, 2.0], [2, -1], 1, poles=[2.0])


def test_tan_partial_has_exact_factors():
    c, f = known("tan_over", 17, omega=4.0)
    tau = equidistant(-1, 1, 8)
    Z = [np.pi / 4, -np.pi / 4]
    P = [np.pi / 8, -np.pi / 8]
    m = R.fit_partial(c, tau, f(tau), 8, Z, P)
    assert abs(m(np.pi / 4)) < 1e-12
    assert not np.isfinite(m(np.pi / 8))
    np.testing.assert_allclose(m(tau), f(tau), rtol=1e-8)


def test_evaluate_examples():
    m = R.RationalModel(np.array([1.0 + 0j]), np.array([1.0, -1.0 + 0j]))
    assert m(0.5) == pytest.approx(2)
    assert np.isinf(m(1.0).real)
    np.testing.assert_allclose(m(np.array([0.5, -1.0])), [2, 0.5])


def test_poles_examples():
    m = R.RationalModel(np.array([1.0 + 0j]), np.array([1.0, -1.0 + 0j]))
    assert [p.location for p in m.poles()] == [pytest.approx(1.0)]
    m2 = R.RationalModel(np.array([1.0 + 0j]), np.array([1.0, 0, 1.0 + 0j]))
    locs = sorted((p.location for p in m2.poles()), key=lambda z: z.imag)
    np.testing.assert_allclose(locs, [-1j, 1j], atol=1e-14)
    assert not any(p.real for p in m2.poles())


def test_cosine_real_pole_and_limit():
    # five nodes give the stated pole and limit with k = 5 (see README)
    c, f = known("cos", 12)
    tau = equidistant(-np.pi / 2, np.pi / 8, 5)
    m = R.fit(c, tau, f(tau), 5)
    real = R.real_poles(m, real_tol=1e-8)
    assert np.min(np.abs(real + 2.8636)) < 1e-3
    assert m(1e6).real == pytest.approx(25.269, abs=1e-2)
    assert (m.num[-1] / m.den[-1]).real == pytest.approx(25.269, abs=1e-2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_determinantal_oracle(k):
    rng = np.random.default_rng(10 + k)
    c, f = known("exp", 12)
    tau = annulus_points(rng, k, 0.3, 1.5, 0.2)
    vals = f(tau)
    m = R.fit(c, tau, vals, k)
    t = annulus_points(rng, 10, 0.1, 2.0, 0.0)
    ref = np.array([det_rational(c, tau, vals, k, ti) for ti in t])
    np.testing.assert_allclose(m(t), ref, rtol=1e-8)


@given(st.integers(0, 10**6))
def test_consistency_small_degree(seed):
    rng = np.random.default_rng(seed)
    num, den = random_rational(rng, max_deg=3)
    k = max(len(num), len(den)) - 1
    c = series_of_rational(num, den, k + 2)
    tau = annulus_points(rng, k, 0.2, 2.0, 0.1)
    f = lambda t: polyval_inc(num, t) / polyval_inc(den, t)
    m = R.fit(c, tau, f(tau), k)
    probe = annulus_points(rng, 20, 0.2, 2.0, 0.0)
    err = np.max(np.abs(m(probe) - f(probe))) / np.max(np.abs(f(probe)))
    assert err < 1e-6


@given(st.integers(0, 10**6), st.integers(1, 5))
def test_order_of_contact_property(seed, k):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=2 * k + 2) / (1 + np.arange(2 * k + 2))
    tau = annulus_points(rng, k, 0.3, 1.5, 0.15)
    vals = rng.normal(size=k) + 1j * rng.normal(size=k)
    m = R.fit(c, tau, vals, k)
    if np.max(np.abs(m.den)) < 1e6:
        assert R.order_of_contact(m, c) < 1e-8
