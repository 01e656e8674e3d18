import numpy as np
import pytest

from harmschwarz import families as fam
from harmschwarz.analytic import Const, Identity, Mobius, MobiusParams, Polynomial, Power, jet_eval
from harmschwarz.errors import MissingQError, SenseError
from harmschwarz.harmonic import (
    HarmonicMap, derivative_bundle, dilatation, jacobian, pre_schwarzian_analytic, pre_schwarzian_cdo,
    pre_schwarzian_hm, q_functional, schwarzian_analytic, schwarzian_cdo, schwarzian_hm,
)
from harmschwarz.transforms import random_disk_points

Z = Identity()


def test_dilatation_examples():
    assert dilatation(HarmonicMap(Z, Z), 0.0) == 0
    f = fam.build("thm42-extremal", t=0.5)
    assert np.isclose(dilatation(f, 0.0), -0.5)
    g = fam.build("coeff-family", gamma=0.5)
    r = 0.3
    assert np.isclose(abs(dilatation(g, r)), (r + 0.5) / (1 + 0.5 * r))


def test_jacobian_examples():
    f = HarmonicMap(Z, Z)
    assert np.isclose(jacobian(f, 0.0), 1.0)
    assert np.isclose(jacobian(f, 0.5), 0.75)
    assert np.isclose(jacobian(fam.build("cubic-cdo"), 0.5), 0.9375)


def test_analytic_operators():
    assert pre_schwarzian_analytic(Z, 0.3) == 0 and schwarzian_analytic(Z, 0.3) == 0
    k = Z / (1 - Z)
    assert np.isclose(pre_schwarzian_analytic(k, 0.0), 2.0)
    assert abs(schwarzian_analytic(k, 0.0)) < 1e-14
    assert np.isclose(pre_schwarzian_analytic(k, 0.5), 4.0)


def test_q_functional_examples():
    assert q_functional(Z, 0.4) == 1
    k = Z / (1 - Z)
    assert np.isclose(q_functional(k, 0.3), 1.3 / 0.7)
    h = Polynomial([0, 1, -0.5])  # h' = 1 - z
    assert abs(q_functional(h, 0.5)) < 1e-15


def test_hm_operators_on_extremal_families():
    assert np.isclose(pre_schwarzian_hm(fam.build("thm42-extremal", t=0.5), 0.0), 2.5)
    assert np.isclose(schwarzian_hm(fam.build("thm43-extremal", t=0.5), 0.0), 2.25)
    assert np.isclose(schwarzian_hm(fam.build("thm43-extremal", t=0.0), 0.0), 2.0)


def test_thm42_real_axis_weighted_value_is_psi():
    t = 0.5
    f = fam.build("thm42-extremal", t=t)
    r = np.linspace(0.0, 0.99, 50)
    lhs = (1 - r**2) * np.abs(pre_schwarzian_hm(f, r))
    psi = 2 * (1 + r) - (r - t) / (1 - t * r)
    assert np.allclose(lhs, psi, atol=1e-12)


def test_cdo_operators_cubic():
    f = fam.build("cubic-cdo")
    assert np.isclose(pre_schwarzian_cdo(f, 0.5), 0.8)
    assert np.isclose(schwarzian_cdo(f, 0.5), -0.64)
    assert pre_schwarzian_cdo(f, 0.0) == 0


def test_analytic_reduction_exact():
    h = Power(2) * Z
    pts = random_disk_points(50, seed=1)
    f = HarmonicMap(h, Const(0.0), q=Const(0.0))
    assert np.array_equal(pre_schwarzian_hm(f, pts), pre_schwarzian_analytic(h, pts))
    assert np.array_equal(schwarzian_hm(f, pts), schwarzian_analytic(h, pts))
    assert np.allclose(pre_schwarzian_cdo(f, pts), pre_schwarzian_analytic(h, pts), atol=0)
    assert np.allclose(schwarzian_cdo(f, pts), schwarzian_analytic(h, pts), atol=0)


def test_missing_q():
    with pytest.raises(MissingQError):
        pre_schwarzian_cdo(HarmonicMap(Z, Z), 0.1)


def test_sense_error():
    f = HarmonicMap(Z, Const(1.0))
    with pytest.raises(SenseError):
        pre_schwarzian_hm(f, 0.1)


def test_bundle_has_positive_jacobian():
    b = derivative_bundle(fam.build("cor32-family", a=0.4 + 0.2j, phi=0.7), 0.3 - 0.2j)
    assert b.jacobian > 0 and b.p_cdo is not None
    assert derivative_bundle(HarmonicMap(Z, Z), 0.2).p_cdo is None


def test_q_squares_to_omega():
    for name, params in fam.Q_MEMBERS:
        assert fam.build(name, **params).q_residual(random_disk_points(100, seed=3)) < 1e-10


def test_normalization():
    for name, params in fam.F0_MEMBERS + fam.Q_MEMBERS:
        assert fam.build(name, **params).normalization_error() < 1e-12


def wirtinger(func, z, step=1e-5):
    dx = (func(z + step) - func(z - step)) / (2 * step)
    dy = (func(z + 1j * step) - func(z - 1j * step)) / (2 * step)
    return 0.5 * (dx - 1j * dy)


def test_wirtinger_identity_independent_oracle():
    pts = random_disk_points(100, radius=0.9, seed=11)
    for name, params in [("thm42-extremal", {"t": 0.7}), ("coeff-family", {"gamma": 0.5}), ("thm43-extremal", {"t": 0.5})]:
        f = fam.build(name, **params)
        p = lambda z: pre_schwarzian_hm(f, z)
        res = np.abs(schwarzian_hm(f, pts) - (wirtinger(p, pts) - 0.5 * p(pts) ** 2))
        assert res.max() < 1e-4
        # P_f is the z-derivative of log J
        logj = lambda z: np.log(jacobian(f, z))
        assert np.abs(p(pts) - wirtinger(logj, pts)).max() < 1e-4


def test_schwarz_pick_on_registry_dilatations():
    pts = random_disk_points(10_000, radius=0.8, seed=5)
    for name, params in fam.F0_MEMBERS + fam.Q_MEMBERS:
        w = jet_eval(fam.build(name, **params).omega, pts)
        lhs = (1 - np.abs(pts) ** 2) * np.abs(w.d1)
        assert np.all(lhs <= (1 - np.abs(w.v) ** 2) * (1 + 1e-12))


def test_pointwise_gap_bound():
    r0 = np.sqrt(np.sqrt(5) - 2)
    gap = 2 * r0 * (1 - r0**2) / (1 + r0**2)
    pts = random_disk_points(10_000, radius=0.9999, seed=6)
    for name, params in fam.Q_MEMBERS:
        f = fam.build(name, **params)
        lhs = (1 - np.abs(pts) ** 2) * np.abs(pre_schwarzian_cdo(f, pts) - pre_schwarzian_analytic(f.h, pts))
        aq = np.abs(jet_eval(f.q, pts).v)
        assert np.all(lhs <= 2 * aq * (1 - aq**2) / (1 + aq**2) + 1e-12)
        assert lhs.max() <= gap + 1e-12


def test_mobius_schwarzian_vanishes():
    rng = np.random.default_rng(9)
    for _ in range(20):
        a = 0.9 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        m = Mobius(MobiusParams(complex(a), float(rng.uniform(0, 6.28))))
        assert np.abs(schwarzian_analytic(m, random_disk_points(20, seed=int(rng.integers(1000))))).max() < 1e-10
