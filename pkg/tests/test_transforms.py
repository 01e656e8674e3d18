import numpy as np
import pytest

from harmschwarz import families as fam
from harmschwarz.analytic import MobiusParams, jet_eval, mobius, series_from
from harmschwarz.errors import ConstructionError
from harmschwarz.harmonic import HarmonicMap, pre_schwarzian_hm, q_functional, schwarzian_hm
from harmschwarz.transforms import (
    AffineParams, affine_transform, automorphism_fit_residual, chain_rule_residuals, koebe_transform,
    random_disk_points,
)

Z = fam.Z


def random_params(rng, radius=0.7):
    a = radius * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    return MobiusParams(complex(a), float(rng.uniform(0, 2 * np.pi)))


def random_f0(rng):
    name, params = fam.F0_MEMBERS[rng.integers(len(fam.F0_MEMBERS))]
    return fam.build(name, **params)


def test_identity_koebe_is_identity():
    f = fam.build("coeff-family", gamma=0.5)
    g = koebe_transform(f, MobiusParams(0j, 0.0))
    pts = random_disk_points(30, seed=1)
    assert np.abs(g.value(pts) - f.value(pts)).max() < 1e-12


def test_koebe_normalization_and_series():
    rng = np.random.default_rng(3)
    for _ in range(10):
        F = koebe_transform(random_f0(rng), random_params(rng))
        assert F.normalization_error() < 1e-12
        g = series_from(F.g(), order=6)
        assert abs(g.coeffs[0]) < 1e-15


def test_koebe_dilatation_matches_wirtinger_oracle():
    f = fam.build("thm42-extremal", t=0.7)
    phi = MobiusParams(0.3 - 0.2j, 1.1)
    F = koebe_transform(f, phi)
    m = mobius(phi)
    w0 = complex(m(0.0))
    c = complex(jet_eval(f.h, w0).d1) * complex(jet_eval(m, 0.0).d1)

    def Fval(z):
        return (f.value(m(z)) - f.value(w0)) / c

    step = 1e-5
    for z in random_disk_points(20, radius=0.6, seed=4):
        dx = (Fval(z + step) - Fval(z - step)) / (2 * step)
        dy = (Fval(z + 1j * step) - Fval(z - 1j * step)) / (2 * step)
        fz, fzbar = 0.5 * (dx - 1j * dy), 0.5 * (dx + 1j * dy)
        assert abs(np.conj(fzbar) / fz - jet_eval(F.omega, z).v) < 1e-7
        assert abs(fz - jet_eval(F.h, z).d1) < 1e-7


def test_koebe_preserves_f0():
    rng = np.random.default_rng(8)
    pts = random_disk_points(500, radius=0.999, seed=9)
    for _ in range(20):
        F = koebe_transform(random_f0(rng), random_params(rng))
        assert automorphism_fit_residual(F.omega) < 1e-9
        assert np.min(q_functional(F.h, pts).real) > 0


def test_koebe_group_action_dilatation_orbits():
    f = fam.build("coeff-family", gamma=0.4)
    p1, p2 = MobiusParams(0.2 + 0.1j, 0.5), MobiusParams(-0.3j, 2.0)
    two = koebe_transform(koebe_transform(f, p1), p2)
    pts = random_disk_points(40, seed=2)
    w_two = jet_eval(two.omega, pts).v
    # single transform by the composite automorphism phi1 o phi2
    comp = mobius(p1).compose(mobius(p2))
    jc = jet_eval(comp, 0.0)
    h_c = jet_eval(f.h, jc.v).d1 * jc.d1
    w_single = (h_c / np.conj(h_c)) * jet_eval(f.omega, jet_eval(comp, pts).v).v
    ratio = w_two / w_single
    assert np.allclose(np.abs(ratio), 1, atol=1e-9)
    assert np.ptp(ratio.real) < 1e-9 and np.ptp(ratio.imag) < 1e-9


def test_chain_rule_identity_phi():
    f = fam.build("thm42-extremal", t=0.5)
    assert chain_rule_residuals(f, MobiusParams(0j, 0.0)) == (0.0, 0.0)


def test_chain_rule_random():
    rng = np.random.default_rng(21)
    for _ in range(5):
        p, s = chain_rule_residuals(random_f0(rng), random_params(rng))
        assert p < 1e-6 and s < 1e-6


def test_affine_identity_and_params():
    f = fam.build("coeff-family", gamma=0.3)
    g = affine_transform(f, AffineParams(0j))
    pts = random_disk_points(20, seed=5)
    assert np.abs(g.value(pts) - f.value(pts)).max() < 1e-12
    with pytest.raises(ConstructionError):
        AffineParams(1.0)


def test_affine_invariance_of_hm_derivatives():
    rng = np.random.default_rng(13)
    pts = random_disk_points(100, seed=6)
    for name, params in [("coeff-family", {"gamma": 0.5}), ("thm43-extremal", {"t": 0.5}), ("thm42-extremal", {"t": 0.7})]:
        f = fam.build(name, **params)
        eps = complex(0.8 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))
        A = affine_transform(f, AffineParams(eps))
        assert np.abs(pre_schwarzian_hm(A, pts) - pre_schwarzian_hm(f, pts)).max() < 1e-9
        assert np.abs(schwarzian_hm(A, pts) - schwarzian_hm(f, pts)).max() < 1e-9


def test_affine_image_leaves_f0_by_losing_convexity():
    # h = z, omega = z: the new dilatation is still an automorphism,
    # but h_A = z - conj(eps) z^2 / 2 stops being convex once |eps| > 1/2
    f = HarmonicMap(Z, Z)
    pts = random_disk_points(2000, radius=0.999, seed=7)
    for eps in (0.6, 0.8j, -0.9):
        A = affine_transform(f, AffineParams(eps))
        assert automorphism_fit_residual(A.omega) < 1e-9
        assert np.min(q_functional(A.h, pts).real) < -1e-3
    A = affine_transform(f, AffineParams(0.4))
    assert np.min(q_functional(A.h, pts).real) > 0
