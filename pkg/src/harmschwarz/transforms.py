"""Koebe (linear-invariance) and affine transforms of harmonic maps."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .analytic import AnalyticFn, Compose, Const, Mobius, MobiusParams, jet_eval, mobius
from .errors import ConstructionError, DegenerateError, SenseError
from .harmonic import (
    SENSE_TOL,
    HarmonicMap,
    pre_schwarzian_analytic,
    pre_schwarzian_hm,
    schwarzian_analytic,
    schwarzian_hm,
)


@dataclass(frozen=True)
class AffineParams:
    epsilon: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "epsilon", complex(self.epsilon))
        if not abs(self.epsilon) < 1.0:
            raise ConstructionError(f"affine parameter must satisfy |eps| < 1, got {self.epsilon}")


def koebe_transform(f: HarmonicMap, phi: MobiusParams) -> HarmonicMap:
    """``L_phi(f) = (f o phi - f(phi(0))) / (h'(phi(0)) phi'(0))`` as a new (H, omega_F) pair.

    With ``c = h'(phi(0)) phi'(0)`` one has ``H = (h o phi - h(phi(0))) / c`` and
    ``G = (g o phi - g(phi(0))) / conj(c)``, so ``omega_F = (c / conj(c)) omega o phi``.
    """
    p = mobius(phi)
    pj = jet_eval(p, 0.0)
    w0 = pj.v
    if abs(jet_eval(f.omega, w0).v) >= 1.0 - SENSE_TOL:
        raise SenseError("Koebe transform base point is not sense-preserving", w0)
    hj = jet_eval(f.h, w0)
    c = hj.d1 * pj.d1
    H = (Compose(f.h, p) - hj.v) * (1.0 / c)
    unit = c / c.conjugate()
    omega = Const(unit) * Compose(f.omega, p)
    q = None
    if f.q is not None:
        q = Const(c / abs(c)) * Compose(f.q, p)
    return HarmonicMap(H, omega, q)


def affine_transform(f: HarmonicMap, params: AffineParams) -> HarmonicMap:
    """``(f - conj(eps f)) / (1 - conj(eps) g'(0))`` in (h, omega) form.

    The analytic part becomes ``(h - conj(eps) g) / d`` and the dilatation
    ``(d / conj(d)) (omega - eps) / (1 - conj(eps) omega)`` where ``d`` is the
    normalizing denominator.
    """
    eps = params.epsilon
    if eps == 0:
        return f
    gp0 = jet_eval(f.omega, 0.0).v * jet_eval(f.h, 0.0).d1
    d = 1.0 - eps.conjugate() * gp0
    if abs(d) < 1e-12:
        raise DegenerateError("1 - conj(eps) g'(0) vanishes")
    h_new = (f.h - eps.conjugate() * f.g()) * (1.0 / d)
    outer = Mobius(MobiusParams(eps, cmath.phase(d / d.conjugate())))
    omega = Compose(outer, f.omega)
    # the square root of the new dilatation is not a composition with q in general
    return HarmonicMap(h_new, omega, None)


def rotate(f: HarmonicMap, theta: float) -> HarmonicMap:
    """``e^{-i theta} f(e^{i theta} z)``."""
    u = cmath.exp(1j * theta)
    rot = Mobius(MobiusParams(0j, theta))
    h = Const(1.0 / u) * Compose(f.h, rot)
    omega = Const(u * u) * Compose(f.omega, rot)
    q = Const(u) * Compose(f.q, rot) if f.q is not None else None
    return HarmonicMap(h, omega, q)


def chain_rule_residuals(f: HarmonicMap, phi: MobiusParams, samples: int = 100,
                         radius: float = 0.8, seed: int = 42) -> tuple[float, float]:
    """Max residuals of the pre-Schwarzian and Schwarzian chain rules on random points."""
    z = random_disk_points(samples, radius, seed)
    p = mobius(phi)
    pj = jet_eval(p, z)
    fp = f.compose(p)
    lhs_p = pre_schwarzian_hm(fp, z)
    rhs_p = pre_schwarzian_hm(f, pj.v) * pj.d1 + pre_schwarzian_analytic(p, z)
    lhs_s = schwarzian_hm(fp, z)
    rhs_s = schwarzian_hm(f, pj.v) * pj.d1**2 + schwarzian_analytic(p, z)
    return float(np.max(np.abs(lhs_p - rhs_p))), float(np.max(np.abs(lhs_s - rhs_s)))


def random_disk_points(n: int, radius: float = 0.8, seed: int = 42) -> np.ndarray:
    """Uniform samples on the disk ``|z| <= radius``."""
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.random(n))
    return r * np.exp(2j * np.pi * rng.random(n))


def automorphism_fit_residual(omega: AnalyticFn, n_check: int = 64, seed: int = 7) -> float:
    """How far ``omega`` is from a disk automorphism.

    A Mobius map is fitted through three interior points; the residual is the
    larger of the misfit at ``n_check`` further points and the deviation of
    the fitted map's boundary image from the unit circle.
    """
    nodes = np.array([0.0, 0.5, 0.5j], dtype=complex)
    w = np.asarray(jet_eval(omega, nodes).v)
    # (a z + b) - w (c z + d) = 0, normalized with d = 1 unless degenerate
    A = np.column_stack([nodes, np.ones(3), -w * nodes, -w])
    _, _, vh = np.linalg.svd(A)
    a, b, c, d = vh[-1].conj()

    def fit(x):
        return (a * x + b) / (c * x + d)

    pts = random_disk_points(n_check, 0.9, seed)
    misfit = np.max(np.abs(fit(pts) - jet_eval(omega, pts).v))
    circle = np.exp(2j * np.pi * np.arange(64) / 64)
    with np.errstate(divide="ignore", invalid="ignore"):
        ring = np.abs(np.abs(fit(circle)) - 1.0)
    ring = np.where(np.isfinite(ring), ring, np.inf)
    return float(max(misfit, np.max(ring)))

