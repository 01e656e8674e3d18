"""Harmonic maps ``f = h + conj(g)`` stored as the pair (h, omega) with g' = omega h'.

All operators accept a scalar point or a numpy array of points and return
values of the same shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analytic import AnalyticFn, Antiderivative, Compose, jet_eval
from .errors import MissingQError, SenseError, SingularityError
from .jets import SINGULAR_TOL, Jet3

SENSE_TOL = 1e-12


@dataclass(frozen=True)
class HarmonicMap:
    h: AnalyticFn
    omega: AnalyticFn
    q: Optional[AnalyticFn] = None

    def g(self) -> AnalyticFn:
        """Co-analytic part normalized by g(0) = 0."""
        hp = self.h.integrand if isinstance(self.h, Antiderivative) else _HPrime(self.h)
        return Antiderivative(self.omega * hp)

    def value(self, z):
        """``h(z) + conj(g(z))``."""
        return jet_eval(self.h, z).v + np.conj(jet_eval(self.g(), z).v)

    def compose(self, phi: AnalyticFn) -> "HarmonicMap":
        """``f o phi`` for analytic phi; its dilatation is ``omega o phi``."""
        q = Compose(self.q, phi) if self.q is not None else None
        return HarmonicMap(Compose(self.h, phi), Compose(self.omega, phi), q)

    def normalization_error(self) -> float:
        j = jet_eval(self.h, 0.0)
        return max(abs(j.v), abs(j.d1 - 1.0))

    def q_residual(self, z) -> float:
        if self.q is None:
            raise MissingQError("map has no square-root dilatation")
        return float(np.max(np.abs(jet_eval(self.q, z).v ** 2 - jet_eval(self.omega, z).v)))


@dataclass(frozen=True, eq=False)
class _HPrime(AnalyticFn):
    """Derivative node used only to build g' = omega h' (needs h'''' never)."""

    h: AnalyticFn

    def _jet(self, z, values=True):
        j = self.h._jet(z, values=False)
        # Third derivative of h' would need h''''; g's jet only reads up to d2 of g'.
        return Jet3(j.d1, j.d2, j.d3, np.full_like(j.d3, np.nan))

    def _series(self, center, order):
        return self.h._series(center, order + 1).derivative()


@dataclass(frozen=True)
class DerivativeBundle:
    p_analytic: complex
    s_analytic: complex
    p_hm: complex
    s_hm: complex
    p_cdo: Optional[complex]
    s_cdo: Optional[complex]
    jacobian: float
    omega_value: complex
    q_functional: complex


def _h_ratios(h: AnalyticFn, z):
    j = jet_eval(h, z, values=False)
    bad = np.abs(j.d1) < SINGULAR_TOL
    if np.any(bad):
        raise SingularityError("h' vanishes", _first(z, bad))
    p = j.d2 / j.d1
    return j, p, j.d3 / j.d1 - 1.5 * p * p


def _first(z, mask):
    if np.ndim(mask) == 0:
        return complex(z)
    return complex(np.broadcast_to(np.asarray(z, dtype=complex), mask.shape)[mask].ravel()[0])


def _omega_jet(f: HarmonicMap, z) -> Jet3:
    w = jet_eval(f.omega, z)
    bad = np.abs(w.v) >= 1.0 - SENSE_TOL
    if np.any(bad):
        raise SenseError("|omega| >= 1: not sense-preserving", _first(z, bad))
    return w


def dilatation(f: HarmonicMap, z):
    return _omega_jet(f, z).v


def jacobian(f: HarmonicMap, z):
    hp = jet_eval(f.h, z, values=False).d1
    w = jet_eval(f.omega, z).v
    return np.abs(hp) ** 2 * (1.0 - np.abs(w) ** 2)


def pre_schwarzian_analytic(h: AnalyticFn, z):
    return _h_ratios(h, z)[1]


def schwarzian_analytic(h: AnalyticFn, z):
    return _h_ratios(h, z)[2]


def q_functional(h: AnalyticFn, z):
    return 1.0 + np.asarray(z) * _h_ratios(h, z)[1]


def _hm_terms(f: HarmonicMap, z):
    _, p, s = _h_ratios(f.h, z)
    w = _omega_jet(f, z)
    k = np.conj(w.v) / (1.0 - np.abs(w.v) ** 2)
    return p, s, w, k


def pre_schwarzian_hm(f: HarmonicMap, z):
    """``(log J_f)_z = h''/h' - conj(w) w' / (1 - |w|^2)``."""
    p, _, w, k = _hm_terms(f, z)
    return p - k * w.d1


def schwarzian_hm(f: HarmonicMap, z):
    p, s, w, k = _hm_terms(f, z)
    return s + k * (p * w.d1 - w.d2) - 1.5 * (w.d1 * k) ** 2


def _cdo_terms(f: HarmonicMap, z):
    if f.q is None:
        raise MissingQError("CDO operators need the square-root dilatation q")
    _, p, s = _h_ratios(f.h, z)
    q = jet_eval(f.q, z)
    k = np.conj(q.v) / (1.0 + np.abs(q.v) ** 2)
    return p, s, q, k


def pre_schwarzian_cdo(f: HarmonicMap, z):
    """``h''/h' + 2 conj(q) q' / (1 + |q|^2)``."""
    p, _, q, k = _cdo_terms(f, z)
    return p + 2.0 * k * q.d1


def schwarzian_cdo(f: HarmonicMap, z):
    p, s, q, k = _cdo_terms(f, z)
    return s + 2.0 * k * (q.d2 - p * q.d1) - 4.0 * (q.d1 * k) ** 2


def derivative_bundle(f: HarmonicMap, z: complex) -> DerivativeBundle:
    z = complex(z)
    cdo = f.q is not None
    return DerivativeBundle(
        p_analytic=complex(pre_schwarzian_analytic(f.h, z)),
        s_analytic=complex(schwarzian_analytic(f.h, z)),
        p_hm=complex(pre_schwarzian_hm(f, z)),
        s_hm=complex(schwarzian_hm(f, z)),
        p_cdo=complex(pre_schwarzian_cdo(f, z)) if cdo else None,
        s_cdo=complex(schwarzian_cdo(f, z)) if cdo else None,
        jacobian=float(jacobian(f, z)),
        omega_value=complex(dilatation(f, z)),
        q_functional=complex(q_functional(f.h, z)),
    )


PRE = {
    "analytic": lambda f, z: pre_schwarzian_analytic(f.h, z),
    "hm": pre_schwarzian_hm,
    "cdo": pre_schwarzian_cdo,
}
SCHWARZIAN = {
    "analytic": lambda f, z: schwarzian_analytic(f.h, z),
    "hm": schwarzian_hm,
    "cdo": schwarzian_cdo,
}
