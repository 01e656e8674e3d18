"""Taylor coefficients of the co-analytic part and the bounds they obey."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .analytic import jet_eval, series_from
from .errors import HarmonicError, SeriesError
from .harmonic import HarmonicMap


def g_coefficients(f: HarmonicMap, n_max: int) -> np.ndarray:
    """``b_1 .. b_{n_max}`` of ``g`` where ``g' = omega h'`` and ``g(0) = 0``."""
    try:
        hp = series_from(f.h, n_max).derivative()
        gp = series_from(f.omega, n_max - 1) * hp
    except HarmonicError as exc:
        raise SeriesError(f"cannot expand map at 0: {exc}") from exc
    return gp.integrate().coeffs[1 : n_max + 1].copy()


def zg_prime_coefficients(f: HarmonicMap, n_max: int) -> np.ndarray:
    """Coefficients ``n b_n`` of ``z g'(z)``, n = 1..n_max."""
    return np.arange(1, n_max + 1) * g_coefficients(f, n_max)


@dataclass(frozen=True)
class CoefficientReport:
    max_abs: float
    argmax_n: int
    bound: float
    passed: bool
    coefficients: np.ndarray = field(repr=False, compare=False)


def coefficient_bound_check(f: HarmonicMap, n_max: int = 50, tol: float = 1e-10) -> CoefficientReport:
    b = np.abs(g_coefficients(f, n_max))
    i = int(np.argmax(b))
    return CoefficientReport(float(b[i]), i + 1, 1.0, bool(b[i] <= 1.0 + tol), g_coefficients(f, n_max))


@dataclass(frozen=True)
class DistortionReport:
    gamma: float
    worst_h_lower: float
    worst_h_upper: float
    worst_omega_lower: float
    worst_omega_upper: float
    worst_g_upper: float
    passed: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def distortion_check(f: HarmonicMap, radii, n_angles: int = 256, slack: float = 1e-9) -> DistortionReport:
    """Check the convex-distortion, Mobius-modulus and |g'| bands on circles.

    ``gamma`` is ``|omega(0)|``, the modulus parameter of an automorphic
    dilatation.  Each ``worst_*`` entry is the largest violation margin found
    (negative means the band holds with room to spare).
    """
    gamma = abs(complex(jet_eval(f.omega, 0.0).v))
    r = np.asarray(radii, dtype=float)[:, None]
    z = r * np.exp(2j * np.pi * np.arange(n_angles) / n_angles)[None, :]
    hp = np.abs(jet_eval(f.h, z, values=False).d1)
    w = np.abs(jet_eval(f.omega, z).v)
    gp = w * hp
    margins = {
        "worst_h_lower": np.max(1.0 / (1.0 + r) ** 2 - hp),
        "worst_h_upper": np.max(hp - 1.0 / (1.0 - r) ** 2),
        "worst_omega_lower": np.max(np.abs(r - gamma) / (1.0 - gamma * r) - w),
        "worst_omega_upper": np.max(w - (r + gamma) / (1.0 + gamma * r)),
        "worst_g_upper": np.max(gp - 1.0 / (1.0 - r) ** 2),
    }
    passed = all(m <= slack for m in margins.values())
    return DistortionReport(gamma, *(float(m) for m in margins.values()), bool(passed))
