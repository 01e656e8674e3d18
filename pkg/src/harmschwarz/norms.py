"""Sampled suprema of weighted derivative moduli over the unit disk.

Every estimate is a lower bound of the true supremum: the reported value is
the functional re-evaluated at the reported argmax.  Grids are polar, with
radii log-spaced in ``1 - r`` so that boundary behaviour is resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .harmonic import PRE, SCHWARZIAN, HarmonicMap
from .analytic import jet_eval

Functional = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class GridConfig:
    n_theta: int = 256
    n_radii: int = 200
    r_max: float = 1.0 - 1e-6
    refine: bool = True
    refine_tol: float = 1e-9
    n_starts: int = 5
    max_refine_evals: int = 600

    def __post_init__(self):
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")
        if self.n_radii < 2 or self.n_theta < 1:
            raise ValueError("grid needs n_radii >= 2 and n_theta >= 1")

    @property
    def radii(self) -> np.ndarray:
        gaps = np.logspace(0.0, math.log10(1.0 - self.r_max), self.n_radii)
        r = 1.0 - gaps
        r[0], r[-1] = 0.0, self.r_max
        return r

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.n_theta) / self.n_theta


@dataclass(frozen=True)
class NormEstimate:
    value: float
    argmax: complex
    boundary_limit: bool
    evaluations: int
    extra: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "argmax": self.argmax,
            "argmax_r": abs(self.argmax),
            "argmax_theta": math.atan2(self.argmax.imag, self.argmax.real) % (2 * math.pi),
            "boundary_limit": self.boundary_limit,
            "evaluations": self.evaluations,
        }


def _reflect(r: float, r_max: float) -> float:
    # fold r onto [0, r_max]
    period = 2.0 * r_max
    r = math.fmod(abs(r), period)
    return period - r if r > r_max else r


def sup_on_disk(functional: Functional, cfg: GridConfig = GridConfig()) -> NormEstimate:
    """Grid maximum of ``functional`` followed by Nelder-Mead refinement in (r, theta)."""
    radii, angles = cfg.radii, cfg.angles
    z = radii[:, None] * np.exp(1j * angles)[None, :]
    vals = np.asarray(functional(z), dtype=float)
    evaluations = vals.size
    flat = np.where(np.isfinite(vals), vals, -np.inf).ravel()
    # stable sort keeps radius-major order, so ties go to the smallest radius, then angle
    order = np.argsort(-flat, kind="stable")
    best_idx = int(order[0])
    best_z = complex(z.ravel()[best_idx])
    best_val = float(functional(np.asarray(best_z)))

    if cfg.refine:
        starts = [int(i) for i in order[: cfg.n_starts]]
        dtheta = angles[1] - angles[0] if len(angles) > 1 else math.pi
        for idx in starts:
            ir, it = divmod(idx, len(angles))
            dr = 0.5 * (radii[min(ir + 1, len(radii) - 1)] - radii[max(ir - 1, 0)])

            def point(x):
                return _reflect(x[0], cfg.r_max) * complex(math.cos(x[1]), math.sin(x[1]))

            def objective(x):
                return -float(functional(np.asarray(point(x))))

            x0 = np.array([radii[ir], angles[it]])
            simplex = np.array([x0, x0 + [dr, 0.0], x0 + [0.0, 0.5 * dtheta]])
            res = minimize(
                objective,
                x0,
                method="Nelder-Mead",
                options={
                    "initial_simplex": simplex,
                    "xatol": cfg.refine_tol,
                    "fatol": 1e-14,
                    # flat ridges along |z| = r_max never meet xatol
                    "maxfev": cfg.max_refine_evals,
                },
            )
            evaluations += res.nfev
            cand = point(res.x)
            val = float(functional(np.asarray(cand)))
            if val > best_val:
                best_val, best_z = val, cand

    boundary = abs(best_z) >= cfg.radii[-2]
    return NormEstimate(best_val, best_z, bool(boundary), int(evaluations))


def sup_on_segment(functional: Functional, angle: float = 0.0, r_max: float = 1.0 - 1e-6,
                   step: float = 1e-6) -> NormEstimate:
    """Brute-force maximum along the ray ``r e^{i angle}``, ``0 <= r <= r_max``."""
    r = np.arange(0.0, r_max, step)
    r = np.append(r, r_max)
    z = r * np.exp(1j * angle)
    best, best_i, n = -np.inf, 0, 0
    for lo in range(0, len(z), 200_000):
        v = np.asarray(functional(z[lo : lo + 200_000]), dtype=float)
        i = int(np.argmax(v))
        n += v.size
        if v[i] > best:
            best, best_i = float(v[i]), lo + i
    zb = complex(z[best_i])
    return NormEstimate(float(functional(np.asarray(zb))), zb, bool(best_i >= len(z) - 2), n)


def pre_schwarzian_weighted(f: HarmonicMap, flavor: str) -> Functional:
    op = PRE[flavor]
    return lambda z: (1.0 - np.abs(z) ** 2) * np.abs(op(f, z))


def schwarzian_weighted(f: HarmonicMap, flavor: str) -> Functional:
    op = SCHWARZIAN[flavor]
    return lambda z: (1.0 - np.abs(z) ** 2) ** 2 * np.abs(op(f, z))


def bloch_weighted(f: HarmonicMap) -> Functional:
    def func(z):
        hp = jet_eval(f.h, z, values=False).d1
        w = jet_eval(f.omega, z).v
        return (1.0 - np.abs(z) ** 2) * np.abs(hp) * (1.0 + np.abs(w))

    return func


def norm_pre_schwarzian(f: HarmonicMap, flavor: str = "hm", cfg: GridConfig = GridConfig()) -> NormEstimate:
    return sup_on_disk(pre_schwarzian_weighted(f, flavor), cfg)


def norm_schwarzian(f: HarmonicMap, flavor: str = "hm", cfg: GridConfig = GridConfig()) -> NormEstimate:
    return sup_on_disk(schwarzian_weighted(f, flavor), cfg)


def bloch_constant(f: HarmonicMap, cfg: GridConfig = GridConfig()) -> NormEstimate:
    return sup_on_disk(bloch_weighted(f), cfg)


FUNCTIONALS = {
    "pre": pre_schwarzian_weighted,
    "schwarzian": schwarzian_weighted,
    "bloch": lambda f, flavor=None: bloch_weighted(f),
}


def estimate(f: HarmonicMap, which: str, flavor: str = "hm", cfg: GridConfig = GridConfig()) -> NormEstimate:
    return sup_on_disk(FUNCTIONALS[which](f, flavor), cfg)
