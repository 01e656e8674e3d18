"""Verification suites: sharp constants, bound checks and identity residuals.

Each suite is a list of named checks.  Upper bounds are phrased as
"sampled value <= bound + slack" and sharpness as "sampled value >= target -
slack"; a finite grid cannot certify a supremum from above.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import families as fam
from .analytic import MobiusParams, jet_eval, mobius
from .coeffs import coefficient_bound_check, distortion_check, g_coefficients, zg_prime_coefficients
from .harmonic import (
    HarmonicMap,
    jacobian,
    pre_schwarzian_analytic,
    pre_schwarzian_cdo,
    pre_schwarzian_hm,
    q_functional,
    schwarzian_analytic,
    schwarzian_cdo,
    schwarzian_hm,
)
from .norms import GridConfig, norm_pre_schwarzian, norm_schwarzian, pre_schwarzian_weighted, sup_on_segment
from .transforms import (
    AffineParams,
    affine_transform,
    automorphism_fit_residual,
    chain_rule_residuals,
    koebe_transform,
    random_disk_points,
)

WIRTINGER_STEP = 1e-5


@dataclass
class Check:
    name: str
    claim: str
    value: float
    bound: float
    relation: str  # "<=" or ">="
    passed: bool = field(init=False)

    def __post_init__(self):
        self.value = float(self.value)
        self.bound = float(self.bound)
        if math.isnan(self.value):
            self.passed = False
        elif self.relation == "<=":
            self.passed = bool(self.value <= self.bound)
        elif self.relation == ">=":
            self.passed = bool(self.value >= self.bound)
        else:
            raise ValueError(self.relation)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "value": self.value,
            "relation": self.relation,
            "bound": self.bound,
            "passed": self.passed,
        }


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check]
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  {mark}  {c.name:<{width}}  {c.value:.10g} {c.relation} {c.bound:.10g}   [{c.claim}]")
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _worst(*xs) -> float:
    """Maximum that propagates NaN (the builtin max silently drops it)."""
    arr = np.array([np.max(x) for x in xs], dtype=float)
    return float(np.nan) if np.any(np.isnan(arr)) else float(np.max(arr))


def _members(pairs):
    return [(f"{n}{_fmt(p)}", fam.build(n, **p)) for n, p in pairs]


def _fmt(p: dict) -> str:
    return "(" + ",".join(f"{k}={v}" for k, v in p.items()) + ")" if p else ""


def wirtinger_dz(func: Callable, z, step: float = WIRTINGER_STEP):
    """Central-difference ``d/dz = (d/dx - i d/dy) / 2``."""
    dx = (func(z + step) - func(z - step)) / (2 * step)
    dy = (func(z + 1j * step) - func(z - 1j * step)) / (2 * step)
    return 0.5 * (dx - 1j * dy)


# -- gap constant and corollaries ----------------------------------------------


def pointwise_gap(f: HarmonicMap, z):
    """``(1 - |z|^2) |P_cdo - P_h|`` together with its Schwarz-Pick majorant in |q|."""
    lhs = (1 - np.abs(z) ** 2) * np.abs(pre_schwarzian_cdo(f, z) - pre_schwarzian_analytic(f.h, z))
    aq = np.abs(jet_eval(f.q, z).v)
    return lhs, 2 * aq * (1 - aq**2) / (1 + aq**2)


def suite_thm31(cfg: GridConfig, seed: int = 42) -> list[Check]:
    checks = []
    cubic = fam.build("cubic-cdo")
    est = norm_pre_schwarzian(cubic, "cdo", cfg)
    checks.append(Check("cubic-cdo |norm - gap|", "cdo norm of z + conj(z^3/3) equals the gap constant",
                        abs(est.value - fam.GAP), 1e-3, "<="))
    checks.append(Check("cubic-cdo sharpness", "gap constant is attained", est.value, 0.6005 - 1e-3, ">="))
    z = _gap_samples(10_000, seed)
    worst, worst_major = 0.0, 0.0
    for label, f in _members(fam.Q_MEMBERS):
        cdo = norm_pre_schwarzian(f, "cdo", cfg).value
        ana = norm_pre_schwarzian(f, "analytic", cfg).value
        checks.append(Check(f"norm gap {label}", "| ||P_cdo|| - ||P_h|| | <= gap constant",
                            abs(cdo - ana), 0.600566 + 1e-6, "<="))
        lhs, major = pointwise_gap(f, z)
        worst = _worst(worst, lhs)
        worst_major = _worst(worst_major, lhs - major)
    checks.append(Check("pointwise gap, 1e4 samples", "(1-|z|^2)|P_cdo - P_h| <= gap constant",
                        worst, 0.600566 + 1e-6, "<="))
    checks.append(Check("pointwise gap vs |q| majorant", "(1-|z|^2)|P_cdo - P_h| <= 2|q|(1-|q|^2)/(1+|q|^2)",
                        worst_major, 1e-12, "<="))
    return checks


def _gap_samples(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    r = (1 - 1e-6) * np.sqrt(rng.random(n))
    return r * np.exp(2j * np.pi * rng.random(n))


def _corollary(family: str, bound: float, cfg: GridConfig, claim: str, qlo=None, qhi=None, seed=42):
    checks = []
    z = random_disk_points(2000, 1 - 1e-4, seed)
    for label, f in _members([m for m in fam.Q_MEMBERS if m[0] == family]):
        if qlo is not None:
            re_q = np.real(q_functional(f.h, z))
            checks.append(Check(f"Re Q_h lower {label}", f"Re Q_h > {qlo}", float(np.min(re_q)), qlo, ">="))
            checks.append(Check(f"Re Q_h upper {label}", f"Re Q_h < {qhi}", float(np.max(re_q)), qhi, "<="))
        est = norm_pre_schwarzian(f, "cdo", cfg)
        checks.append(Check(f"cdo norm {label}", claim, est.value, bound + 1e-6, "<="))
    return checks


def suite_cor32(cfg, seed=42):
    return _corollary("cor32-family", 6.600566, cfg, "||P_cdo|| <= 6 + gap when Re Q_h > -1/2",
                      qlo=-0.5, qhi=math.inf, seed=seed)


def suite_cor33(cfg, seed=42):
    return _corollary("cor33-family", 2.600566, cfg, "||P_cdo|| <= 2 + gap when Re Q_h < 3/2",
                      qlo=-math.inf, qhi=1.5, seed=seed)


def suite_cor34(cfg, seed=42):
    return _corollary("cor34-family", 2.600566, cfg, "||P_cdo|| <= 2 + gap when -1/2 < Re Q_h < 3/2",
                      qlo=-0.5, qhi=1.5, seed=seed)


# -- F0 pre-Schwarzian and Schwarzian norms ------------------------------------------


def thm42_real_axis_sup(t: float, step: float = 1e-6) -> float:
    f = fam.build("thm42-extremal", t=t)
    return sup_on_segment(pre_schwarzian_weighted(f, "hm"), 0.0, 1 - 1e-6, step).value


def suite_thm42(cfg, seed=42):
    checks = []
    for t in (0.5, 0.7, 0.9):
        checks.append(Check(f"real-axis sup t={t}", "max of (1-r^2)|P_f(r)| equals M_t",
                            abs(thm42_real_axis_sup(t) - fam.thm42_m(t)), 1e-5, "<="))
    grid = np.round(np.arange(0.5, 0.951, 0.05), 10)
    m = np.array([fam.thm42_m(t) for t in grid])
    checks.append(Check("M_t increasing", "M_t increases on t = 0.5..0.95", float(np.min(np.diff(m))), 0.0, ">="))
    checks.append(Check("M_0.999", "M_t approaches 5", fam.thm42_m(0.999), 4.9, ">="))
    est = norm_pre_schwarzian(fam.build("thm42-extremal", t=0.99), "hm", cfg)
    checks.append(Check("full-disk norm t=0.99 vs M", "M_t <= ||P_f_t||", est.value - fam.thm42_m(0.99), -1e-9, ">="))
    for label, f in _members(fam.F0_MEMBERS):
        checks.append(Check(f"||P_f|| {label}", "||P_f|| <= 5 on F0", norm_pre_schwarzian(f, "hm", cfg).value,
                            5 + 1e-6, "<="))
    return checks


def suite_thm43(cfg, seed=42):
    checks = []
    for t in (0.0, 0.5, 0.9, 0.99):
        s0 = complex(schwarzian_hm(fam.build("thm43-extremal", t=t), 0.0))
        checks.append(Check(f"S_f(0) t={t}", "S_f_t(0) = 2 + t^2", abs(s0 - (2 + t * t)), 1e-9, "<="))
    s99 = abs(complex(schwarzian_hm(fam.build("thm43-extremal", t=0.99), 0.0)))
    checks.append(Check("S_f(0) t=0.99", "2 + t^2 tends to 3", s99, 2.98, ">="))
    for label, f in _members(fam.F0_MEMBERS):
        checks.append(Check(f"||S_f|| {label}", "||S_f|| <= 3 on F0", norm_schwarzian(f, "hm", cfg).value,
                            3 + 1e-6, "<="))
    checks.append(Check("Koebe invariance of weighted S", "(1-|z|^2)^2 |S_f(z)| = |S_{L_phi f}(0)|",
                        koebe_schwarzian_residual(seed), 1e-8, "<="))
    return checks


def koebe_schwarzian_residual(seed: int = 42, n: int = 20) -> float:
    worst = 0.0
    rng = np.random.default_rng(seed)
    members = _members(fam.F0_MEMBERS)
    for z in random_disk_points(n, 0.8, seed):
        label, f = members[int(rng.integers(len(members)))]
        theta = float(rng.uniform(0, 2 * np.pi))
        phi = MobiusParams(-z * np.exp(-1j * theta), theta)  # phi(0) = z
        lhs = (1 - abs(z) ** 2) ** 2 * abs(complex(schwarzian_hm(f, z)))
        rhs = abs(complex(schwarzian_hm(koebe_transform(f, phi), 0.0)))
        worst = _worst(worst, abs(lhs - rhs))
    return worst


# -- coefficients and distortion -------------------------------------------------------


GAMMAS = (0.0, 0.25, 0.5, 0.75, 0.9, 0.99)


def suite_thm45(cfg=None, seed=42):
    checks = []
    n = np.arange(1, 51)
    worst = 0.0
    for g in GAMMAS:
        b = g_coefficients(fam.build("coeff-family", gamma=g), 50)
        ref = np.array([fam.coeff_bn(g, k) for k in n])
        worst = _worst(worst, np.abs(b - ref))
        checks.append(Check(f"max|b_n| gamma={g}", "|b_n| <= 1",
                            coefficient_bound_check(fam.build("coeff-family", gamma=g), 50).max_abs, 1 + 1e-10, "<="))
    checks.append(Check("series vs closed-form b_n", "b_n = 1 - (1/n)((1-g)/(1+g))(1-(-g)^n)", worst, 1e-10, "<="))
    for label, f in _members(fam.F0_MEMBERS):
        checks.append(Check(f"max|b_n| {label}", "|b_n| <= 1 on F0",
                            coefficient_bound_check(f, 50).max_abs, 1 + 1e-10, "<="))
        excess = np.max(np.abs(zg_prime_coefficients(f, 50)) - n)
        checks.append(Check(f"majorization {label}", "|n b_n| <= n", float(excess), 1e-10, "<="))
    b999 = g_coefficients(fam.build("coeff-family", gamma=0.999), 10)
    checks.append(Check("b_n near gamma=1", "b_n -> 1 as gamma -> 1", float(np.min(np.abs(b999))), 0.99, ">="))
    return checks


DISTORTION_RADII = (0.1, 0.3, 0.5, 0.7, 0.9, 0.99)


def suite_thm46(cfg=None, seed=42):
    checks = []
    for g in (0.0, 0.5, 0.9):
        rep = distortion_check(fam.build("coeff-family", gamma=g), DISTORTION_RADII)
        worst = _worst(rep.worst_h_lower, rep.worst_h_upper, rep.worst_omega_lower, rep.worst_omega_upper, rep.worst_g_upper)
        checks.append(Check(f"distortion bands gamma={g}", "|g'| <= 1/(1-r)^2 and band bounds", worst, 1e-9, "<="))
    for label, f in _members(fam.F0_MEMBERS):
        rep = distortion_check(f, DISTORTION_RADII)
        checks.append(Check(f"|g'| band {label}", "|g'(z)| <= 1/(1-r)^2", rep.worst_g_upper, 1e-9, "<="))
    worst = 0.0
    for r in (0.1, 0.3, 0.5, 0.7, 0.9):
        f = fam.build("coeff-family", gamma=r)
        gp = complex(jet_eval(f.omega, -r).v * jet_eval(f.h, -r, values=False).d1)
        worst = _worst(worst, abs(gp))
    checks.append(Check("g'(-r) at gamma=r", "lower bound 0 is attained", worst, 1e-12, "<="))
    f = fam.build("coeff-family", gamma=0.999)
    r = 0.5
    gp = complex(jet_eval(f.omega, r).v * jet_eval(f.h, r, values=False).d1)
    checks.append(Check("g'(r)(1-r)^2 at gamma=0.999", "upper bound approached", gp.real * (1 - r) ** 2, 0.999, ">="))
    ref = fam.reference("coeff-family", "gprime_r", gamma=0.999, r=r)
    checks.append(Check("g'(r) closed form", "g'(r) = (r+g)/((1+gr)(1-r)^2)", abs(gp - ref), 1e-12, "<="))
    return checks


# -- identities -------------------------------------------------------------------


def suite_identities(cfg=None, seed=42):
    rng = np.random.default_rng(seed)
    checks = []
    f0 = _members(fam.F0_MEMBERS)
    qm = _members(fam.Q_MEMBERS)

    worst_p = worst_s = 0.0
    for label, f in f0:
        phi = _random_mobius(rng)
        rp, rs = chain_rule_residuals(f, phi, 100, 0.8, int(rng.integers(1 << 31)))
        worst_p, worst_s = _worst(worst_p, rp), _worst(worst_s, rs)
    checks.append(Check("chain rule P", "P_{f o phi} = (P_f o phi) phi' + P_phi", worst_p, 1e-6, "<="))
    checks.append(Check("chain rule S", "S_{f o phi} = (S_f o phi) phi'^2 + S_phi", worst_s, 1e-6, "<="))

    z = random_disk_points(100, 0.8, seed)
    worst_p = worst_s = 0.0
    for label, f in f0:
        eps = complex(*rng.uniform(-0.6, 0.6, 2))
        a = affine_transform(f, AffineParams(eps))
        worst_p = _worst(worst_p, np.abs(pre_schwarzian_hm(a, z) - pre_schwarzian_hm(f, z)))
        worst_s = _worst(worst_s, np.abs(schwarzian_hm(a, z) - schwarzian_hm(f, z)))
    checks.append(Check("affine invariance P", "P_{A o f} = P_f", worst_p, 1e-9, "<="))
    checks.append(Check("affine invariance S", "S_{A o f} = S_f", worst_s, 1e-9, "<="))

    z = random_disk_points(100, 0.9, seed + 1)
    worst_hm = worst_logj = 0.0
    for label, f in f0:
        p = lambda w, f=f: pre_schwarzian_hm(f, w)
        lhs = schwarzian_hm(f, z)
        rhs = wirtinger_dz(p, z) - 0.5 * p(z) ** 2
        worst_hm = _worst(worst_hm, np.abs(lhs - rhs))
        logj = lambda w, f=f: np.log(jacobian(f, w))
        worst_logj = _worst(worst_logj, np.abs(wirtinger_dz(logj, z) - p(z)))
    checks.append(Check("Wirtinger S = (P)_z - P^2/2 (hm)", "S_f = (P_f)_z - P_f^2/2", worst_hm, 1e-4, "<="))
    checks.append(Check("Wirtinger P = (log J)_z", "P_f = (log J_f)_z", worst_logj, 1e-4, "<="))
    worst_cdo = worst_lam = 0.0
    for label, f in qm:
        p = lambda w, f=f: pre_schwarzian_cdo(f, w)
        worst_cdo = _worst(worst_cdo, np.abs(schwarzian_cdo(f, z) - (wirtinger_dz(p, z) - 0.5 * p(z) ** 2)))
        loglam = lambda w, f=f: np.log(np.abs(jet_eval(f.h, w, values=False).d1) * (1 + np.abs(jet_eval(f.q, w).v) ** 2))
        worst_lam = _worst(worst_lam, np.abs(2 * wirtinger_dz(loglam, z) - p(z)))
    checks.append(Check("Wirtinger S = (P)_z - P^2/2 (cdo)", "cdo Schwarzian from cdo pre-Schwarzian", worst_cdo, 1e-4, "<="))
    checks.append(Check("Wirtinger P = 2 (log lambda)_z", "P_cdo = 2 (log(|h'|+|g'|))_z", worst_lam, 1e-4, "<="))

    z = random_disk_points(10_000, 0.8, seed + 2)
    worst = -np.inf
    selfmaps = [f.omega for _, f in f0] + [f.omega for _, f in qm] + [f.q for _, f in qm]
    for w in selfmaps:
        j = jet_eval(w, z)
        excess = (1 - np.abs(z) ** 2) * np.abs(j.d1) - (1 - np.abs(j.v) ** 2) * (1 + 1e-12)
        worst = _worst(worst, excess)
    checks.append(Check("Schwarz-Pick, 1e4 samples", "(1-|z|^2)|w'| <= 1-|w|^2", worst, 0.0, "<="))

    worst = 0.0
    for _ in range(20):
        m = mobius(_random_mobius(rng))
        worst = _worst(worst, np.abs(schwarzian_analytic(m, random_disk_points(50, 0.8, int(rng.integers(1 << 31))))))
    checks.append(Check("Mobius Schwarzian", "S of a disk automorphism vanishes", worst, 1e-10, "<="))

    zf = random_disk_points(1000, 1 - 1e-4, seed + 3)
    min_re_q, worst_fit = np.inf, 0.0
    for label, f in f0:
        min_re_q = -_worst(-min_re_q, -np.real(q_functional(f.h, zf)))
        worst_fit = _worst(worst_fit, automorphism_fit_residual(f.omega))
    checks.append(Check("F0 convexity", "Re Q_h > 0 on F0 members", min_re_q, 0.0, ">="))
    checks.append(Check("F0 dilatation", "omega is a disk automorphism", worst_fit, 1e-10, "<="))

    worst_norm, worst_fit = 0.0, 0.0
    for label, f in f0:
        F = koebe_transform(f, _random_mobius(rng))
        worst_norm = _worst(worst_norm, F.normalization_error())
        worst_fit = _worst(worst_fit, automorphism_fit_residual(F.omega))
    checks.append(Check("Koebe normalization", "H(0) = 0, H'(0) = 1", worst_norm, 1e-12, "<="))
    checks.append(Check("Koebe keeps F0 dilatation", "omega_F is an automorphism", worst_fit, 1e-9, "<="))
    return checks


def _random_mobius(rng) -> MobiusParams:
    r = 0.7 * math.sqrt(rng.random())
    return MobiusParams(r * complex(math.cos(a := rng.uniform(0, 2 * math.pi)), math.sin(a)), rng.uniform(0, 2 * math.pi))


SUITES: dict[str, Callable] = {
    "thm31": suite_thm31,
    "cor32": suite_cor32,
    "cor33": suite_cor33,
    "cor34": suite_cor34,
    "thm42": suite_thm42,
    "thm43": suite_thm43,
    "thm45": suite_thm45,
    "thm46": suite_thm46,
    "identities": suite_identities,
}


def run_suite(name: str, cfg: GridConfig | None = None, seed: int = 42) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    t0 = time.perf_counter()
    checks = SUITES[name](cfg or GridConfig(), seed=seed)
    return SuiteResult(name, checks, time.perf_counter() - t0)
