"""Named harmonic maps and families with their closed-form reference values."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

from .analytic import (
    AnalyticFn,
    Antiderivative,
    Const,
    Identity,
    Mobius,
    MobiusParams,
    Polynomial,
    Power,
    RecipLinear,
    disk_automorphism,
)
from .errors import ParamError
from .harmonic import HarmonicMap

R0 = math.sqrt(math.sqrt(5.0) - 2.0)
GAP = 2.0 * R0 * (1.0 - R0**2) / (1.0 + R0**2)

Z = Identity()


@dataclass(frozen=True)
class Param:
    default: complex | float
    lo: float = -math.inf
    hi: float = math.inf
    hi_open: bool = True
    kind: str = "real"

    def check(self, name: str, value):
        if self.kind == "complex":
            value = complex(value)
            if not abs(value) < self.hi:
                raise ParamError(f"parameter {name}={value} needs |{name}| < {self.hi}")
            return value
        if isinstance(value, complex):
            if value.imag != 0:
                raise ParamError(f"parameter {name} must be real")
            value = value.real
        value = float(value)
        above = value >= self.hi if self.hi_open else value > self.hi
        if value < self.lo or above or math.isnan(value):
            bracket = ")" if self.hi_open else "]"
            raise ParamError(f"parameter {name}={value} outside [{self.lo}, {self.hi}{bracket}")
        return value


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict[str, Param]
    builder: Callable[..., HarmonicMap]
    references: dict[str, Callable[..., complex | float]] = field(default_factory=dict)
    in_f0: bool = False
    description: str = ""

    def resolve(self, params: dict) -> dict:
        unknown = set(params) - set(self.params)
        if unknown:
            raise ParamError(f"{self.name}: unknown parameter(s) {sorted(unknown)}")
        return {k: spec.check(k, params.get(k, spec.default)) for k, spec in self.params.items()}


# -- closed forms -------------------------------------------------------------


def thm42_psi(r: float, t: float) -> float:
    return 2.0 * (1.0 + r) - (r - t) / (1.0 - t * r)


def thm42_r0(t: float) -> float:
    return (1.0 - math.sqrt((1.0 - t * t) / 2.0)) / t


def thm42_m(t: float) -> float:
    return 2.0 + 3.0 / t - (4.0 / t) * math.sqrt((1.0 - t * t) / 2.0)


def coeff_bn(gamma: float, n: int) -> float:
    return 1.0 - (1.0 / n) * ((1.0 - gamma) / (1.0 + gamma)) * (1.0 - (-gamma) ** n)


def epsilon_t(t: float) -> AnalyticFn:
    """Schwarz function ``z (z + t/2) / (1 + t z/2)`` of the Schwarzian extremal family."""
    return Z * epsilon_t_reduced(t)


def epsilon_t_reduced(t: float) -> AnalyticFn:
    """``epsilon_t(z) / z``; keeps the removable singularity out of quotients."""
    return (Z + t / 2.0) / (1.0 + (t / 2.0) * Z)


def pre_schwarzian_from_schwarz(eps_over_z: AnalyticFn) -> AnalyticFn:
    """``2 eps / (z (1 - eps))`` written as ``2 e / (1 - z e)`` with ``e = eps / z``."""
    return 2.0 * eps_over_z / (1.0 - Z * eps_over_z)


# -- builders -----------------------------------------------------------------


def _q_automorphism(a: complex, phi: float) -> Mobius:
    return Mobius(MobiusParams(a, phi))


def _cubic_cdo():
    return HarmonicMap(Z, Z * Z, Z)


def _thm42(t):
    # h = z/(1-z): 1 + z h''/h' = (1+z)/(1-z)
    return HarmonicMap(Z / (1.0 - Z), disk_automorphism(-t))


def _thm43(t):
    # 1 + z h''/h' = (1+eps_t)/(1-eps_t) integrates to h' = (1-z)^{-(1+t/2)} (1+z)^{-(1-t/2)}
    hp = Power(1.0 + t / 2.0) * Power(1.0 - t / 2.0, rot=-1.0)
    return HarmonicMap(Antiderivative(hp), disk_automorphism(t))


def _coeff(gamma):
    return HarmonicMap(Z / (1.0 - Z), disk_automorphism(gamma))


def _bloch_unbounded(theta, alpha):
    h = Z * RecipLinear(1.0, -cmath.exp(1j * theta))
    return HarmonicMap(h, Const(cmath.exp(1j * alpha)) * Z)


def _bloch_bounded():
    return HarmonicMap(Antiderivative(Power(1.0)), Z)


def _cor32(a, phi):
    q = _q_automorphism(a, phi)
    return HarmonicMap(Antiderivative(Power(3.0)), q * q, q)


def _cor33(a, phi):
    q = _q_automorphism(a, phi)
    return HarmonicMap(Polynomial([0.0, 1.0, -0.5]), q * q, q)


def _cor34(a, phi):
    # h' = 1 + z/2: Q_h = 1 + z/(2+z) has real part in (0, 4/3)
    q = _q_automorphism(a, phi)
    return HarmonicMap(Polynomial([0.0, 1.0, 0.25]), q * q, q)


_T42 = Param(0.5, 0.5, 1.0)
_T43 = Param(0.0, 0.0, 1.0)
_GAMMA = Param(0.0, 0.0, 1.0)
_QPARAMS = {"a": Param(0j, hi=1.0, kind="complex"), "phi": Param(0.0)}

REGISTRY: dict[str, FamilySpec] = {
    spec.name: spec
    for spec in [
        FamilySpec(
            "cubic-cdo",
            {},
            _cubic_cdo,
            {"gap": lambda: GAP, "r0": lambda: R0},
            description="F(z) = z + conj(z^3/3) with q(z) = z",
        ),
        FamilySpec(
            "thm42-extremal",
            {"t": _T42},
            _thm42,
            {
                "M": thm42_m,
                "r0": thm42_r0,
                "psi": lambda t, r: thm42_psi(r, t),
                "p_hm_at_0": lambda t: 2.0 + t,
            },
            in_f0=True,
            description="h = z/(1-z), omega = (z-t)/(1-tz)",
        ),
        FamilySpec(
            "thm43-extremal",
            {"t": _T43},
            _thm43,
            {
                "S0": lambda t: 2.0 + t * t,
                "c1": lambda t: t / 2.0,
                "c2": lambda t: 1.0 - t * t / 4.0,
            },
            in_f0=True,
            description="1 + z h''/h' = (1+eps_t)/(1-eps_t), omega = (z+t)/(1+tz)",
        ),
        FamilySpec(
            "coeff-family",
            {"gamma": _GAMMA},
            _coeff,
            {
                "b_n": coeff_bn,
                "gprime_r": lambda gamma, r: (r + gamma) / ((1 + gamma * r) * (1 - r) ** 2),
                "gprime_minus_r": lambda gamma, r: (gamma - r) / ((1 - gamma * r) * (1 + r) ** 2),
            },
            in_f0=True,
            description="h = z/(1-z), omega = (z+gamma)/(1+gamma z)",
        ),
        FamilySpec(
            "bloch-unbounded",
            {"theta": Param(0.0), "alpha": Param(0.0)},
            _bloch_unbounded,
            {"ray": lambda theta, alpha, r: (1 - r * r) * (1 + r) / (1 - r) ** 2},
            in_f0=True,
            description="h = z/(1 - e^{i theta} z), omega = e^{i alpha} z",
        ),
        FamilySpec(
            "bloch-bounded",
            {},
            _bloch_bounded,
            {"bloch": lambda: 4.0},
            in_f0=True,
            description="h' = 1/(1-z), omega = z",
        ),
        FamilySpec(
            "cor32-family",
            dict(_QPARAMS),
            _cor32,
            {"bound": lambda a, phi: 6.0 + GAP},
            description="h' = (1-z)^{-3}, q = e^{i phi}(z-a)/(1-conj(a) z), omega = q^2",
        ),
        FamilySpec(
            "cor33-family",
            dict(_QPARAMS),
            _cor33,
            {"bound": lambda a, phi: 2.0 + GAP},
            description="h' = 1 - z, q = e^{i phi}(z-a)/(1-conj(a) z), omega = q^2",
        ),
        FamilySpec(
            "cor34-family",
            dict(_QPARAMS),
            _cor34,
            {"bound": lambda a, phi: 2.0 + GAP},
            description="h' = 1 + z/2, q = e^{i phi}(z-a)/(1-conj(a) z), omega = q^2",
        ),
    ]
}

# which reference value accompanies a norm sweep of (family, which)
SWEEP_REFERENCE = {
    ("thm42-extremal", "pre"): "M",
    ("thm43-extremal", "schwarzian"): "S0",
}


def get(name: str) -> FamilySpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ParamError(f"unknown family {name!r}; known: {sorted(REGISTRY)}") from None


def build(name: str, **params) -> HarmonicMap:
    spec = get(name)
    return spec.builder(**spec.resolve(params))


def reference(name: str, key: str, **params):
    """Closed-form reference value ``key`` of family ``name``.

    Extra keyword arguments that are not family parameters (``n``, ``r``) are
    passed through to the evaluator.
    """
    spec = get(name)
    if key not in spec.references:
        raise KeyError(f"{name} has no reference {key!r}; known: {sorted(spec.references)}")
    fam = {k: v for k, v in params.items() if k in spec.params}
    rest = {k: v for k, v in params.items() if k not in spec.params}
    return spec.references[key](**spec.resolve(fam), **rest)


# fixed members used by the verification suites
F0_MEMBERS: list[tuple[str, dict]] = (
    [("thm42-extremal", {"t": t}) for t in (0.5, 0.7, 0.9, 0.99)]
    + [("thm43-extremal", {"t": t}) for t in (0.0, 0.5, 0.9, 0.99)]
    + [("coeff-family", {"gamma": g}) for g in (0.0, 0.5, 0.9)]
    + [("bloch-unbounded", {"theta": 0.3, "alpha": 1.1}), ("bloch-bounded", {})]
)

Q_MEMBERS: list[tuple[str, dict]] = (
    [("cubic-cdo", {})]
    + [("cor32-family", p) for p in ({}, {"a": 0.4 + 0.2j, "phi": 0.7}, {"a": -0.8, "phi": 0.0})]
    + [("cor33-family", p) for p in ({}, {"a": 0.4 + 0.2j, "phi": 0.7}, {"a": -0.8, "phi": 0.0})]
    + [("cor34-family", p) for p in ({}, {"a": 0.4 + 0.2j, "phi": 0.7}, {"a": -0.8, "phi": 0.0})]
)
