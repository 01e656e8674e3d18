"""Analytic functions on the unit disk as small expression trees.

Leaves are closed-form primitives whose jets and Taylor expansions are known
exactly; inner nodes combine children with jet arithmetic (for evaluation)
and series arithmetic (for coefficients).  Trees are immutable and can be
shared freely between harmonic maps.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import ConstructionError, DomainError, SingularityError
from .jets import SINGULAR_TOL, Jet3
from .series import DEFAULT_ORDER, PowerSeries

# Gauss-Legendre rule for the value of an antiderivative along [0, z].
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(48)
_GL_NODES = 0.5 * (_GL_NODES + 1.0)
_GL_WEIGHTS = 0.5 * _GL_WEIGHTS


def _first_bad(z, mask):
    z = np.broadcast_to(np.asarray(z, dtype=complex), np.shape(mask))
    return complex(z[mask].ravel()[0]) if np.ndim(mask) else complex(z)


class AnalyticFn:
    """Base node.  Subclasses implement ``_jet(z)`` and ``_series(center, order)``."""

    def _jet(self, z) -> Jet3:
        raise NotImplementedError

    def _series(self, center: complex, order: int) -> PowerSeries:
        raise NotImplementedError

    def __call__(self, z):
        return jet_eval(self, z).v

    def __add__(self, other):
        return Sum(self, _lift(other))

    def __radd__(self, other):
        return Sum(_lift(other), self)

    def __sub__(self, other):
        return Sum(self, Product(Const(-1.0), _lift(other)))

    def __rsub__(self, other):
        return Sum(_lift(other), Product(Const(-1.0), self))

    def __neg__(self):
        return Product(Const(-1.0), self)

    def __mul__(self, other):
        return Product(self, _lift(other))

    def __rmul__(self, other):
        return Product(_lift(other), self)

    def __truediv__(self, other):
        return Quotient(self, _lift(other))

    def __rtruediv__(self, other):
        return Quotient(_lift(other), self)

    def compose(self, inner: "AnalyticFn") -> "AnalyticFn":
        """``self o inner``."""
        return Compose(self, inner)


def _lift(x) -> AnalyticFn:
    return x if isinstance(x, AnalyticFn) else Const(complex(x))


# -- primitives ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Identity(AnalyticFn):
    def _jet(self, z, values=True):
        return Jet3.variable(z)

    def _series(self, center, order):
        return PowerSeries([center, 1.0], order)


@dataclass(frozen=True, eq=False)
class Const(AnalyticFn):
    c: complex

    def _jet(self, z, values=True):
        return Jet3.constant(self.c, like=np.asarray(z, dtype=complex))

    def _series(self, center, order):
        return PowerSeries.constant(self.c, order)


@dataclass(frozen=True, eq=False)
class Polynomial(AnalyticFn):
    """``sum_k coeffs[k] z^k``."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence[complex]):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in coeffs) or (0j,))

    @cached_property
    def _derivs(self):
        p = np.polynomial.Polynomial(np.array(self.coeffs))
        return [p, p.deriv(1), p.deriv(2), p.deriv(3)]

    def _jet(self, z, values=True):
        z = np.asarray(z, dtype=complex)
        return Jet3(*(np.asarray(p(z), dtype=complex) + 0 * z for p in self._derivs))

    def _series(self, center, order):
        base = PowerSeries(self.coeffs)
        shifted = base.shift(center) if center != 0 else base
        return PowerSeries(shifted.coeffs, order)


@dataclass(frozen=True, eq=False)
class Power(AnalyticFn):
    """``scale * (1 - rot*z)^(-n)`` on the principal branch; ``n`` may be any real."""

    n: float
    scale: complex = 1.0
    rot: complex = 1.0

    def _base(self, z):
        u = 1.0 - self.rot * np.asarray(z, dtype=complex)
        bad = np.abs(u) < SINGULAR_TOL
        if np.any(bad):
            raise SingularityError("power primitive at its branch point", _first_bad(z, bad))
        return u

    def _jet(self, z, values=True):
        u = self._base(z)
        n, s, p = self.n, self.scale, self.rot
        f = s * u ** (-n)
        return Jet3(
            f,
            f * n * p / u,
            f * n * (n + 1) * p**2 / u**2,
            f * n * (n + 1) * (n + 2) * p**3 / u**3,
        )

    def _series(self, center, order):
        u0 = complex(self._base(center))
        ratio = self.rot / u0
        out = np.empty(order + 1, dtype=complex)
        out[0] = self.scale * u0 ** (-self.n)
        for k in range(1, order + 1):
            out[k] = out[k - 1] * (self.n + k - 1) / k * ratio
        return PowerSeries(out)


@dataclass(frozen=True, eq=False)
class RecipLinear(AnalyticFn):
    """``1 / (alpha + beta*z)``."""

    alpha: complex
    beta: complex

    def _base(self, z):
        u = self.alpha + self.beta * np.asarray(z, dtype=complex)
        bad = np.abs(u) < SINGULAR_TOL
        if np.any(bad):
            raise SingularityError("reciprocal-of-linear at its pole", _first_bad(z, bad))
        return u

    def _jet(self, z, values=True):
        r = 1.0 / self._base(z)
        b = self.beta
        return Jet3(r, -b * r**2, 2 * b**2 * r**3, -6 * b**3 * r**4)

    def _series(self, center, order):
        u0 = complex(self._base(center))
        k = np.arange(order + 1)
        return PowerSeries((1.0 / u0) * (-self.beta / u0) ** k)


@dataclass(frozen=True)
class MobiusParams:
    """Disk automorphism ``e^{i theta} (z - a) / (1 - conj(a) z)``."""

    a: complex = 0j
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "theta", float(self.theta))
        if not abs(self.a) < 1.0:
            raise ConstructionError(f"Mobius parameter must satisfy |a| < 1, got {self.a}")


@dataclass(frozen=True, eq=False)
class Mobius(AnalyticFn):
    params: MobiusParams

    @property
    def rotation(self) -> complex:
        return cmath.exp(1j * self.params.theta)

    def _den(self, z):
        d = 1.0 - self.params.a.conjugate() * np.asarray(z, dtype=complex)
        bad = np.abs(d) < SINGULAR_TOL
        if np.any(bad):
            raise SingularityError("Mobius map at its pole", _first_bad(z, bad))
        return d

    def _jet(self, z, values=True):
        z = np.asarray(z, dtype=complex)
        a, e = self.params.a, self.rotation
        ac = a.conjugate()
        d = self._den(z)
        k = e * (1.0 - abs(a) ** 2)
        return Jet3(e * (z - a) / d, k / d**2, 2 * k * ac / d**3, 6 * k * ac**2 / d**4)

    def _series(self, center, order):
        a, e = self.params.a, self.rotation
        num = PowerSeries([e * (center - a), e], order)
        den = PowerSeries([1.0 - a.conjugate() * center, -a.conjugate()], order)
        return num / den


def mobius(params: MobiusParams) -> Mobius:
    return Mobius(params)


def disk_automorphism(alpha: complex = 0j, theta: float = 0.0) -> Mobius:
    """``e^{i theta} (z + alpha) / (1 + conj(alpha) z)``."""
    return Mobius(MobiusParams(-complex(alpha), theta))


# -- combinators ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Sum(AnalyticFn):
    left: AnalyticFn
    right: AnalyticFn

    def _jet(self, z, values=True):
        return self.left._jet(z, values) + self.right._jet(z, values)

    def _series(self, center, order):
        return self.left._series(center, order) + self.right._series(center, order)


@dataclass(frozen=True, eq=False)
class Product(AnalyticFn):
    left: AnalyticFn
    right: AnalyticFn

    def _jet(self, z, values=True):
        # scalar scaling keeps a skipped (NaN) value out of the derivatives
        if isinstance(self.left, Const):
            return self.right._jet(z, values) * self.left.c
        if isinstance(self.right, Const):
            return self.left._jet(z, values) * self.right.c
        return self.left._jet(z) * self.right._jet(z)

    def _series(self, center, order):
        return self.left._series(center, order) * self.right._series(center, order)


@dataclass(frozen=True, eq=False)
class Quotient(AnalyticFn):
    num: AnalyticFn
    den: AnalyticFn

    def _jet(self, z, values=True):
        d = self.den._jet(z)
        bad = np.abs(d.v) < SINGULAR_TOL
        if np.any(bad):
            raise SingularityError("quotient denominator below tolerance", _first_bad(z, bad))
        return self.num._jet(z) * d.reciprocal()

    def _series(self, center, order):
        return self.num._series(center, order) / self.den._series(center, order)


@dataclass(frozen=True, eq=False)
class Compose(AnalyticFn):
    outer: AnalyticFn
    inner: AnalyticFn

    def _jet(self, z, values=True):
        g = self.inner._jet(z)
        return self.outer._jet(g.v, values).compose_outer(g)

    def _series(self, center, order):
        g = self.inner._series(center, order)
        w0 = complex(g.coeffs[0])
        f = self.outer._series(w0, order)
        return f.compose(g - w0)


@dataclass(frozen=True, eq=False)
class Antiderivative(AnalyticFn):
    """``z -> int_0^z f``; derivatives are exact, the value uses quadrature on [0, z]."""

    integrand: AnalyticFn

    def _value(self, z):
        z = np.asarray(z, dtype=complex)
        pts = z[..., None] * _GL_NODES
        vals = self.integrand._jet(pts).v
        return z * np.sum(vals * _GL_WEIGHTS, axis=-1)

    def _jet(self, z, values=True):
        f = self.integrand._jet(z)
        v = self._value(z) if values else np.full_like(f.v, np.nan)
        return Jet3(v, f.v, f.d1, f.d2)

    def _series(self, center, order):
        const = complex(self._value(center)) if center != 0 else 0j
        return self.integrand._series(center, order).integrate(const)


# -- public evaluation ------------------------------------------------------


def jet_eval(f: AnalyticFn, z, values: bool = True) -> Jet3:
    """Value and first three derivatives of ``f`` at ``z`` (scalar or array).

    Raises :class:`DomainError` for points with ``|z| >= 1`` and
    :class:`SingularityError` when a denominator is below 1e-12 in modulus.
    ``values=False`` lets nodes skip work that only the function value needs
    (antiderivative quadrature); ``v`` is then unspecified.
    """
    za = np.asarray(z, dtype=complex)
    outside = np.abs(za) >= 1.0
    if np.any(outside):
        raise DomainError("evaluation point outside the open unit disk", _first_bad(za, outside))
    jet = f._jet(za, values)
    if np.ndim(za) == 0:
        jet = Jet3(*(complex(x) for x in jet))
    return jet


def series_from(f: AnalyticFn, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor coefficients of ``f`` at 0 through degree ``order`` by series algebra."""
    s = f._series(0j, order)
    return PowerSeries(s.coeffs, order)


