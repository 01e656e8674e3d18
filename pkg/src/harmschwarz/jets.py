"""Third-order complex jets.

A :class:`Jet3` holds ``f(z), f'(z), f''(z), f'''(z)``.  The entries may be
complex scalars or numpy arrays of identical shape, so one jet can describe a
whole sampling grid at once.  Arithmetic follows Leibniz' rule and the
order-3 Faa di Bruno formula; nothing is differentiated numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class Jet3:
    v: complex | np.ndarray
    d1: complex | np.ndarray
    d2: complex | np.ndarray
    d3: complex | np.ndarray

    @classmethod
    def constant(cls, c, like=0.0) -> "Jet3":
        zero = np.zeros_like(like, dtype=complex)
        return cls(zero + c, zero, zero, zero)

    @classmethod
    def variable(cls, z) -> "Jet3":
        z = np.asarray(z, dtype=complex)
        return cls(z, np.ones_like(z), np.zeros_like(z), np.zeros_like(z))

    def __iter__(self):
        return iter((self.v, self.d1, self.d2, self.d3))

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(x)) for x in self)

    def __add__(self, other):
        if isinstance(other, Jet3):
            return Jet3(self.v + other.v, self.d1 + other.d1, self.d2 + other.d2, self.d3 + other.d3)
        return Jet3(self.v + other, self.d1, self.d2, self.d3)

    __radd__ = __add__

    def __neg__(self):
        return Jet3(-self.v, -self.d1, -self.d2, -self.d3)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet3):
            return Jet3(self.v * other, self.d1 * other, self.d2 * other, self.d3 * other)
        f0, f1, f2, f3 = self
        g0, g1, g2, g3 = other
        return Jet3(
            f0 * g0,
            f1 * g0 + f0 * g1,
            f2 * g0 + 2 * f1 * g1 + f0 * g2,
            f3 * g0 + 3 * f2 * g1 + 3 * f1 * g2 + f0 * g3,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet3":
        g0, g1, g2, g3 = self
        bad = np.abs(g0) < SINGULAR_TOL
        if np.any(bad):
            from .errors import SingularityError

            raise SingularityError("denominator below singularity tolerance")
        r = 1.0 / g0
        r2 = r * r
        return Jet3(
            r,
            -g1 * r2,
            2 * g1 * g1 * r2 * r - g2 * r2,
            -6 * g1**3 * r2 * r2 + 6 * g1 * g2 * r2 * r - g3 * r2,
        )

    def __truediv__(self, other):
        if isinstance(other, Jet3):
            return self * other.reciprocal()
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def compose_outer(self, inner: "Jet3") -> "Jet3":
        """Jet of ``F(g(z))`` where ``self`` is the jet of ``F`` at ``g(z)``."""
        f0, f1, f2, f3 = self
        _, g1, g2, g3 = inner
        return Jet3(
            f0,
            f1 * g1,
            f2 * g1 * g1 + f1 * g2,
            f3 * g1**3 + 3 * f2 * g1 * g2 + f1 * g3,
        )
