"""Truncated power series with complex double coefficients."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import SingularityError

DEFAULT_ORDER = 64


class PowerSeries:
    """``c_0 + c_1 z + ... + c_N z^N`` with every operation truncated at ``N``.

    Binary operations between series of different orders keep the smaller
    order, since coefficients past the truncation degree are unknown.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray, order: int | None = None):
        c = np.array(coeffs, dtype=complex).ravel()
        if order is not None:
            if len(c) < order + 1:
                c = np.concatenate([c, np.zeros(order + 1 - len(c), dtype=complex)])
            c = c[: order + 1]
        if len(c) == 0:
            c = np.zeros(1, dtype=complex)
        c.setflags(write=False)
        self.coeffs = c

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: complex, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER, center: complex = 0.0) -> "PowerSeries":
        return cls([center, 1.0], order)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"PowerSeries({self.coeffs.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.coeffs, other.coeffs)

    def _coerce(self, other) -> tuple[np.ndarray, np.ndarray, int]:
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return self.coeffs[: n + 1], other.coeffs[: n + 1], n
        o = np.zeros_like(self.coeffs)
        o[0] = other
        return self.coeffs, o, self.order

    def __add__(self, other):
        a, b, n = self._coerce(other)
        return PowerSeries(a + b, n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.coeffs * other)
        a, b, n = self._coerce(other)
        return PowerSeries(np.convolve(a, b)[: n + 1], n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.coeffs / other)
        a, b, n = self._coerce(other)
        if b[0] == 0:
            raise SingularityError("series division by a divisor with zero constant term")
        out = np.zeros(n + 1, dtype=complex)
        for k in range(n + 1):
            out[k] = (a[k] - np.dot(out[:k], b[k:0:-1])) / b[0]
        return PowerSeries(out, n)

    def __rtruediv__(self, other):
        return PowerSeries.constant(other, self.order) / self

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def derivative(self) -> "PowerSeries":
        k = np.arange(1, len(self.coeffs))
        return PowerSeries(self.coeffs[1:] * k, max(self.order - 1, 0))

    def integrate(self, constant: complex = 0.0) -> "PowerSeries":
        """Termwise antiderivative; the order grows by one."""
        k = np.arange(1, len(self.coeffs) + 1)
        return PowerSeries(np.concatenate([[constant], self.coeffs / k]))

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner(z))``; requires ``inner(0) == 0``."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must vanish at 0")
        n = min(self.order, inner.order)
        g = PowerSeries(inner.coeffs[: n + 1], n)
        acc = PowerSeries.constant(self.coeffs[n], n)
        for c in self.coeffs[n - 1 :: -1]:
            acc = acc * g + c
        return acc

    def shift(self, a: complex) -> "PowerSeries":
        """Coefficients of ``p(a + w)`` in ``w`` (exact for the polynomial)."""
        n = self.order
        w = PowerSeries([a, 1.0], n)
        acc = PowerSeries.constant(self.coeffs[-1], n)
        for c in self.coeffs[-2::-1]:
            acc = acc * w + c
        return acc
