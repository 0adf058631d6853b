"""Small value carriers shared across modules."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mpf


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a certified summation."""

    value: object
    terms_used: int
    tail_bound: mpf

    def approx(self) -> "Approx":
        return Approx(self.value, mpf(self.tail_bound))


@dataclass(frozen=True)
class Approx:
    """A value with an absolute error bound, closed under basic arithmetic."""

    value: object
    err: mpf = mpf(0)

    @staticmethod
    def of(x) -> "Approx":
        if isinstance(x, Approx):
            return x
        if hasattr(x, "approx"):
            return x.approx()
        return Approx(mpmath.mpmathify(x), mpf(0))

    def __add__(self, other):
        o = Approx.of(other)
        return Approx(self.value + o.value, self.err + o.err)

    __radd__ = __add__

    def __neg__(self):
        return Approx(-self.value, self.err)

    def __sub__(self, other):
        o = Approx.of(other)
        return Approx(self.value - o.value, self.err + o.err)

    def __rsub__(self, other):
        return Approx.of(other) - self

    def __mul__(self, other):
        o = Approx.of(other)
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return Approx(self.value * o.value, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Approx.of(other)
        den = abs(o.value) - o.err
        if den <= 0:
            raise ZeroDivisionError("divisor bound includes zero")
        q = self.value / o.value
        return Approx(q, (self.err + abs(q) * o.err) / den)

    def __rtruediv__(self, other):
        return Approx.of(other) / self

    def scale(self, c) -> "Approx":
        return Approx(self.value * c, self.err * abs(c))
