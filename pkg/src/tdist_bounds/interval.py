"""Closed real intervals with outward widening after every operation.

Instead of switching the FPU rounding mode, each result endpoint is pushed
outward by a relative slack of 2**-50 (plus one subnormal, so that exact
zeros still widen).  Double rounding errors are at most 2**-53 relative, so
every result encloses the true range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["SLACK", "Interval", "Box"]

SLACK = 2.0**-50
_FLOOR = 5e-324


def _down(v: float) -> float:
    return v - abs(v) * SLACK - _FLOOR


def _up(v: float) -> float:
    return v + abs(v) * SLACK + _FLOOR


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: float) -> "Interval":
        """Degenerate interval [v, v]; v is taken as an exact double."""
        v = float(v)
        return cls(v, v)

    @classmethod
    def enclose(cls, lo, hi=None) -> "Interval":
        """Outward-rounded enclosure of exact endpoints (int, Fraction or float)."""
        hi = lo if hi is None else hi
        return cls(_down(float(lo)), _up(float(hi)))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, v) -> bool:
        if isinstance(v, Fraction):
            return Fraction(self.lo) <= v <= Fraction(self.hi)
        return self.lo <= v <= self.hi

    def _lift(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.enclose(other)

    def __add__(self, other):
        other = self._lift(other)
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        prods = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(_down(min(prods)), _up(max(prods)))

    __rmul__ = __mul__

    def positive(self) -> bool:
        return self.lo > 0.0

    def negative(self) -> bool:
        return self.hi < 0.0

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True)
class Box:
    a_range: Interval
    x_range: Interval

    @classmethod
    def of(cls, a_lo, a_hi, x_lo, x_hi) -> "Box":
        """Closed box enclosing the given (possibly rational) bounds."""
        return cls(Interval.enclose(a_lo, a_hi), Interval.enclose(x_lo, x_hi))

    @classmethod
    def exact(cls, a_lo, a_hi, x_lo, x_hi) -> "Box":
        """Box with float endpoints used as given (no widening)."""
        return cls(Interval(float(a_lo), float(a_hi)), Interval(float(x_lo), float(x_hi)))

    def split(self) -> tuple["Box", "Box"]:
        """Bisect the longest edge; the two halves cover the box."""
        if self.x_range.width >= self.a_range.width:
            left, right = self.x_range.split()
            return Box(self.a_range, left), Box(self.a_range, right)
        left, right = self.a_range.split()
        return Box(left, self.x_range), Box(right, self.x_range)

    @property
    def midpoint(self) -> tuple[float, float]:
        return self.a_range.mid, self.x_range.mid

    def __str__(self):
        return f"a={self.a_range} x={self.x_range}"
