"""Closed intervals with exact rational endpoints."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> "RationalInterval":
        return cls(Fraction(x), Fraction(x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __float__(self):
        return float(self.mid)

    def contains(self, x) -> bool:
        if isinstance(x, RationalInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: "RationalInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def relative_width(self) -> Fraction:
        m = max(abs(self.lo), abs(self.hi))
        return self.width / m if m else Fraction(0)

    def __add__(self, other):
        o = _as_interval(other)
        return RationalInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        o = _as_interval(other)
        if self.lo >= 0 and o.lo >= 0:
            return RationalInterval(self.lo * o.lo, self.hi * o.hi)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RationalInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains 0")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _as_interval(other).reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        if k == 0:
            return RationalInterval(Fraction(1), Fraction(1))
        if self.lo >= 0:
            return RationalInterval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            r = RationalInterval((-self.hi) ** k, (-self.lo) ** k)
            return r if k % 2 == 0 else -r
        if k % 2:
            return RationalInterval(self.lo ** k, self.hi ** k)
        return RationalInterval(Fraction(0), max(self.lo ** k, self.hi ** k))

    def abs(self) -> "RationalInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RationalInterval(Fraction(0), max(-self.lo, self.hi))

    def sqrt(self, width) -> "RationalInterval":
        """Enclosure of the square roots of a non-negative interval, padded by ``width``."""
        if self.lo < 0:
            raise ValueError("square root of a negative interval")
        lo, _ = sqrt_bounds(self.lo, width)
        _, hi = sqrt_bounds(self.hi, width)
        return RationalInterval(lo, hi)

    def __str__(self):
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


def _as_interval(x) -> RationalInterval:
    if isinstance(x, RationalInterval):
        return x
    return RationalInterval.point(x)


def sqrt_bounds(x, width) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= sqrt(x) <= hi`` with ``hi - lo <= width``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0), Fraction(0)
    width = Fraction(width)
    # scale so that 1/scale <= width
    scale = 1
    while Fraction(1, scale) > width:
        scale *= 2
    # floor(sqrt(x) * scale) = isqrt(x * scale^2) computed over the integers
    num, den = x.numerator, x.denominator
    r = isqrt(num * scale * scale // den)
    lo = Fraction(r, scale)
    hi = Fraction(r + 1, scale)
    if lo * lo == x:
        hi = lo
    return lo, hi
