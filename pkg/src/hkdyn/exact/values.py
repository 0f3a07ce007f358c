"""Comparison and multiplication across the value kinds that appear in degree
sequences: integers, rationals, quadratic numbers, powers of isolated real
roots, and bare rational intervals.

Exact kinds are compared exactly whenever that is decidable here; otherwise
enclosures are refined until they separate. Bare intervals are compared
conservatively and may give an indeterminate answer (``None``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from hkdyn.exact.interval import RationalInterval
from hkdyn.exact.quadratic import QuadraticNumber
from hkdyn.exact.roots import RealRoot

# refinement schedule for separating two exact values by enclosures
_REFINE_WIDTHS = [Fraction(1, 2**k) for k in (16, 40, 80, 160, 320, 640)]


@dataclass(frozen=True)
class RootPower:
    """``root ** exponent`` for a real root ``> 1`` (exponent >= 0)."""

    root: RealRoot
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        if not self.root.interval.lo > 1:
            raise ValueError("RootPower needs a root certified > 1")

    def enclosure(self, width) -> RationalInterval:
        if self.exponent == 0:
            return RationalInterval.point(1)
        width = Fraction(width)
        e = self.exponent
        w = width
        while True:
            iv = self.root.enclosure(w / (e * (self.root.interval.hi + 1) ** (e - 1)))
            out = iv ** e
            if out.width <= width:
                return out
            w /= 2

    def __mul__(self, other):
        if isinstance(other, RootPower) and other.root == self.root:
            return RootPower(self.root, self.exponent + other.exponent)
        if _is_exact_one(other):
            return self
        return NotImplemented

    def __pow__(self, k: int):
        return RootPower(self.root, self.exponent * k)

    def __float__(self):
        return float(self.enclosure(Fraction(1, 10**30)).mid)

    def __str__(self):
        return f"({self.root})^{self.exponent}"


def _is_exact_one(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 1
    if isinstance(x, QuadraticNumber):
        return x == 1
    if isinstance(x, RootPower):
        return x.exponent == 0
    return False


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QuadraticNumber, RootPower))


def normalize(x):
    """Collapse trivial forms (rational quadratic numbers, zeroth powers) to Fractions."""
    if isinstance(x, bool):
        raise TypeError("booleans are not values")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadraticNumber) and x.is_rational():
        return x.a
    if isinstance(x, RootPower) and x.exponent == 0:
        return Fraction(1)
    if isinstance(x, RealRoot):
        return RootPower(x, 1)
    if isinstance(x, float):
        raise TypeError("floats are not exact values; use Fraction or RationalInterval")
    return x


def to_interval(x, width=Fraction(1, 10**20)) -> RationalInterval:
    x = normalize(x)
    if isinstance(x, Fraction):
        return RationalInterval.point(x)
    if isinstance(x, RationalInterval):
        return x
    return x.enclosure(width)


def compare(x, y):
    """Sign of ``x - y`` as -1, 0, 1, or ``None`` when it cannot be decided."""
    x, y = normalize(x), normalize(y)
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return (x > y) - (x < y)
    if isinstance(x, (Fraction, QuadraticNumber)) and isinstance(y, (Fraction, QuadraticNumber)):
        if not (isinstance(x, QuadraticNumber) and isinstance(y, QuadraticNumber) and x.d != y.d):
            q = x if isinstance(x, QuadraticNumber) else y
            return (QuadraticNumber(0, 0, q.d) + x - y).sign()
        # distinct irrational square roots: never equal, enclosures separate
        return _separate(x, y, always_distinct=True)
    if isinstance(x, RootPower) and isinstance(y, RootPower) and x.root == y.root:
        return (x.exponent > y.exponent) - (x.exponent < y.exponent)
    if isinstance(x, RationalInterval) or isinstance(y, RationalInterval):
        a, b = to_interval(x), to_interval(y)
        return _interval_cmp(a, b)
    return _separate(x, y, always_distinct=False)


def _interval_cmp(a: RationalInterval, b: RationalInterval):
    if a.lo > b.hi:
        return 1
    if a.hi < b.lo:
        return -1
    if a.is_point() and b.is_point() and a.lo == b.lo:
        return 0
    return None


def _separate(x, y, always_distinct: bool):
    for w in _REFINE_WIDTHS:
        c = _interval_cmp(to_interval(x, w), to_interval(y, w))
        if c is not None:
            return c
    if always_distinct:
        w = _REFINE_WIDTHS[-1]
        while True:
            w /= 2**64
            c = _interval_cmp(to_interval(x, w), to_interval(y, w))
            if c is not None:
                return c
    return None


def multiply(x, y):
    """Product, exact when both factors live in a common exact domain."""
    x, y = normalize(x), normalize(y)
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x * y
    if isinstance(x, (Fraction, QuadraticNumber)) and isinstance(y, (Fraction, QuadraticNumber)):
        if not (isinstance(x, QuadraticNumber) and isinstance(y, QuadraticNumber) and x.d != y.d):
            return normalize(x * y)
    if _is_exact_one(x):
        return y
    if _is_exact_one(y):
        return x
    if isinstance(x, RootPower) and isinstance(y, RootPower) and x.root == y.root:
        return x * y
    return to_interval(x) * to_interval(y)


def power(x, k: int):
    x = normalize(x)
    if k == 0:
        return Fraction(1)
    if isinstance(x, (Fraction, QuadraticNumber, RootPower)):
        return normalize(x ** k)
    return x ** k


def to_decimal(x, digits: int = 20) -> str:
    """Decimal rendering with ``digits`` significant digits of a point inside the enclosure."""
    iv = to_interval(x, Fraction(1, 10 ** (digits + 10)))
    m = iv.mid
    if m == 0:
        return "0"
    # scale to an integer with the requested number of significant digits
    sign = "-" if m < 0 else ""
    m = abs(m)
    e = 0
    while m >= 10:
        m /= 10
        e += 1
    while m < 1:
        m *= 10
        e -= 1
    scaled = round(m * 10 ** (digits - 1))
    if scaled >= 10 ** digits:
        scaled //= 10
        e += 1
    s = str(scaled)
    point = e + 1
    if 0 < point <= len(s):
        out = s[:point] + ("." + s[point:] if point < len(s) else "")
    elif point <= 0:
        out = "0." + "0" * (-point) + s
    else:
        out = s + "0" * (point - len(s))
    if "." in out:
        out = out.rstrip("0").rstrip(".")
    return sign + out
