"""Exact arithmetic in real quadratic fields Q(sqrt d)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from hkdyn.exact.interval import RationalInterval, sqrt_bounds


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write ``n > 0`` as ``s^2 * d`` with ``d`` square-free. Returns ``(s, d)``."""
    if n <= 0:
        raise ValueError("n must be positive")
    s, d = 1, 1
    k = 2
    while k * k <= n:
        e = 0
        while n % k == 0:
            n //= k
            e += 1
        s *= k ** (e // 2)
        if e % 2:
            d *= k
        k += 1
    return s, d * n


class QuadraticNumber:
    """``a + b*sqrt(d)`` with rational ``a, b`` and square-free ``d > 1``.

    Rational values are allowed (``b == 0``); two numbers can be combined
    only when they share ``d`` or one of them is rational.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 2):
        a, b = Fraction(a), Fraction(b)
        if d < 2:
            raise ValueError("d must be a square-free integer >= 2")
        s, sf = squarefree_decomposition(d)
        if sf == 1:
            a, b, d = a + b * s, Fraction(0), 2
        else:
            b, d = b * s, sf
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticNumber is immutable")

    @classmethod
    def unit_root(cls, trace: int, norm: int = 1) -> "QuadraticNumber":
        """Larger real root of ``x^2 - trace*x + norm``."""
        disc = trace * trace - 4 * norm
        if disc <= 0:
            raise ValueError("no real irrational root")
        r = isqrt(disc)
        if r * r == disc:
            return cls(Fraction(trace + r, 2), 0, 2)
        s, d = squarefree_decomposition(disc)
        return cls(Fraction(trace, 2), Fraction(s, 2), d)

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.b == 0:
                return QuadraticNumber(other.a, 0, self.d)
            if self.b != 0 and other.d != self.d:
                raise ValueError(f"Q(sqrt {self.d}) and Q(sqrt {other.d}) do not mix")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return NotImplemented

    def _field(self, other):
        return other.d if self.b == 0 else self.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        return QuadraticNumber(self.a * o.a + self.b * o.b * d,
                               self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = QuadraticNumber(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        big = a * a - b * b * d
        return sa if big > 0 else sb

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticNumber):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        if isinstance(other, QuadraticNumber) and self.b and other.b and self.d != other.d:
            raise ValueError("cannot compare across different quadratic fields exactly")
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def enclosure(self, width) -> RationalInterval:
        """Rational interval of width <= ``width`` containing the value."""
        if self.b == 0:
            return RationalInterval.point(self.a)
        lo, hi = sqrt_bounds(self.d, Fraction(width) / abs(self.b))
        if self.b > 0:
            return RationalInterval(self.a + self.b * lo, self.a + self.b * hi)
        return RationalInterval(self.a + self.b * hi, self.a + self.b * lo)

    def __float__(self):
        return float(self.enclosure(Fraction(1, 10**30)).mid)

    def to_json(self) -> dict:
        """``{"a", "b", "d", "den"}`` meaning ``(a + b sqrt d) / den`` with integers."""
        den = self.a.denominator * self.b.denominator // gcd(self.a.denominator, self.b.denominator)
        return {"a": int(self.a * den), "b": int(self.b * den), "d": self.d, "den": den}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadraticNumber":
        den = obj.get("den", 1)
        return cls(Fraction(obj["a"], den), Fraction(obj["b"], den), obj["d"])

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        coef = "" if mag == 1 else f"{mag}*"
        head = f"{self.a} {sign} " if self.a else ("-" if sign == "-" else "")
        return f"{head}{coef}sqrt({self.d})"

