"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored lowest degree first, so ``IntPolynomial((1, -6, 1))``
is ``x^2 - 6x + 1``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from hkdyn.errors import InvalidPolynomialError


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable polynomial over Z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = []
        for a in coeffs:
            if isinstance(a, Fraction):
                if a.denominator != 1:
                    raise InvalidPolynomialError(f"non-integral coefficient {a}")
                a = a.numerator
            elif not isinstance(a, int):
                raise InvalidPolynomialError(f"coefficient {a!r} is not an integer")
            c.append(int(a))
        object.__setattr__(self, "coeffs", _strip(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def from_roots_of_unity(cls, m: int) -> "IntPolynomial":
        """``x^m - 1``."""
        return cls((-1,) + (0,) * (m - 1) + (1,))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide by the content; the sign of the leading coefficient is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(a // g for a in self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, divisor: "IntPolynomial"):
        """Quotient and remainder by a monic (or unit-leading) divisor, exactly over Z."""
        if divisor.lc not in (1, -1):
            raise InvalidPolynomialError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dd)
        lc = divisor.lc
        dc = divisor.coeffs
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] * lc  # lc is its own inverse
            if q == 0:
                continue
            quot[k - dd] = q
            for j in range(dd + 1):
                rem[k - dd + j] -= q * dc[j]
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def __floordiv__(self, divisor):
        return self.divmod_monic(_coerce(divisor))[0]

    def __mod__(self, divisor):
        return self.divmod_monic(_coerce(divisor))[1]

    def divides(self, other: "IntPolynomial") -> bool:
        """True if ``self`` (monic) divides ``other`` in Z[x]."""
        return other.divmod_monic(self)[1].is_zero()

    # -- evaluation and transforms --------------------------------------

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_sign(self, x) -> int:
        """Exact sign of the value at a rational point."""
        if isinstance(x, int):
            v = self(x)
            return (v > 0) - (v < 0)
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        # den^deg * p(num/den), den > 0 so the sign is unchanged
        acc = 0
        pw = 1
        for a in reversed(self.coeffs):
            acc = acc * num + a * pw
            pw *= den
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * a for k, a in enumerate(self.coeffs) if k > 0)

    def reflect(self) -> "IntPolynomial":
        """``p(-x)``."""
        return IntPolynomial(a if k % 2 == 0 else -a for k, a in enumerate(self.coeffs))

    def substitute_square(self) -> "IntPolynomial":
        """``p(x^2)``."""
        out = []
        for a in self.coeffs:
            out.extend((a, 0))
        return IntPolynomial(out)

    def cauchy_bound(self) -> Fraction:
        """``1 + max |a_i / a_n|``; every complex root has smaller modulus."""
        if self.degree < 1:
            raise InvalidPolynomialError("constant polynomial has no roots")
        lc = abs(self.lc)
        return 1 + max(Fraction(abs(a), lc) for a in self.coeffs[:-1])


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


# -- rational helpers (gcd, square-free part) ---------------------------

def _qdivmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    inv = 1 / Fraction(b[-1])
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _to_primitive_int(coeffs: Sequence[Fraction]) -> IntPolynomial:
    """Scale a rational coefficient list by a positive constant to a primitive integer polynomial."""
    den = 1
    for c in coeffs:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPolynomial(int(Fraction(c) * den) for c in coeffs).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor, primitive with positive leading coefficient."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        _, r = _qdivmod(x, y)
        x, y = y, r
    if not x:
        return IntPolynomial()
    g = _to_primitive_int(x)
    return -g if g.lc < 0 else g


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` for ``b`` dividing ``a`` over Q, rescaled to a primitive integer polynomial.

    The rescaling factor is positive, so signs of values are preserved up to
    the sign of ``lc(a) / lc(b)``, which is kept.
    """
    q, r = _qdivmod([Fraction(c) for c in a.coeffs], [Fraction(c) for c in b.coeffs])
    if r:
        raise InvalidPolynomialError("divisor does not divide")
    return _to_primitive_int(q)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """Product of the distinct irreducible factors, up to a positive scalar."""
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return exact_quotient(p, g)


# -- cyclotomic polynomials ---------------------------------------------

def totient(m: int) -> int:
    result = m
    k, r = 2, m
    while k * k <= r:
        if r % k == 0:
            while r % k == 0:
                r //= k
            result -= result // k
        k += 1
    if r > 1:
        result -= result // r
    return result


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, as ``(x^m - 1) / prod_{d | m, d < m} Phi_d``."""
    if m < 1:
        raise ValueError("m must be positive")
    p = IntPolynomial.from_roots_of_unity(m)
    for d in range(1, m):
        if m % d == 0:
            p = p // cyclotomic(d)
    return p


def cyclotomic_factorization(p: IntPolynomial):
    """Decompose ``p`` as a product of cyclotomic polynomials.

    Returns ``(is_product, factors)`` where ``factors`` is a sorted list of
    ``(m, multiplicity)`` pairs for every Phi_m that was divided out.
    Every candidate with phi(m) <= deg p is tried; such m satisfy
    m <= 2 deg^2 because phi(m) >= sqrt(m/2).
    """
    if p.is_zero():
        raise InvalidPolynomialError("zero polynomial")
    if p(0) == 0:
        raise InvalidPolynomialError("p(0) = 0: an invertible map has no zero eigenvalue")
    if not p.is_monic():
        return False, []
    deg = p.degree
    residual = p
    factors = []
    for m in range(1, 2 * deg * deg + 1):
        if residual.degree < 1:
            break
        if totient(m) > residual.degree:
            continue
        phi = cyclotomic(m)
        mult = 0
        while True:
            q, r = residual.divmod_monic(phi)
            if not r.is_zero():
                break
            residual = q
            mult += 1
        if mult:
            factors.append((m, mult))
    return residual == IntPolynomial((1,)), factors


def is_cyclotomic_product(p: IntPolynomial):
    """``(True, [(m, mult), ...])`` when p is a product of cyclotomic polynomials,
    ``(False, [])`` otherwise."""
    ok, factors = cyclotomic_factorization(p)
    return (True, factors) if ok else (False, [])
