"""Certified real-root isolation by Sturm sequences and exact bisection."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from hkdyn.errors import InvalidPolynomialError
from hkdyn.exact.interval import RationalInterval
from hkdyn.exact.poly import IntPolynomial, squarefree_part


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence of the square-free part of ``p``.

    Each remainder is rescaled by a positive constant to a primitive integer
    polynomial, which leaves all sign patterns unchanged.
    """
    q = squarefree_part(p)
    if q.lc < 0:
        q = -q
    chain = [q, q.derivative().primitive()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        k = a.degree - b.degree + 1
        r = _pseudo_rem(a, b)
        # prem = lc(b)^k * rem; undo the sign of lc(b)^k
        if b.lc < 0 and k % 2 == 1:
            r = -r
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return chain


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    rem = list(a.coeffs)
    db = b.degree
    lcb = b.lc
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        rem = [lcb * x for x in rem]
        if c:
            for j in range(db + 1):
                rem[k - db + j] -= c * bc[j]
        rem.pop()
    return IntPolynomial(rem)


def sign_variations(chain: list[IntPolynomial], x) -> int:
    signs = [s for s in (p.eval_sign(x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[IntPolynomial], a, b) -> int:
    """Number of distinct real roots in the half-open interval ``(a, b]``."""
    return sign_variations(chain, a) - sign_variations(chain, b)


def _split_point(chain, a, b):
    q = chain[0]
    m = (a + b) / 2
    if q.eval_sign(m) != 0:
        return m
    # m is a root; move off it, staying strictly inside (a, b)
    step = (b - a) / 4
    while True:
        for c in (m - step, m + step):
            if q.eval_sign(c) != 0:
                return c
        step /= 2


def refine(chain, a: Fraction, b: Fraction, done) -> tuple[Fraction, Fraction]:
    """Bisect ``(a, b]`` (holding exactly one root) until ``done(a, b)`` holds.

    If the root is hit exactly, the degenerate interval ``[r, r]`` is returned.
    """
    q = chain[0]
    while not done(a, b):
        m = (a + b) / 2
        if q.eval_sign(m) == 0:
            return m, m
        if count_roots(chain, a, m) == 1:
            b = m
        else:
            a = m
    return a, b


def _isolate(chain, lower: Fraction, upper: Fraction, precision: Fraction):
    """Isolating intervals for the roots in ``(lower, upper]``, sorted ascending."""
    q = chain[0]
    out = []
    stack = [(lower, upper, count_roots(chain, lower, upper))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            lo, hi = refine(chain, a, b,
                            lambda a, b: b - a <= precision and a > lower)
            out.append([lo, hi])
            continue
        m = _split_point(chain, a, b)
        left = count_roots(chain, a, m)
        stack.append((a, m, left))
        stack.append((m, b, n - left))
    out.sort()
    # make touching closed intervals disjoint; shared endpoints are never roots
    for k in range(len(out) - 1):
        if out[k][1] >= out[k + 1][0]:
            m = out[k][1]
            out[k] = list(refine(chain, out[k][0], out[k][1], lambda a, b: b < m))
            out[k + 1] = list(refine(chain, out[k + 1][0], out[k + 1][1], lambda a, b: a > m))
    if q.degree < 1:
        return []
    return [RationalInterval(lo, hi) for lo, hi in out]


def real_roots_above_one(p: IntPolynomial, precision=Fraction(1, 10**20)) -> list[RationalInterval]:
    """Isolating intervals, each of width <= ``precision``, for the real roots of
    ``p`` in ``(1, B]`` where B is the Cauchy bound.

    A root exactly equal to 1 is excluded. Every returned interval has
    ``lo > 1``.

    >>> [float(r.mid) for r in real_roots_above_one(IntPolynomial((1, -6, 1)), Fraction(1, 10**9))]
    [5.828427124...]
    """
    if p.is_zero():
        raise InvalidPolynomialError("zero polynomial")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    return _isolate(chain, Fraction(1), p.cauchy_bound(), precision)


@dataclass(frozen=True)
class RealRoot:
    """A real root of an integer polynomial, given by an isolating interval.

    The root is the unique root of ``poly`` in ``(interval.lo, interval.hi]``
    (or exactly ``lo`` when the interval is a point). Can be refined to any
    width on demand.
    """

    poly: IntPolynomial
    interval: RationalInterval
    _chain: tuple = field(default=(), repr=False, compare=False)

    def chain(self):
        if not self._chain:
            object.__setattr__(self, "_chain", tuple(sturm_chain(self.poly)))
        return list(self._chain)

    def refined(self, width) -> "RealRoot":
        width = Fraction(width)
        iv = self.interval
        if iv.width <= width:
            return self
        lo, hi = refine(self.chain(), iv.lo, iv.hi, lambda a, b: b - a <= width)
        return RealRoot(self.poly, RationalInterval(lo, hi), self._chain)

    def enclosure(self, width) -> RationalInterval:
        return self.refined(width).interval

    def __float__(self):
        return float(self.interval.mid)

    def __str__(self):
        return f"root of {self.poly} in {self.interval}"
