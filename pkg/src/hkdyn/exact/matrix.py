"""Exact integer matrices."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from hkdyn.errors import CapacityError, DimensionError
from hkdyn.exact.poly import IntPolynomial


class IntMatrix:
    """Immutable row-major matrix of Python integers."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = []
        for row in rows:
            r = []
            for a in row:
                if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
                    if isinstance(a, Fraction) and a.denominator == 1:
                        a = a.numerator
                    else:
                        raise DimensionError(f"entry {a!r} is not an integer")
                r.append(int(a))
            rs.append(tuple(r))
        ncols = len(rs[0]) if rs else 0
        if any(len(r) != ncols for r in rs):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", tuple(rs))
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "IntMatrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "IntMatrix") -> "IntMatrix":
        n = sum(b.nrows for b in blocks)
        out = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls(out)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(("IntMatrix", self.rows))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=float).reshape(self.nrows, self.ncols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.nrows else IntMatrix([])

    def __add__(self, other: "IntMatrix"):
        _same_shape(self, other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix"):
        _same_shape(self, other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, k: int):
        return IntMatrix([[k * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix"):
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def apply(self, v: Sequence) -> list:
        """Matrix-vector product; ``v`` may hold any ring elements."""
        if len(v) != self.ncols:
            raise DimensionError("vector length mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for a, x in zip(r, v):
                if a:
                    acc = acc + a * x
            out.append(acc)
        return out

    def trace(self) -> int:
        _require_square(self)
        return sum(self.rows[i][i] for i in range(self.nrows))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def max_abs_row_sum(self) -> int:
        """Infinity norm."""
        return max((sum(abs(a) for a in r) for r in self.rows), default=0)

    def __pow__(self, k: int):
        return matrix_power(self, k)


def _same_shape(a: IntMatrix, b: IntMatrix):
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def _require_square(m: IntMatrix):
    if not m.is_square():
        raise DimensionError(f"matrix is {m.nrows}x{m.ncols}, expected square")


def matrix_power(m: IntMatrix, k: int) -> IntMatrix:
    """``m**k`` by binary exponentiation."""
    _require_square(m)
    if k < 0:
        raise ValueError("negative exponent; use inverse() first")
    result = IntMatrix.identity(m.nrows)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def _bareiss(rows: list[list[int]]):
    """In-place fraction-free elimination. Returns (rank, sign-corrected det or 0)."""
    n, m = len(rows), len(rows[0]) if rows else 0
    prev = 1
    rank = 0
    sign = 1
    for col in range(m):
        if rank == n:
            break
        piv = next((i for i in range(rank, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            sign = -sign
        p = rows[rank][col]
        for i in range(rank + 1, n):
            a = rows[i][col]
            ri = rows[i]
            rr = rows[rank]
            for j in range(col + 1, m):
                ri[j] = (p * ri[j] - a * rr[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
    det = sign * prev if (rank == n == m) else 0
    return rank, det


def rank(m: IntMatrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    r, _ = _bareiss([list(row) for row in m.rows])
    return r


def determinant(m: IntMatrix) -> int:
    _require_square(m)
    if m.nrows == 0:
        return 1
    _, det = _bareiss([list(row) for row in m.rows])
    return det


def char_poly_and_adjugate(m: IntMatrix):
    """Faddeev-LeVerrier: ``det(xI - m)`` and the coefficient matrices of its adjugate.

    Returns ``(p, adj)`` where ``adj[k]`` is the integer matrix multiplying
    ``x^(n-1-k)`` in ``adj(xI - m)``. All divisions are exact.
    """
    _require_square(m)
    n = m.nrows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = IntMatrix.identity(n)
    mk = IntMatrix.zeros(n)
    adj = []
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        adj.append(mk)
        t = (m @ mk).trace()
        if t % k:
            raise ArithmeticError("non-exact Faddeev-LeVerrier step")
        coeffs[n - k] = -t // k
    return IntPolynomial(coeffs), adj


def char_poly(m: IntMatrix) -> IntPolynomial:
    """``det(xI - m)``, monic of degree ``m.nrows``.

    >>> str(char_poly(IntMatrix([[3, 4], [2, 3]])))
    'x^2 - 6*x + 1'
    """
    return char_poly_and_adjugate(m)[0]


def eval_poly_at_matrix(p: IntPolynomial, m: IntMatrix) -> IntMatrix:
    _require_square(m)
    acc = IntMatrix.zeros(m.nrows)
    ident = IntMatrix.identity(m.nrows)
    for a in reversed(p.coeffs):
        acc = acc @ m + ident * a
    return acc


def inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    _require_square(m)
    n = m.nrows
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    out = [r[n:] for r in a]
    if any(x.denominator != 1 for r in out for x in r):
        raise ValueError("matrix is not unimodular: inverse is not integral")
    return IntMatrix([[x.numerator for x in r] for r in out])


def symmetric_power(m: IntMatrix, p: int, cap: int | None = None) -> IntMatrix:
    """Matrix of the map induced by ``m`` on degree-p polynomials in the basis vectors.

    Basis: monomials of degree p in ``b = m.ncols`` variables, in
    degree-lexicographic order (x0^p first). Column ``j`` of ``m`` is the
    image of basis vector ``e_j``, and a monomial maps to the product of
    the images of its factors.
    """
    _require_square(m)
    if p < 1:
        raise ValueError("p must be >= 1")
    b = m.nrows
    basis = list(combinations_with_replacement(range(b), p))
    if cap is not None and len(basis) > cap:
        raise CapacityError(f"Sym^{p} of a rank-{b} map has dimension {len(basis)} > cap {cap}")
    index = {mono: k for k, mono in enumerate(basis)}
    cols = [[(i, m.rows[i][j]) for i in range(b) if m.rows[i][j] != 0] for j in range(b)]
    out = [[0] * len(basis) for _ in basis]
    for k, mono in enumerate(basis):
        # expand prod_{j in mono} (sum_i m[i][j] e_i) as a dict keyed by sorted index tuples
        terms = {(): 1}
        for j in mono:
            nxt = {}
            for key, c in terms.items():
                for i, a in cols[j]:
                    nk = tuple(sorted(key + (i,)))
                    nxt[nk] = nxt.get(nk, 0) + c * a
            terms = nxt
        for key, c in terms.items():
            if c:
                out[index[key]][k] = c
    return IntMatrix(out)
