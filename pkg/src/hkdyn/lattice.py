"""Integral lattices given by a symmetric Gram matrix.

The catalog holds the standard second-cohomology lattices of the known
deformation types, built from the hyperbolic plane ``U`` and the negative
definite ``E8(-1)``:

    K3       U^3 + E8(-1)^2                   rank 22
    K3n(n)   U^3 + E8(-1)^2 + <-2(n-1)>        rank 23, n >= 2
    Kummer(n) U^3 + <-2(n+1)>                  rank 7,  n >= 2
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from hkdyn.errors import DegenerateFormError, DimensionError, DomainError, UnknownLatticeError
from hkdyn.exact.matrix import IntMatrix, determinant


@dataclass(frozen=True)
class Signature:
    positives: int
    negatives: int

    @property
    def rank(self) -> int:
        return self.positives + self.negatives

    def is_hyperbolic(self) -> bool:
        """Signature ``(1, rank - 1)``."""
        return self.positives == 1

    def __iter__(self):
        return iter((self.positives, self.negatives))


@dataclass(frozen=True)
class Lattice:
    gram: IntMatrix
    label: str | None = None
    fujiki_constant: Fraction | None = field(default=None, compare=False)

    def __post_init__(self):
        g = self.gram
        if not isinstance(g, IntMatrix):
            object.__setattr__(self, "gram", IntMatrix(g))
            g = self.gram
        if not g.is_square() or g.nrows == 0:
            raise DimensionError("Gram matrix must be square and non-empty")
        if g != g.T:
            raise DimensionError("Gram matrix is not symmetric")
        if determinant(g) == 0:
            raise DegenerateFormError("Gram matrix is degenerate (det = 0)")

    @property
    def rank(self) -> int:
        return self.gram.nrows

    @property
    def discriminant(self) -> int:
        return determinant(self.gram)

    def signature(self) -> Signature:
        return signature(self)

    def evaluate(self, v: Sequence[int]) -> int:
        return evaluate(self, v)

    def pair(self, v: Sequence, w: Sequence):
        return pair(self, v, w)

    def __add__(self, other: "Lattice") -> "Lattice":
        """Orthogonal direct sum."""
        return Lattice(IntMatrix.block_diag(self.gram, other.gram))

    def twist(self, k: int) -> "Lattice":
        """Scale the form by ``k`` (``L(k)``)."""
        return Lattice(self.gram * k)

    def to_json(self) -> dict:
        out = {"gram": self.gram.tolist()}
        if self.label is not None:
            out = {"label": self.label, **out}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Lattice":
        if not isinstance(obj, dict) or "gram" not in obj:
            raise ValueError("lattice object needs a 'gram' entry")
        gram = obj["gram"]
        if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
            raise ValueError("'gram' must be a list of integer rows")
        return cls(IntMatrix(gram), obj.get("label"))


def signature(lattice: Lattice) -> Signature:
    """Sylvester signature by exact symmetric elimination over Q.

    A nonzero diagonal entry is used as a 1x1 pivot when one is available;
    otherwise a nonzero off-diagonal entry ``a_ij`` with ``a_ii = a_jj = 0``
    gives a hyperbolic 2x2 block, which contributes ``(1, 1)``.
    """
    a = [[Fraction(x) for x in row] for row in lattice.gram.rows]
    pos = neg = 0
    idx = list(range(len(a)))
    while idx:
        piv = next((i for i in idx if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            pos, neg = (pos + 1, neg) if d > 0 else (pos, neg + 1)
            idx.remove(piv)
            for i in idx:
                f = a[i][piv] / d
                if f:
                    for j in idx:
                        a[i][j] -= f * a[piv][j]
            continue
        pair_ = next(((i, j) for i in idx for j in idx if i < j and a[i][j] != 0), None)
        if pair_ is None:
            raise DegenerateFormError("form is degenerate")
        i0, j0 = pair_
        b = a[i0][j0]
        pos += 1
        neg += 1
        idx.remove(i0)
        idx.remove(j0)
        # block [[0, b], [b, 0]] has inverse [[0, 1/b], [1/b, 0]]
        for i in idx:
            ci0, cj0 = a[i][i0], a[i][j0]
            if not (ci0 or cj0):
                continue
            for j in idx:
                a[i][j] -= (ci0 * a[j0][j] + cj0 * a[i0][j]) / b
    return Signature(pos, neg)


def _check_len(lattice: Lattice, v):
    if len(v) != lattice.rank:
        raise DimensionError(f"vector of length {len(v)} for a rank-{lattice.rank} lattice")


def pair(lattice: Lattice, v: Sequence, w: Sequence):
    """Bilinear form ``v^T G w``. Entries may be any ring elements."""
    _check_len(lattice, v)
    _check_len(lattice, w)
    gw = lattice.gram.apply(w)
    acc = 0
    for x, y in zip(v, gw):
        acc = acc + x * y
    return acc


def evaluate(lattice: Lattice, v: Sequence):
    """Quadratic form ``v^T G v``."""
    return pair(lattice, v, v)


# -- catalog --------------------------------------------------------------

U = IntMatrix([[0, 1], [1, 0]])

# Cartan matrix of E8, Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
_E8_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


def _e8_minus() -> IntMatrix:
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        g[i - 1][j - 1] = g[j - 1][i - 1] = 1
    return IntMatrix(g)


E8_MINUS = _e8_minus()


def _k3_gram() -> IntMatrix:
    return IntMatrix.block_diag(U, U, U, E8_MINUS, E8_MINUS)


def _fujiki_k3n(n: int) -> Fraction:
    return Fraction(factorial(2 * n), factorial(n) * 2**n)


def _fujiki_kummer(n: int) -> Fraction:
    return (n + 1) * Fraction(factorial(2 * n), factorial(n) * 2**n)


CATALOG_NAMES = ("K3", "K3n", "Kummer", "U", "E8minus", "custom")

# Entries that model a full second cohomology group, for the (3, b2 - 3) check
FULL_H2_NAMES = ("K3", "K3n", "Kummer")


def catalog(name: str, n: int | None = None, gram=None) -> Lattice:
    """Standard lattice by name.

    ``n`` is the deformation-type parameter for ``K3n`` (Hilbert scheme of n
    points, dimension 2n) and ``Kummer`` (generalized Kummer of dimension
    2n). ``custom`` wraps a user-supplied Gram matrix.

    >>> catalog("K3").rank, tuple(catalog("K3").signature())
    (22, (3, 19))
    """
    if name == "K3":
        return Lattice(_k3_gram(), "K3", Fraction(1))
    if name == "K3n":
        if n is None or n < 2:
            raise DomainError("K3n needs n >= 2")
        g = IntMatrix.block_diag(_k3_gram(), IntMatrix([[-2 * (n - 1)]]))
        return Lattice(g, f"K3[{n}]", _fujiki_k3n(n))
    if name == "Kummer":
        if n is None or n < 2:
            raise DomainError("Kummer needs n >= 2")
        g = IntMatrix.block_diag(U, U, U, IntMatrix([[-2 * (n + 1)]]))
        return Lattice(g, f"Kummer({n})", _fujiki_kummer(n))
    if name == "U":
        return Lattice(U, "U")
    if name == "E8minus":
        return Lattice(E8_MINUS, "E8(-1)")
    if name == "custom":
        if gram is None:
            raise DomainError("custom lattice needs a Gram matrix")
        return Lattice(IntMatrix(gram), "custom")
    raise UnknownLatticeError(f"unknown catalog lattice {name!r}; known: {', '.join(CATALOG_NAMES)}")
