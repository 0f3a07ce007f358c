"""Lattice isometries and the loxodromic / parabolic / elliptic trichotomy."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, ceil, lcm

import numpy as np

from hkdyn.errors import DimensionError, KindError, NotAnIsometryError
from hkdyn.exact.interval import RationalInterval
from hkdyn.exact.matrix import (
    IntMatrix,
    char_poly_and_adjugate,
    determinant,
    inverse,
    matrix_power,
    rank,
    symmetric_power,
)
from hkdyn.exact.poly import IntPolynomial, is_cyclotomic_product
from hkdyn.exact.quadratic import QuadraticNumber
from hkdyn.exact.roots import RealRoot, real_roots_above_one
from hkdyn.lattice import Lattice, pair

DEFAULT_PRECISION = Fraction(1, 10**20)

# Sym^2 dimension above which the exact complex-modulus route is skipped
SYM2_CAP = 120


class Kind(enum.Enum):
    LOXODROMIC = "loxodromic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Isometry:
    lattice: Lattice
    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, IntMatrix):
            object.__setattr__(self, "matrix", IntMatrix(m))
        _check_isometry(self.lattice, self.matrix)

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    def inverse(self) -> "Isometry":
        return Isometry(self.lattice, inverse(self.matrix))

    def conjugate(self, p: IntMatrix) -> "Isometry":
        """The same map written in the basis given by the columns of ``p``.

        New Gram ``p^T G p`` and matrix ``p^-1 M p``; ``p`` must be unimodular.
        """
        g = p.T @ self.lattice.gram @ p
        return Isometry(Lattice(g, self.lattice.label), inverse(p) @ self.matrix @ p)

    def to_json(self) -> dict:
        return {"lattice": self.lattice.to_json(), "matrix": self.matrix.tolist()}


def _check_isometry(lattice: Lattice, m: IntMatrix):
    if not m.is_square() or m.nrows != lattice.rank:
        raise DimensionError(f"matrix is {m.nrows}x{m.ncols}, lattice has rank {lattice.rank}")
    g = lattice.gram
    lhs = m.T @ g @ m
    if lhs != g:
        for i in range(g.nrows):
            for j in range(g.ncols):
                if lhs[i, j] != g[i, j]:
                    raise NotAnIsometryError(
                        f"M^T G M != G: entry ({i}, {j}) is {lhs[i, j]}, expected {g[i, j]}",
                        entry=(i, j), got=lhs[i, j], expected=g[i, j])
    if determinant(m) not in (1, -1):
        raise NotAnIsometryError("det(M) is not +-1")


def verify_isometry(lattice: Lattice, m) -> Isometry:
    """Validated isometry; raises :class:`NotAnIsometryError` naming the first bad entry."""
    return Isometry(lattice, m if isinstance(m, IntMatrix) else IntMatrix(m))


@dataclass(frozen=True)
class Classification:
    """Verdict of :func:`classify`.

    Loxodromic fields: ``lambda1`` (certified enclosure of the spectral
    radius), ``lambda1_root`` (the same number as an isolated root, refinable),
    ``lambda1_exact`` and ``lambda1_quadratic`` when the spectral radius is
    a quadratic unit, ``dominant_sign`` (-1 when the real eigenvalue of
    largest modulus is negative, 0 when it is not real).

    Elliptic: ``finite_order``. Parabolic: ``unipotence_exponent`` k with
    ``M^k`` unipotent, ``jordan_ranks`` = ranks of ``(M^k - I)^j`` for
    j = 1, 2, 3, and ``nilpotency_index`` of ``M^k - I``.
    """

    kind: Kind
    char_poly: IntPolynomial
    rank: int
    lambda1: RationalInterval | None = None
    lambda1_root: RealRoot | None = None
    lambda1_exact: QuadraticNumber | None = None
    lambda1_quadratic: int | None = None
    lambda1_norm: int | None = None
    dominant_sign: int = 1
    finite_order: int | None = None
    unipotence_exponent: int | None = None
    jordan_ranks: tuple[int, ...] | None = None
    nilpotency_index: int | None = None
    cyclotomic_factors: tuple[tuple[int, int], ...] = ()
    structural_warnings: tuple[str, ...] = field(default=())

    @property
    def lambda1_value(self):
        """Best exact description of the first dynamical degree."""
        if self.kind is not Kind.LOXODROMIC:
            return 1
        if self.lambda1_exact is not None:
            return self.lambda1_exact
        return self.lambda1_root

    def __str__(self):
        if self.kind is Kind.LOXODROMIC:
            extra = f" t={self.lambda1_quadratic}" if self.lambda1_quadratic is not None else ""
            return f"loxodromic, lambda1 in {self.lambda1}{extra}"
        if self.kind is Kind.ELLIPTIC:
            return f"elliptic of order {self.finite_order}"
        return f"parabolic, k={self.unipotence_exponent}, ranks={self.jordan_ranks}"


def _numeric_moduli(m: IntMatrix) -> np.ndarray | None:
    try:
        with np.errstate(all="ignore"):
            ev = np.linalg.eigvals(m.to_numpy())
    except (np.linalg.LinAlgError, OverflowError):
        return None
    if not np.all(np.isfinite(ev)):
        return None
    return np.abs(ev)


def _largest_real_root(p: IntPolynomial, precision):
    """Largest root of modulus > 1 among the real roots of p, with its sign."""
    best = None
    for sign, q in ((1, p), (-1, p.reflect())):
        roots = real_roots_above_one(q, precision)
        if roots:
            r = roots[-1]
            if best is None or r.lo > best[1].interval.hi:
                best = (sign, RealRoot(q, r))
    return best


def _sym2_spectral_radius(m: IntMatrix, precision):
    """Spectral radius as the largest root of ``chi_{Sym^2 M}(x^2)``.

    The eigenvalues of Sym^2 M are the products a_i a_j (i <= j); the
    largest real one in modulus is rho^2 (attained by a * conj(a)).
    """
    s2 = symmetric_power(m, 2)
    q, _ = char_poly_and_adjugate(s2)
    candidates = []
    for poly in (q.substitute_square(), q.reflect().substitute_square()):
        roots = real_roots_above_one(poly, precision)
        if roots:
            candidates.append(RealRoot(poly, roots[-1]))
    if not candidates:
        return None
    return max(candidates, key=lambda r: r.interval.lo)


def _detect_quadratic(root: RealRoot):
    """Search x^2 - t x + norm dividing ``root.poly`` with ``root`` as its larger root.

    Only traces compatible with the enclosure of lambda + norm/lambda are
    tried; they are a subset of 2 < t <= Cauchy bound.
    """
    iv = root.interval
    lam_poly = root.poly
    for norm in (1, -1):
        # t = lambda + norm / lambda
        s = iv + RationalInterval.point(norm) * iv.reciprocal()
        for t in range(max(floor(s.lo), 1), ceil(s.hi) + 1):
            if norm == 1 and t <= 2:
                continue
            f = IntPolynomial((norm, -t, 1))
            if not f.divides(lam_poly):
                continue
            q = QuadraticNumber.unit_root(t, norm)
            if q.is_rational():
                continue
            if q >= iv.lo and q <= iv.hi:
                return t, norm, q
    return None


def classify(isometry: Isometry, precision=DEFAULT_PRECISION) -> Classification:
    """Decide the trichotomy with exact arithmetic.

    Cyclotomic characteristic polynomial: with N the lcm of the cyclotomic
    orders, ``M^N = I`` means elliptic (order = least divisor d of N with
    ``M^d = I``), otherwise parabolic with ``M^N`` unipotent. Any other
    characteristic polynomial has a root off the unit circle (Kronecker),
    so the map is loxodromic and the spectral radius is isolated exactly.
    Numerical eigenvalues are consulted only for advisory warnings.
    """
    precision = Fraction(precision)
    m = isometry.matrix
    n = m.nrows
    p, _ = char_poly_and_adjugate(m)
    sig = isometry.lattice.signature()
    hyperbolic = sig.is_hyperbolic()
    warnings: list[str] = []

    cyclo, factors = is_cyclotomic_product(p)
    if cyclo:
        big_n = 1
        for order, _mult in factors:
            big_n = lcm(big_n, order)
        ident = IntMatrix.identity(n)
        mn = matrix_power(m, big_n)
        if mn == ident:
            order = min(d for d in range(1, big_n + 1)
                        if big_n % d == 0 and matrix_power(m, d) == ident)
            return Classification(Kind.ELLIPTIC, p, n, finite_order=order,
                                  cyclotomic_factors=tuple(factors))
        nil = mn - ident
        powers = [nil]
        while not powers[-1].is_zero():
            powers.append(powers[-1] @ nil)
        index = len(powers)
        ranks = tuple(rank(powers[j]) if j < len(powers) else 0 for j in range(3))
        if hyperbolic and ranks != (2, 1, 0):
            warnings.append(
                f"hyperbolic lattice but (M^{big_n} - I) has ranks {ranks} for powers 1..3; "
                "expected a single 3-dimensional Jordan block (ranks (2, 1, 0))")
        return Classification(Kind.PARABOLIC, p, n, unipotence_exponent=big_n,
                              jordan_ranks=ranks, nilpotency_index=index,
                              cyclotomic_factors=tuple(factors),
                              structural_warnings=tuple(warnings))

    moduli = _numeric_moduli(m)
    real_best = _largest_real_root(p, precision)
    root = None
    sign = 0
    if real_best is not None:
        sign, root = real_best
    numeric_rho = float(moduli.max()) if moduli is not None else None
    suspect = root is None or (
        numeric_rho is not None and numeric_rho > float(root.interval.hi) * (1 + 1e-9) + 1e-12)
    if suspect:
        dim2 = n * (n + 1) // 2
        if dim2 <= SYM2_CAP:
            r2 = _sym2_spectral_radius(m, precision)
            if r2 is not None and (root is None or r2.interval.lo > root.interval.hi):
                root, sign = r2, 0
                warnings.append("spectral radius is attained by non-real eigenvalues")
        elif root is None:
            raise ArithmeticError(
                f"no real eigenvalue of modulus > 1 and Sym^2 dimension {dim2} exceeds {SYM2_CAP}")
        else:
            warnings.append("numerical spectral radius exceeds the largest real eigenvalue; "
                            "lambda1 reports the largest real eigenvalue only")
    if sign == -1:
        warnings.append("the eigenvalue of largest modulus is negative")

    exact = t = norm = None
    if sign != 0:
        hit = _detect_quadratic(root)
        if hit is not None:
            t, norm, exact = hit

    if hyperbolic and moduli is not None:
        big = int(np.sum(moduli > 1 + 1e-6))
        if big != 1:
            warnings.append(f"hyperbolic lattice but {big} eigenvalues of modulus > 1 numerically")

    return Classification(Kind.LOXODROMIC, p, n, lambda1=root.interval, lambda1_root=root,
                          lambda1_exact=exact, lambda1_quadratic=t, lambda1_norm=norm,
                          dominant_sign=sign, structural_warnings=tuple(warnings))


# -- invariant isotropic lines --------------------------------------------

@dataclass(frozen=True)
class IsotropicLine:
    """Eigenline of an isometry for a real eigenvalue off the unit circle.

    ``vector`` entries are :class:`QuadraticNumber` when ``exact`` and
    :class:`RationalInterval` otherwise; ``form_value`` is q(vector).
    """

    eigenvalue: object
    vector: tuple
    form_value: object
    exact: bool
    rational: bool = False


def _nullspace_vector(rows: list[list[QuadraticNumber]]) -> list[QuadraticNumber]:
    """A nonzero kernel vector of a singular square matrix over Q(sqrt d)."""
    a = [list(r) for r in rows]
    n = len(a)
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].reciprocal()
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = next(c for c in range(ncols) if c not in pivots)
    zero = a[0][0] * 0
    v = [zero] * ncols
    v[free] = zero + 1
    for i, c in enumerate(pivots):
        v[c] = -a[i][free]
    return v


def _normalize_exact(v):
    """Scale so that the last nonzero coordinate is 1."""
    k = max(i for i, x in enumerate(v) if x != 0)
    s = v[k].reciprocal()
    return [x * s for x in v]


def _interval_eigenvector(adj: list[IntMatrix], lam: RationalInterval):
    """Column of adj(lam I - M) evaluated on an interval, avoiding columns that contain 0."""
    n = adj[0].nrows
    # adj(xI - M) = sum_k adj[k] x^(n-1-k)
    powers = [lam ** (n - 1 - k) for k in range(n)]
    best = None
    for j in range(n):
        col = []
        for i in range(n):
            acc = RationalInterval.point(0)
            for k in range(n):
                c = adj[k][i, j]
                if c:
                    acc = acc + powers[k] * c
            col.append(acc)
        mag = max(min(abs(x.lo), abs(x.hi)) if not x.contains(0) else Fraction(0) for x in col)
        if best is None or mag > best[0]:
            best = (mag, col)
    if best is None or best[0] == 0:
        raise ArithmeticError("eigenvector enclosure contains 0; increase precision")
    return best[1]


def invariant_isotropic_lines(isometry: Isometry, c: Classification,
                              precision=DEFAULT_PRECISION) -> list[IsotropicLine]:
    """The eigenlines for the dominant eigenvalue and its inverse.

    Both lie in the isotropic cone: q(Mv) = q(v) and Mv = a v give
    (a^2 - 1) q(v) = 0. In the quadratic case everything is exact over
    Q(sqrt d); otherwise the vectors are interval enclosures and q(v) is an
    interval containing 0. Neither line has a rational point because the
    eigenvalue is an irrational algebraic unit.
    """
    if c.kind is not Kind.LOXODROMIC:
        raise KindError(f"isotropic eigenlines exist only for loxodromic maps, got {c.kind}")
    if c.dominant_sign == 0:
        raise KindError("dominant eigenvalue is not real; no real eigenline")
    m = isometry.matrix
    lat = isometry.lattice
    n = m.nrows
    if c.lambda1_exact is not None:
        lam = c.lambda1_exact * c.dominant_sign
        out = []
        for e in (lam, lam.conjugate()):
            rows = [[QuadraticNumber(m[i, j], 0, e.d) - (e if i == j else 0) for j in range(n)]
                    for i in range(n)]
            v = _normalize_exact(_nullspace_vector(rows))
            q = pair(lat, v, v)
            q = q if isinstance(q, QuadraticNumber) else QuadraticNumber(q, 0, e.d)
            if q != 0:
                raise ArithmeticError(f"eigenvector is not isotropic: q = {q}")
            out.append(IsotropicLine(e, tuple(v), q, exact=True, rational=False))
        return out

    _, adj = char_poly_and_adjugate(m)
    root = c.lambda1_root.refined(Fraction(precision))
    lam = root.interval * c.dominant_sign
    out = []
    for e in (lam, lam.reciprocal()):
        v = _interval_eigenvector(adj, e)
        q = pair(lat, v, v)
        if not q.contains(0):
            raise ArithmeticError(f"eigenvector enclosure is not isotropic: q in {q}")
        out.append(IsotropicLine(e, tuple(v), q, exact=False, rational=False))
    return out


def growth_profile(c: Classification) -> tuple[RationalInterval, int]:
    """Exponential rate and polynomial degree of ``||M^k||`` as k grows.

    Elliptic: bounded. Parabolic: ``k^(j-1)`` for a nilpotency index j of
    ``M^N - I`` (j = 3, quadratic growth, for hyperbolic lattices).
    Loxodromic: ``lambda1^k``.
    """
    one = RationalInterval.point(1)
    if c.kind is Kind.ELLIPTIC:
        return one, 0
    if c.kind is Kind.PARABOLIC:
        return one, c.nilpotency_index - 1
    return c.lambda1, 0
