"""Dynamical-degree sequences of automorphism-type actions.

On a manifold of dimension 2n the p-th degree is ``lambda1**p`` for
p <= n and ``lambda1**(2n - p)`` above, because Sym^p of the second
cohomology injects into degree 2p for p <= n and the inverse map swaps
p with 2n - p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from hkdyn.errors import DomainError
from hkdyn.exact.interval import RationalInterval
from hkdyn.exact.matrix import IntMatrix, symmetric_power
from hkdyn.exact.quadratic import QuadraticNumber
from hkdyn.exact.roots import RealRoot
from hkdyn.exact.values import RootPower, compare, multiply, normalize, power, to_interval
from hkdyn.isometry import Classification, Isometry, Kind

SYM_POWER_CAP = 10**5

# relative width above which interval powers are recomputed from a tighter lambda1
_REL_WIDTH = Fraction(1, 10**6)


@dataclass(frozen=True)
class DegreeSequence:
    """``values[p]`` for p = 0..2n.

    ``base`` is the exact description of lambda1 the sequence was built
    from, and ``exponents[p] = min(p, 2n - p)`` when the sequence is a
    power law in ``base``; comparisons then reduce to the exponents.
    """

    n: int
    values: tuple
    base: object = None
    exponents: tuple[int, ...] | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def dim(self) -> int:
        return 2 * self.n

    def __len__(self):
        return len(self.values)

    def __getitem__(self, p):
        return self.values[p]

    def __iter__(self):
        return iter(self.values)

    def reversed(self) -> "DegreeSequence":
        ex = tuple(reversed(self.exponents)) if self.exponents is not None else None
        return DegreeSequence(self.n, tuple(reversed(self.values)), self.base, ex, self.notes)

    def is_power_law(self) -> bool:
        """True when comparisons can be read off the exponents exactly."""
        return self.exponents is not None and _base_above_one(self.base)

    def intervals(self, width=Fraction(1, 10**20)) -> list[RationalInterval]:
        return [to_interval(v, width) for v in self.values]


def _base_above_one(base) -> bool:
    if base is None:
        return False
    if isinstance(base, RationalInterval):
        return base.lo > 1
    return compare(base, 1) == 1


def _lambda_value(lambda1):
    """Normalize the accepted lambda1 inputs."""
    if isinstance(lambda1, Classification):
        return lambda1.lambda1_value
    if isinstance(lambda1, bool) or isinstance(lambda1, float):
        raise TypeError("lambda1 must be exact (int, Fraction, QuadraticNumber, RealRoot) "
                        "or a RationalInterval")
    return lambda1


def degree_sequence(lambda1, n: int) -> DegreeSequence:
    """``(1, l, l^2, ..., l^n, ..., l, 1)`` for ``l = lambda1``.

    ``lambda1`` may be an integer, Fraction, QuadraticNumber, RealRoot, a
    :class:`Classification`, or a RationalInterval. Exact inputs give exact
    entries; an interval gives interval entries.

    >>> [int(v) for v in degree_sequence(2, 2)]
    [1, 2, 4, 2, 1]
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    lam = _lambda_value(lambda1)
    exps = tuple(min(p, 2 * n - p) for p in range(2 * n + 1))
    if isinstance(lam, RationalInterval):
        if lam.hi < 1:
            raise DomainError(f"lambda1 = {lam} < 1; dynamical degrees are >= 1")
        values = tuple(lam ** e for e in exps)
        return DegreeSequence(n, values, lam, exps)
    lam = normalize(lam)
    c = compare(lam, 1)
    if c is None:
        raise DomainError("cannot decide whether lambda1 >= 1")
    if c < 0:
        raise DomainError(f"lambda1 = {lam} < 1; dynamical degrees are >= 1")
    if c == 0:
        return DegreeSequence(n, tuple(Fraction(1) for _ in exps), Fraction(1), exps)
    if isinstance(lam, RootPower):
        values = tuple(RootPower(lam.root, lam.exponent * e) if e else Fraction(1) for e in exps)
    else:
        values = tuple(power(lam, e) for e in exps)
    return DegreeSequence(n, values, lam, exps)


def sequence_intervals(seq: DegreeSequence, rel_width=_REL_WIDTH) -> list[RationalInterval]:
    """Enclosures of every entry with relative width at most ``rel_width``.

    Interval inputs cannot be tightened; their powers are returned as is.
    """
    out = []
    for v in seq.values:
        if isinstance(v, RationalInterval):
            out.append(v)
            continue
        w = Fraction(1, 10**8)
        while True:
            iv = to_interval(v, w)
            if iv.relative_width() <= rel_width:
                break
            w /= 2**32
        out.append(iv)
    return out


class ConcavityResult(NamedTuple):
    ok: bool | None
    index: int | None


def check_log_concavity(seq) -> ConcavityResult:
    """Check ``v[p]^2 >= v[p-1] v[p+1]`` for interior p.

    Returns ``(True, None)``, ``(False, p)`` at the first violation, or
    ``(None, p)`` when interval entries leave index p undecided.

    >>> check_log_concavity([1, 2, 1, 2, 1])
    ConcavityResult(ok=False, index=2)
    """
    if isinstance(seq, DegreeSequence) and seq.is_power_law():
        return _check_exponents(seq.exponents)
    values = list(seq.values if isinstance(seq, DegreeSequence) else seq)
    for p, v in enumerate(values):
        s = compare(v, 0) if not isinstance(v, RationalInterval) else (1 if v.lo > 0 else None)
        if s is None or s <= 0:
            raise DomainError(f"entry {p} is not certified positive")
    undecided = None
    for p in range(1, len(values) - 1):
        c = compare(multiply(values[p], values[p]), multiply(values[p - 1], values[p + 1]))
        if c is None:
            if undecided is None:
                undecided = p
            continue
        if c < 0:
            return ConcavityResult(False, p)
    if undecided is not None:
        return ConcavityResult(None, undecided)
    return ConcavityResult(True, None)


def _check_exponents(exps: Sequence[int]) -> ConcavityResult:
    # base > 1: b^(2e_p) >= b^(e_{p-1} + e_{p+1}) iff 2 e_p >= e_{p-1} + e_{p+1}
    for p in range(1, len(exps) - 1):
        if 2 * exps[p] < exps[p - 1] + exps[p + 1]:
            return ConcavityResult(False, p)
    return ConcavityResult(True, None)


def sym_power_matrix(m: IntMatrix, p: int, cap: int = SYM_POWER_CAP) -> IntMatrix:
    """Matrix of Sym^p(m) on the degree-lexicographic monomial basis.

    >>> sym_power_matrix(IntMatrix([[2, 0], [0, 3]]), 2)
    IntMatrix([[4, 0, 0], [0, 6, 0], [0, 0, 9]])
    """
    return symmetric_power(m, p, cap)


@dataclass(frozen=True)
class OguisoRow:
    p: int
    numeric_radius: float
    certified: RationalInterval
    relative_error: float
    agrees: bool


@dataclass(frozen=True)
class OguisoReport:
    rows: tuple[OguisoRow, ...]
    tolerance: float

    @property
    def agrees(self) -> bool:
        return all(r.agrees for r in self.rows)


def spectral_radius_numeric(m: IntMatrix) -> float:
    ev = np.linalg.eigvals(m.to_numpy())
    return float(np.max(np.abs(ev))) if len(ev) else 0.0


def verify_oguiso(isometry: Isometry, c: Classification, p_max: int,
                  tolerance: float = 1e-6, cap: int = SYM_POWER_CAP) -> OguisoReport:
    """Compare the spectral radius of Sym^p M (numerical eigensolver) with the
    certified ``lambda1**p`` for p = 1..p_max."""
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    if c.kind is Kind.LOXODROMIC:
        base = c.lambda1_root
    else:
        base = None
    rows = []
    for p in range(1, p_max + 1):
        s = sym_power_matrix(isometry.matrix, p, cap)
        rho = spectral_radius_numeric(s)
        if base is None:
            cert = RationalInterval.point(1)
        else:
            cert = _tight_power(base, p)
        mid = float(cert.mid)
        err = abs(rho - mid) / mid
        rows.append(OguisoRow(p, rho, cert, err, err <= tolerance))
    return OguisoReport(tuple(rows), tolerance)


def _tight_power(root: RealRoot, p: int) -> RationalInterval:
    return RootPower(root, p).enclosure(Fraction(1, 10**12) * int(root.interval.hi + 1) ** p)
