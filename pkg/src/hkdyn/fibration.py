"""Invariant-fibration feasibility and primitivity certificates.

For an invariant fibration X --> B with base map g, the total degrees are
``lambda_p(f) = max_{q+r=p} lambda_q(f|pi) * lambda_r(g)``. When the generic
fibre is of general type every relative degree is 1, so the total sequence
must be the sliding-window maximum of the base sequence over windows of
width ``dim F + 1``; :func:`general_type_feasibility` decides whether such a
base sequence exists.

All verdicts here are numerical constraints on degree sequences. They say
nothing about whether a fibration with those degrees is geometrically
realizable.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from hkdyn.errors import DimensionError, PreconditionError
from hkdyn.exact.values import compare, multiply, normalize, power
from hkdyn.degrees import DegreeSequence, check_log_concavity, degree_sequence
from hkdyn.isometry import Classification, Kind

REALIZABILITY_NOTE = ("numerical feasibility only: satisfying the degree constraints does not "
                      "imply that a fibration with these degrees exists")


class Indeterminate(Exception):
    """A comparison between interval entries could not be decided."""


def _cmp(x, y) -> int:
    c = compare(x, y)
    if c is None:
        raise Indeterminate
    return c


def _vmax(vals):
    best = vals[0]
    for v in vals[1:]:
        if _cmp(v, best) > 0:
            best = v
    return best


def _vmin(vals):
    best = vals[0]
    for v in vals[1:]:
        if _cmp(v, best) < 0:
            best = v
    return best


def _values(seq) -> list:
    if isinstance(seq, DegreeSequence):
        return list(seq.values)
    return [normalize(v) for v in seq]


def _require_log_concave(seq, name: str) -> bool | None:
    """Raise on a certified violation; an undecided check is returned as None."""
    ok, idx = check_log_concavity(seq)
    if ok is False:
        raise PreconditionError(f"{name} sequence is not log-concave at index {idx}")
    return ok


@dataclass(frozen=True)
class FibrationHypothesis:
    """Candidate invariant fibration: total degrees on X (length 2n + 1), the
    base dimension, and optionally the base and relative sequences."""

    total: object
    base_dim: int
    base_seq: tuple | None = None
    relative_seq: tuple | None = None

    def __post_init__(self):
        dim = len(self.total) - 1
        if dim < 2 or dim % 2:
            raise DimensionError(f"total sequence has length {dim + 1}; expected 2n + 1 with n >= 1")
        if not 0 < self.base_dim < dim:
            raise DimensionError(f"base_dim must lie in (0, {dim}), got {self.base_dim}")
        if self.base_seq is not None and len(self.base_seq) != self.base_dim + 1:
            raise DimensionError(f"base sequence needs length {self.base_dim + 1}")
        if self.relative_seq is not None and len(self.relative_seq) != dim - self.base_dim + 1:
            raise DimensionError(f"relative sequence needs length {dim - self.base_dim + 1}")

    @property
    def dim(self) -> int:
        return len(self.total) - 1

    @property
    def fibre_dim(self) -> int:
        return self.dim - self.base_dim


class CheckResult(NamedTuple):
    ok: bool | None
    index: int | None


def dnt_check(h: FibrationHypothesis) -> CheckResult:
    """Verify ``total[p] == max_{q+r=p} relative[q] * base[r]`` for every p.

    Both candidate sequences must be log-concave. Returns ``(True, None)``,
    ``(False, p)`` at the first failing p, or ``(None, p)`` when interval
    entries leave p undecided.
    """
    if h.base_seq is None or h.relative_seq is None:
        raise PreconditionError("dnt_check needs both base and relative sequences")
    _require_log_concave(list(h.base_seq), "base")
    _require_log_concave(list(h.relative_seq), "relative")
    total = _values(h.total)
    base = _values(h.base_seq)
    rel = _values(h.relative_seq)
    undecided = None
    for p in range(h.dim + 1):
        products = [multiply(rel[q], base[p - q])
                    for q in range(max(0, p - h.base_dim), min(p, h.fibre_dim) + 1)]
        cmps = [compare(x, total[p]) for x in products]
        if any(c == 1 for c in cmps) or all(c == -1 for c in cmps):
            return CheckResult(False, p)
        if any(c is None for c in cmps) or not any(c == 0 for c in cmps):
            # no product certified equal, none certified above
            if undecided is None:
                undecided = p
    if undecided is not None:
        return CheckResult(None, undecided)
    return CheckResult(True, None)


class Feasibility(NamedTuple):
    feasible: bool | None
    witness: tuple | None
    index: int | None


def sliding_window_max(seq: Sequence, width: int) -> list:
    """``out[p] = max(seq[r] for r in [p - width + 1, p])`` clipped to the sequence,
    for p in ``0 .. len(seq) + width - 2``."""
    n = len(seq) + width - 1
    return [_vmax(seq[max(0, p - width + 1):min(p, len(seq) - 1) + 1]) for p in range(n)]


def general_type_feasibility(total, base_dim: int) -> Feasibility:
    """Does some base sequence, with all relative degrees equal to 1, reproduce ``total``?

    With F = 2n - base_dim, ``mu_r = min(total[r .. r + F])`` is the largest
    sequence whose width-(F+1) sliding maximum stays below ``total``; a
    base sequence exists iff the sliding maximum of mu equals ``total``,
    and then mu is returned as the witness. Otherwise ``index`` is the
    first p where the reconstruction falls short.

    >>> general_type_feasibility([1, 2, 2, 2, 1], 2)
    Feasibility(feasible=True, witness=(Fraction(1, 1), Fraction(2, 1), Fraction(1, 1)), index=None)
    """
    vals = _values(total)
    dim = len(vals) - 1
    if dim < 2 or dim % 2:
        raise DimensionError(f"total sequence has length {dim + 1}; expected 2n + 1")
    if not 0 < base_dim < dim:
        raise DimensionError(f"base_dim must lie in (0, {dim}), got {base_dim}")
    f = dim - base_dim
    if isinstance(total, DegreeSequence) and total.is_power_law():
        res = _feasibility(list(total.exponents), base_dim, f)
        if res.witness is None:
            return res
        return Feasibility(True, tuple(power(total.base, e) for e in res.witness), None)
    try:
        return _feasibility(vals, base_dim, f)
    except Indeterminate:
        return Feasibility(None, None, None)


def _feasibility(vals: list, base_dim: int, f: int) -> Feasibility:
    mu = [_vmin(vals[r:r + f + 1]) for r in range(base_dim + 1)]
    recon = sliding_window_max(mu, f + 1)
    for p, (a, b) in enumerate(zip(recon, vals)):
        if _cmp(a, b) != 0:
            return Feasibility(False, None, p)
    return Feasibility(True, tuple(mu), None)


class PlateauBound(NamedTuple):
    bound: int
    plateau: int
    indeterminate: bool


def base_dim_bound(total) -> int:
    """``2n - k`` where ``k + 1`` is the number of entries equal to the maximum.

    >>> base_dim_bound([1, 2, 2, 2, 1])
    2
    """
    return plateau_bound(total).bound


def plateau_bound(total) -> PlateauBound:
    """Plateau length and the resulting lower bound on the base dimension.

    Interval entries that cannot be separated from the maximum are counted
    as part of the plateau. That gives the smaller bound, which stays valid
    however the undecided comparisons resolve.
    """
    undecided = _require_log_concave(total, "total") is None
    dim = len(total) - 1
    if isinstance(total, DegreeSequence) and total.is_power_law():
        vals = list(total.exponents)
    else:
        vals = _values(total)
    top = None
    for v in vals:
        if top is None:
            top = v
            continue
        c = compare(v, top)
        if c == 1:
            top = v
    indeterminate = undecided
    count = 0
    for v in vals:
        c = compare(v, top)
        if c is None:
            indeterminate = True
            count += 1
        elif c == 0:
            count += 1
    k = count - 1
    return PlateauBound(dim - k, k, indeterminate)


class Verdict(enum.Enum):
    PRIMITIVE = "primitive"
    UNKNOWN = "unknown"


class Justification(enum.Enum):
    LOXODROMIC = ("loxodromic: the first dynamical degree exceeds 1, so the map preserves no "
                  "nontrivial rational fibration")
    PARABOLIC = ("parabolic: no conclusion from lattice data; for K3[n] and generalized Kummer "
                 "deformation types a parabolic map is expected to preserve a rational "
                 "Lagrangian fibration onto P^n (Hu-Keum-Zhang)")
    ELLIPTIC = "elliptic: finite-order action on cohomology; no conclusion"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    justification: Justification
    n: int
    b2: int
    max_periodic_hypersurfaces: int | None
    dense_generic_orbit: bool | None
    base_dim_lower_bound: int
    plateau_length: int
    degree_sequence: DegreeSequence
    notes: tuple[str, ...] = field(default=())

    @property
    def primitive(self) -> bool | None:
        return True if self.verdict is Verdict.PRIMITIVE else None


def primitivity_certificate(c: Classification, n: int, b2: int) -> Certificate:
    """Conclusions available from the action on H^2 of a map of a 2n-dimensional
    manifold with second Betti number ``b2``.

    Loxodromic: primitive, at most ``2n + b2 - 2`` periodic hypersurfaces, and
    Zariski-dense generic orbit. Otherwise the verdict is unknown.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if b2 < c.rank:
        raise ValueError(f"b2 = {b2} is smaller than the rank {c.rank} of the lattice acted on")
    notes = [REALIZABILITY_NOTE]
    if n == 1:
        notes.append("n = 1 is the surface case, outside the class of higher-dimensional "
                     "irreducible symplectic manifolds; bounds are the formula instantiated at n = 1")
    if c.rank < b2:
        notes.append(f"the lattice of rank {c.rank} is treated as an H^(1,1) model inside "
                     f"H^2 of rank {b2}")
    notes.extend(f"warning: {w}" for w in c.structural_warnings)
    seq = degree_sequence(c, n)
    pb = plateau_bound(seq)
    if pb.indeterminate:
        notes.append("indeterminate plateau: undecided entries counted in the plateau")
    if c.kind is Kind.LOXODROMIC:
        return Certificate(Verdict.PRIMITIVE, Justification.LOXODROMIC, n, b2,
                           2 * n + b2 - 2, True, pb.bound, pb.plateau, seq, tuple(notes))
    if c.kind is Kind.PARABOLIC:
        notes.append("parabolic: all dynamical degrees equal 1 (every eigenvalue is a root of "
                     "unity and the growth is polynomial)")
        return Certificate(Verdict.UNKNOWN, Justification.PARABOLIC, n, b2, None, None,
                           pb.bound, pb.plateau, seq, tuple(notes))
    notes.append("elliptic: all dynamical degrees equal 1")
    return Certificate(Verdict.UNKNOWN, Justification.ELLIPTIC, n, b2, None, None,
                       pb.bound, pb.plateau, seq, tuple(notes))
