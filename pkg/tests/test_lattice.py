import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_fixtures import random_unimodular
from hkdyn import Lattice, catalog, evaluate, pair, signature
from hkdyn.errors import DegenerateFormError, DimensionError, DomainError, UnknownLatticeError
from hkdyn.exact import IntMatrix, determinant
from hkdyn.lattice import FULL_H2_NAMES


def numpy_signature(gram: IntMatrix):
    ev = np.linalg.eigvalsh(gram.to_numpy())
    return int((ev > 0).sum()), int((ev < 0).sum())


@pytest.mark.parametrize("name,n,expected", [
    ("K3", None, (3, 19)),
    ("K3n", 2, (3, 20)),
    ("K3n", 5, (3, 20)),
    ("Kummer", 2, (3, 4)),
    ("Kummer", 3, (3, 4)),
    ("U", None, (1, 1)),
    ("E8minus", None, (0, 8)),
])
def test_catalog_signatures(name, n, expected):
    lat = catalog(name, n)
    assert tuple(signature(lat)) == expected
    assert numpy_signature(lat.gram) == expected


def test_full_h2_entries_have_three_positive():
    for name in FULL_H2_NAMES:
        for n in ((None,) if name == "K3" else (2, 3, 4)):
            lat = catalog(name, n)
            assert tuple(lat.signature()) == (3, lat.rank - 3)


def test_discriminants():
    assert catalog("K3").discriminant == -1
    assert catalog("E8minus").discriminant == 1
    assert catalog("K3n", 3).discriminant == 4
    assert catalog("Kummer", 2).discriminant == 6


def test_fujiki_constants():
    assert catalog("K3n", 2).fujiki_constant == 3
    assert catalog("K3n", 3).fujiki_constant == 15
    assert catalog("Kummer", 2).fujiki_constant == 9
    assert catalog("U").fujiki_constant is None


def test_catalog_errors():
    with pytest.raises(UnknownLatticeError):
        catalog("Enriques")
    with pytest.raises(DomainError):
        catalog("K3n", 1)
    with pytest.raises(DomainError):
        catalog("Kummer")


def test_invalid_grams():
    with pytest.raises(DimensionError):
        Lattice(IntMatrix([[1, 2, 3]]))
    with pytest.raises(ValueError):
        Lattice(IntMatrix([[1, 2], [3, 4]]))
    with pytest.raises(DegenerateFormError):
        Lattice(IntMatrix([[1, 1], [1, 1]]))


def test_zero_diagonal_needs_hyperbolic_split():
    # no nonzero diagonal entry at all
    g = IntMatrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 3], [0, 0, 3, 0]])
    assert tuple(signature(Lattice(g))) == (2, 2)


def symmetric_nondegenerate(n):
    return st.lists(st.integers(-4, 4), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
        lambda c: _sym(n, c)).filter(lambda g: determinant(g) != 0)


def _sym(n, coeffs):
    it = iter(coeffs)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = next(it)
    return IntMatrix(rows)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(symmetric_nondegenerate))
def test_signature_matches_numpy_and_sums_to_rank(g):
    s = Lattice(g).signature()
    assert s.positives + s.negatives == g.nrows
    assert (s.positives, s.negatives) == numpy_signature(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(symmetric_nondegenerate), st.integers(0, 2**32))
def test_signature_congruence_invariant(g, seed):
    p = random_unimodular(g.nrows, random.Random(seed))
    assert Lattice(p.T @ g @ p).signature() == Lattice(g).signature()


@settings(max_examples=100)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(symmetric_nondegenerate(n),
                        st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                        st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_polarization_identity(args):
    g, v, w = args
    lat = Lattice(g)
    s = [a + b for a, b in zip(v, w)]
    assert evaluate(lat, s) == evaluate(lat, v) + evaluate(lat, w) + 2 * pair(lat, v, w)


def test_orthogonal_sum_and_twist():
    k3 = catalog("K3")
    assert k3.rank == 22
    s = catalog("U") + catalog("U")
    assert tuple(s.signature()) == (2, 2)
    assert tuple(catalog("U").twist(-1).signature()) == (1, 1)


def test_json_round_trip():
    lat = catalog("Kummer", 2)
    again = Lattice.from_json(lat.to_json())
    assert again.gram == lat.gram and again.label == lat.label
