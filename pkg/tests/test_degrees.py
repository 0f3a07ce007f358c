import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import lattice_fixtures as F
from hkdyn import classify, check_log_concavity, degree_sequence, sym_power_matrix, verify_oguiso
from hkdyn.errors import CapacityError, DomainError
from hkdyn.exact import IntMatrix, QuadraticNumber, RationalInterval
from hkdyn.exact.values import compare


def test_integer_lambda():
    assert [int(v) for v in degree_sequence(2, 2)] == [1, 2, 4, 2, 1]


def test_all_ones():
    seq = degree_sequence(1, 3)
    assert list(seq) == [1] * 7
    assert check_log_concavity(seq).ok is True


def test_pell_sequence_exact():
    lam = QuadraticNumber(3, 2, 2)
    seq = degree_sequence(lam, 2)
    assert seq[0] == 1 and seq[4] == 1
    assert seq[1] == lam and seq[3] == lam
    assert seq[2] == QuadraticNumber(17, 12, 2)
    assert abs(float(seq[2]) - 33.9705627) < 1e-6


def test_sequence_from_classification_uses_exact_value():
    seq = degree_sequence(classify(F.PELL), 3)
    assert seq[3] == QuadraticNumber(3, 2, 2) ** 3


def test_salem_sequence_is_root_powers():
    seq = degree_sequence(classify(F.REFL4), 3)
    c = compare(seq[3], seq[2])
    assert c == 1
    assert seq.is_power_law()
    assert check_log_concavity(seq).ok is True


def test_interval_input():
    iv = RationalInterval(Fraction(2), Fraction(2) + Fraction(1, 10**12))
    seq = degree_sequence(iv, 2)
    assert isinstance(seq[2], RationalInterval)
    assert seq[2].contains(4)


def test_domain_errors():
    with pytest.raises(DomainError):
        degree_sequence(Fraction(1, 2), 2)
    with pytest.raises(DomainError):
        degree_sequence(2, 0)
    with pytest.raises(TypeError):
        degree_sequence(2.5, 2)


def test_log_concavity_examples():
    assert check_log_concavity([1, 2, 4, 2, 1]) == (True, None)
    assert check_log_concavity([1, 2, 1, 2, 1]) == (False, 2)
    assert check_log_concavity([1, 1, 1]) == (True, None)
    with pytest.raises(DomainError):
        check_log_concavity([1, 0, 1])


def test_log_concavity_indeterminate_on_fuzzy_intervals():
    a = RationalInterval(Fraction(19, 10), Fraction(21, 10))
    assert check_log_concavity([1, a, 4]).ok is None


units = st.tuples(st.integers(3, 20), st.sampled_from([1, -1]))


@settings(max_examples=100, deadline=None)
@given(units, st.integers(1, 5))
def test_degree_sequence_properties(unit, n):
    t, norm = unit
    lam = QuadraticNumber.unit_root(t, norm)
    seq = degree_sequence(lam, n)
    assert len(seq) == 2 * n + 1
    assert seq[0] == 1 and seq[2 * n] == 1
    assert list(seq.reversed()) == list(seq)
    assert all(compare(v, 1) >= 0 for v in seq)
    # exact check on the values themselves, not on the exponents
    assert check_log_concavity(list(seq.values)).ok is True


def test_sym_power_examples():
    m = IntMatrix([[3, 4], [2, 3]])
    assert sym_power_matrix(m, 1) == m
    assert sym_power_matrix(IntMatrix.diag([2, 3]), 2) == IntMatrix.diag([4, 6, 9])
    s2 = sym_power_matrix(m, 2)
    assert s2.nrows == 3
    rho = max(abs(np.linalg.eigvals(s2.to_numpy())))
    assert abs(rho - 33.97056) < 1e-4


def test_sym_power_cap():
    with pytest.raises(CapacityError):
        sym_power_matrix(IntMatrix.identity(50), 4, cap=10**4)


@pytest.mark.parametrize("name", sorted(F.LOXODROMIC))
def test_oguiso_agreement(name):
    iso = F.LOXODROMIC[name]
    rep = verify_oguiso(iso, classify(iso), 3)
    assert rep.agrees
    assert [r.p for r in rep.rows] == [1, 2, 3]


@pytest.mark.parametrize("iso", [F.IDENTITY_U, F.SWAP_U])
def test_oguiso_elliptic_radius_one(iso):
    rep = verify_oguiso(iso, classify(iso), 3)
    assert rep.agrees
    assert all(abs(r.numeric_radius - 1) < 1e-9 for r in rep.rows)


def test_sym2_of_involution_is_involution():
    s = sym_power_matrix(F.SWAP_U.matrix, 2)
    assert s @ s == IntMatrix.identity(3)


def test_random_products_log_concave():
    rng = random.Random(7)
    for _ in range(20):
        lam = QuadraticNumber.unit_root(rng.randint(3, 20))
        seq = degree_sequence(lam, rng.randint(1, 5))
        assert check_log_concavity(seq).ok is True
