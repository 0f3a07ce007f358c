import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hkdyn.errors import DimensionError, InvalidPolynomialError
from hkdyn.exact import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    char_poly_and_adjugate,
    cyclotomic,
    determinant,
    eval_poly_at_matrix,
    inverse,
    is_cyclotomic_product,
    matrix_power,
    rank,
    squarefree_part,
    symmetric_power,
    totient,
)
from hkdyn.exact.poly import poly_gcd

small = st.integers(-4, 4)


def square(n_max=5, lo=-4, hi=4):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n))


# -- polynomials --------------------------------------------------------

def test_poly_str_and_arithmetic():
    p = IntPolynomial([1, -6, 1])
    assert str(p) == "x^2 - 6*x + 1"
    assert p.degree == 2 and p.is_monic()
    q = IntPolynomial([-1, 1])
    assert (p * q) // q == p
    assert (p * q) % q == IntPolynomial([])
    assert p(3) == -8
    assert p.reflect() == IntPolynomial([1, 6, 1])
    assert p.substitute_square() == IntPolynomial([1, 0, -6, 0, 1])


@given(st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=6))
def test_poly_multiplication_matches_sympy(a, b):
    x = sp.Symbol("x")
    pa, pb = IntPolynomial(a), IntPolynomial(b)
    expected = sp.Poly(sp.expand(sum(c * x**i for i, c in enumerate(a)) *
                                 sum(c * x**i for i, c in enumerate(b))), x)
    got = pa * pb
    if got.is_zero():
        assert expected.is_zero
    else:
        assert list(got.coeffs) == [int(c) for c in expected.all_coeffs()[::-1]]


def test_cyclotomic_values():
    assert cyclotomic(1) == IntPolynomial([-1, 1])
    assert cyclotomic(5) == IntPolynomial([1, 1, 1, 1, 1])
    assert cyclotomic(12) == IntPolynomial([1, 0, -1, 0, 1])
    assert [totient(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("m", range(1, 40))
def test_cyclotomic_matches_sympy(m):
    x = sp.Symbol("x")
    ref = sp.Poly(sp.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic(m).coeffs) == [int(c) for c in ref]


def test_is_cyclotomic_product_examples():
    assert is_cyclotomic_product(IntPolynomial([1, 1, 1, 1, 1])) == (True, [(5, 1)])
    assert is_cyclotomic_product(IntPolynomial([1, -6, 1])) == (False, [])
    ok, factors = is_cyclotomic_product(IntPolynomial([-1, 3, -3, 1]))
    assert ok and factors == [(1, 3)]
    with pytest.raises(InvalidPolynomialError):
        is_cyclotomic_product(IntPolynomial([0, 1]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=4))
def test_cyclotomic_products_detected_and_roots_on_circle(orders):
    p = IntPolynomial([1])
    for m in orders:
        p = p * cyclotomic(m)
    ok, factors = is_cyclotomic_product(p)
    assert ok
    assert sorted(m for m, k in factors for _ in range(k)) == sorted(orders)
    # numpy loses accuracy on repeated roots, so test the squarefree part
    roots = np.roots(list(reversed(squarefree_part(p).coeffs)))
    assert np.allclose(np.abs(roots), 1.0, atol=1e-4)


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 4).filter(bool), st.lists(small, max_size=5))
def test_non_cyclotomic_has_root_off_circle(c0, middle):
    p = IntPolynomial([c0, *middle, 1])
    ok, _ = is_cyclotomic_product(p)
    roots = np.roots(list(reversed(squarefree_part(p).coeffs)))
    off = np.any(np.abs(np.abs(roots) - 1) > 1e-6)
    if ok:
        assert not off
    else:
        # Kronecker: a monic integer polynomial with all roots on the circle is cyclotomic
        assert off


def test_gcd_and_squarefree():
    a = cyclotomic(1) ** 2 * cyclotomic(3)
    assert squarefree_part(a) == cyclotomic(1) * cyclotomic(3)
    assert poly_gcd(a, cyclotomic(1) * cyclotomic(4)) == cyclotomic(1)


# -- matrices -----------------------------------------------------------

def test_char_poly_examples():
    assert char_poly(IntMatrix([[3, 4], [2, 3]])) == IntPolynomial([1, -6, 1])
    assert char_poly(IntMatrix([[0, 1], [1, 0]])) == IntPolynomial([-1, 0, 1])
    assert char_poly(IntMatrix.identity(3)) == IntPolynomial([-1, 3, -3, 1])


@settings(max_examples=80, deadline=None)
@given(square())
def test_char_poly_matches_sympy(rows):
    m = IntMatrix(rows)
    x = sp.Symbol("x")
    ref = sp.Matrix(rows).charpoly(x).all_coeffs()[::-1]
    assert list(char_poly(m).coeffs) == [int(c) for c in ref]


@settings(max_examples=80, deadline=None)
@given(square())
def test_cayley_hamilton(rows):
    m = IntMatrix(rows)
    assert eval_poly_at_matrix(char_poly(m), m).is_zero()


@settings(max_examples=50, deadline=None)
@given(square(4))
def test_adjugate_identity(rows):
    # (xI - M) adj(xI - M) = p(x) I, checked at a few integer points
    m = IntMatrix(rows)
    p, adj = char_poly_and_adjugate(m)
    n = m.nrows
    for x0 in (-2, 0, 3):
        a = IntMatrix.zeros(n)
        for k, ak in enumerate(adj):
            a = a + ak * x0 ** (n - 1 - k)
        lhs = (IntMatrix.identity(n) * x0 - m) @ a
        assert lhs == IntMatrix.identity(n) * p(x0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_svd(r, c, data):
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    # low-rank inputs are the interesting ones
    if data.draw(st.booleans()) and r > 1:
        rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % r])]
    assert rank(IntMatrix(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@settings(max_examples=80, deadline=None)
@given(square())
def test_determinant_matches_sympy(rows):
    assert determinant(IntMatrix(rows)) == sp.Matrix(rows).det()


def test_inverse_and_power():
    m = IntMatrix([[3, 4], [2, 3]])
    assert inverse(m) == IntMatrix([[3, -4], [-2, 3]])
    assert matrix_power(m, 3) == m @ m @ m
    assert matrix_power(m, 0) == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        inverse(IntMatrix([[2, 0], [0, 1]]))
    with pytest.raises(DimensionError):
        IntMatrix([[1, 2], [3, 4]]) @ IntMatrix([[1, 2, 3]])


@settings(max_examples=40, deadline=None)
@given(square(3, -3, 3), square(3, -3, 3))
def test_symmetric_power_functorial(a, b):
    if len(a) != len(b):
        return
    ma, mb = IntMatrix(a), IntMatrix(b)
    for p in (1, 2, 3):
        assert symmetric_power(ma @ mb, p) == symmetric_power(ma, p) @ symmetric_power(mb, p)


def test_symmetric_power_dimension_and_cap():
    from math import comb
    from hkdyn.errors import CapacityError
    m = IntMatrix.identity(4)
    assert symmetric_power(m, 3).nrows == comb(6, 3)
    with pytest.raises(CapacityError):
        symmetric_power(IntMatrix.identity(30), 4, cap=1000)


def test_symmetric_power_eigenvalues():
    rng = random.Random(3)
    for _ in range(10):
        rows = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        m = IntMatrix(rows)
        ev = np.linalg.eigvals(np.array(rows, dtype=float))
        s2 = np.linalg.eigvals(symmetric_power(m, 2).to_numpy())
        expected = [ev[i] * ev[j] for i in range(3) for j in range(i, 3)]
        assert np.allclose(np.sort_complex(np.round(s2, 6)), np.sort_complex(np.round(expected, 6)),
                           atol=1e-4)
