"""Exact integer and rational arithmetic: matrices, polynomials, root isolation."""
from hkdyn.exact.interval import RationalInterval, sqrt_bounds
from hkdyn.exact.matrix import (
    IntMatrix,
    char_poly,
    char_poly_and_adjugate,
    determinant,
    eval_poly_at_matrix,
    inverse,
    matrix_power,
    rank,
    symmetric_power,
)
from hkdyn.exact.poly import (
    IntPolynomial,
    cyclotomic,
    cyclotomic_factorization,
    is_cyclotomic_product,
    squarefree_part,
    totient,
)
from hkdyn.exact.quadratic import QuadraticNumber
from hkdyn.exact.roots import RealRoot, count_roots, real_roots_above_one, sturm_chain
from hkdyn.exact.values import RootPower, compare, multiply, to_decimal, to_interval

__all__ = [
    "IntMatrix", "IntPolynomial", "QuadraticNumber", "RationalInterval", "RealRoot",
    "RootPower", "char_poly", "char_poly_and_adjugate", "compare", "count_roots",
    "cyclotomic", "cyclotomic_factorization", "determinant", "eval_poly_at_matrix",
    "inverse", "is_cyclotomic_product", "matrix_power", "multiply", "rank",
    "real_roots_above_one", "sqrt_bounds", "squarefree_part", "sturm_chain",
    "symmetric_power", "to_decimal", "to_interval", "totient",
]
