"""Dynamical degree sequences and the symmetric-power law.

On a manifold of dimension 2n the degrees of an automorphism-type action
are lambda1^p up to the middle and symmetric after it. Here we check that
law numerically against Sym^p of the isometry, then build the sequences.

Run from the repository root:  python3 demos/02_degree_sequences.py
"""
import numpy as np

from hkdyn import Isometry, Lattice, check_log_concavity, classify, degree_sequence, sym_power_matrix, verify_oguiso
from hkdyn.exact import IntMatrix, to_decimal

# %% product of the simple reflections of I_{1,3}; lambda1 is a Salem number of degree 4
g = IntMatrix.diag([1, -1, -1, -1])
m = IntMatrix([[2, 1, 1, 1], [1, 1, 1, 0], [-1, 0, -1, -1], [-1, -1, 0, -1]])
iso = Isometry(Lattice(g, "I_1,3"), m)
c = classify(iso)
print("char poly:", c.char_poly)
print("lambda1  :", to_decimal(c.lambda1_value, 25))

# %% Sym^p M has eigenvalues the p-fold products of eigenvalues of M
for p in (1, 2, 3):
    s = sym_power_matrix(m, p)
    rho = max(abs(np.linalg.eigvals(s.to_numpy())))
    print(f"p={p}  size {s.nrows:2d}  rho(Sym^p M) = {rho:.12f}")
print("agrees with lambda1^p:", verify_oguiso(iso, c, 3).agrees)

# %% the degree sequence for n = 3 (a six-dimensional manifold)
seq = degree_sequence(c, 3)
for p, v in enumerate(seq):
    print(f"lambda_{p} = {to_decimal(v, 15)}")
print("log-concave:", check_log_concavity(seq))

# an exact quadratic example: every entry lives in Q(sqrt 2)
pell = classify(Isometry(Lattice(IntMatrix([[1, 0], [0, -2]])), IntMatrix([[3, 4], [2, 3]])))
print([str(v) for v in degree_sequence(pell, 2)])
