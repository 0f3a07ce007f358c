"""Classifying lattice isometries: loxodromic, parabolic, elliptic.

Run from the repository root:  python3 demos/01_trichotomy.py
"""
from hkdyn import Isometry, Lattice, catalog, classify, growth_profile, invariant_isotropic_lines
from hkdyn.exact import IntMatrix, matrix_power

# %% A Pell-type isometry of diag(1, -2). Its characteristic polynomial is
# x^2 - 6x + 1, so the spectral radius is the unit 3 + 2*sqrt(2).
pell = Isometry(Lattice(IntMatrix([[1, 0], [0, -2]]), "diag(1,-2)"), IntMatrix([[3, 4], [2, 3]]))
c = classify(pell)
print(c)
print("exact lambda1:", c.lambda1_exact, " minimal polynomial x^2 -", c.lambda1_quadratic, "x + 1")

# the two eigenlines sit on the isotropic cone q(v) = 0
for line in invariant_isotropic_lines(pell, c):
    print("eigenvalue", line.eigenvalue, " v =", [str(x) for x in line.vector], " q(v) =", line.form_value)

# %% A unipotent isometry of U + <-2>: one Jordan block of size 3.
par = Isometry(Lattice(IntMatrix([[0, 0, 1], [0, -2, 0], [1, 0, 0]])),
               IntMatrix([[1, 2, 1], [0, 1, 1], [0, 0, 1]]))
c = classify(par)
print(c)
rate, degree = growth_profile(c)
print("growth: polynomial of degree", degree)
for n in (10, 20, 40, 80):
    norm = matrix_power(par.matrix, n).max_abs_row_sum()
    print(f"  n={n:3d}  ||M^n|| = {norm:6d}   ||M^n|| / n^2 = {norm / n**2:.4f}")

# %% Finite order: swapping the two isotropic vectors of U.
swap = Isometry(catalog("U"), IntMatrix([[0, 1], [1, 0]]))
print(classify(swap))
