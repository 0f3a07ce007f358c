"""Shared isometry fixtures and random helpers for the test suite."""
import random

from hkdyn import Isometry, Lattice, catalog
from hkdyn.exact import IntMatrix


def odd_unimodular(n):
    """diag(1, -1, ..., -1) of rank n + 1."""
    return IntMatrix.diag([1] + [-1] * n)


def reflection(gram: IntMatrix, r):
    """Reflection v -> v - 2 (v.r)/(r.r) r, as a matrix acting on columns."""
    n = gram.nrows
    g = gram.rows
    rr = sum(r[i] * g[i][j] * r[j] for i in range(n) for j in range(n))
    cols = []
    for k in range(n):
        vr = sum(g[k][j] * r[j] for j in range(n))
        assert (2 * vr) % rr == 0
        c = 2 * vr // rr
        cols.append([int(i == k) - c * r[i] for i in range(n)])
    return IntMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def reflection_product(n):
    """Product of the simple reflections of I_{1,n} for n = 2, 3, 4."""
    g = odd_unimodular(n)
    roots = []
    for i in range(1, n):
        r = [0] * (n + 1)
        r[i], r[i + 1] = 1, -1
        roots.append(r)
    r = [0] * (n + 1)
    r[n] = 1
    roots.append(r)
    r = [1] + [-1] * min(n, 3) + [0] * (n - min(n, 3))
    roots.append(r)
    m = IntMatrix.identity(n + 1)
    for r in roots:
        m = m @ reflection(g, r)
    return Isometry(Lattice(g, f"I_1,{n}"), m)


PELL = Isometry(Lattice(IntMatrix([[1, 0], [0, -2]]), "diag(1,-2)"), IntMatrix([[3, 4], [2, 3]]))
PELL_NEG = Isometry(PELL.lattice, PELL.matrix * -1)
PARABOLIC = Isometry(Lattice(IntMatrix([[0, 0, 1], [0, -2, 0], [1, 0, 0]]), "U+<-2>"),
                     IntMatrix([[1, 2, 1], [0, 1, 1], [0, 0, 1]]))
IDENTITY_U = Isometry(catalog("U"), IntMatrix.identity(2))
SWAP_U = Isometry(catalog("U"), IntMatrix([[0, 1], [1, 0]]))
REFL3 = reflection_product(2)
REFL4 = reflection_product(3)
REFL5 = reflection_product(4)

LOXODROMIC = {"pell": PELL, "pell_neg": PELL_NEG, "refl3": REFL3, "refl4": REFL4, "refl5": REFL5}
ALL = {**LOXODROMIC, "parabolic": PARABOLIC, "identity": IDENTITY_U, "swap": SWAP_U}


def random_unimodular(n, rng: random.Random, bound=3, steps=None):
    """Random integer matrix of determinant +-1 with entries in [-bound, bound].

    Built from elementary row operations and sign flips, discarding steps
    that push an entry past ``bound``.
    """
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return IntMatrix([[rng.choice((1, -1))]])
    for _ in range(steps if steps is not None else 4 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        new = [a + c * b for a, b in zip(rows[i], rows[j])]
        if max(abs(a) for a in new) <= bound:
            rows[i] = new
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    rows = [[s * a for a in rows[k]] for s, k in zip(signs, perm)]
    return IntMatrix(rows)
