"""Shared randomized generators and independent oracles for the tests.

Oracles here intentionally avoid the library code paths they check:
matrix products are done on plain lists, the pairing is expanded over
basis pairs, grid means are brute-force sums.
"""

import cmath
import itertools
import math
from fractions import Fraction

from twistlab import (
    GaussianRational,
    HomologyClass,
    SparseVector,
    TorusPoint,
    TwistWord,
)


def rand_class(rng, g, coord_bound, nonzero=True):
    while True:
        coords = tuple(rng.randint(-coord_bound, coord_bound) for _ in range(2 * g))
        if any(coords) or not nonzero:
            return HomologyClass(coords)


def rand_class_norm(rng, g, max_norm):
    "Nonzero class with norm1 <= max_norm."
    while True:
        coords = [0] * (2 * g)
        budget = max_norm
        for i in range(2 * g):
            coords[i] = rng.randint(-budget, budget)
            budget -= abs(coords[i])
        rng.shuffle(coords)
        if any(coords):
            return HomologyClass(coords)


def rand_fraction(rng, num_bound=1000, den_bound=1000):
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_scalar(rng, num_bound=1000, den_bound=1000):
    return GaussianRational(
        rand_fraction(rng, num_bound, den_bound), rand_fraction(rng, num_bound, den_bound)
    )


def rand_sparse(rng, g, size, coord_bound=3, num_bound=1000, den_bound=1000):
    entries = {}
    while len(entries) < size:
        m = rand_class(rng, g, coord_bound)
        entries[m] = rand_scalar(rng, num_bound, den_bound)
    return SparseVector(g, entries)


def rand_basis_word(rng, g, max_len, max_exp=2):
    names = ["%s%d" % (k, j) for j in range(1, g + 1) for k in ("x", "y")]
    letters = []
    for _ in range(rng.randint(1, max_len)):
        e = 0
        while e == 0:
            e = rng.randint(-max_exp, max_exp)
        letters.append((rng.choice(names), e))
    return TwistWord(tuple(letters))


def rand_torus_point(rng, g):
    return TorusPoint.from_angles([rng.uniform(0.0, 2.0 * math.pi) for _ in range(2 * g)])


# ---------------------------------------------------------------- oracles


def oracle_intersection(m, n):
    "Bilinear expansion over basis pairs from the defining table."
    g = m.genus
    total = 0
    for j in range(g):
        aj, bj = m.coords[2 * j], m.coords[2 * j + 1]
        cj, dj = n.coords[2 * j], n.coords[2 * j + 1]
        # i(x_j, y_j) = 1, i(y_j, x_j) = -1, everything else 0
        total += aj * dj * 1 + bj * cj * (-1)
    return total


def mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def oracle_transvection_rows(c, n=1):
    "I + n c c^T J over plain lists."
    dim = len(c.coords)
    rows = mat_identity(dim)
    w = [0] * dim
    for k in range(0, dim, 2):
        w[k] = -c.coords[k + 1]
        w[k + 1] = c.coords[k]
    for i in range(dim):
        for j in range(dim):
            rows[i][j] += n * c.coords[i] * w[j]
    return rows


def oracle_symplectic(rows):
    "M^T J M == J over plain lists."
    dim = len(rows)
    J = [[0] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        J[k][k + 1] = 1
        J[k + 1][k] = -1
    Mt = [list(col) for col in zip(*rows)]
    return mat_mul(mat_mul(Mt, J), [list(r) for r in rows]) == J


def brute_grid_mean(v, N):
    "Average of evaluate over the full N^(2g) grid, summed point by point."
    g = v.genus
    total = 0j
    for idx in itertools.product(range(N), repeat=2 * g):
        value = 0j
        for m, coeff in v.items():
            phase = sum(2.0 * math.pi * t * a / N for t, a in zip(idx, m.coords))
            value += complex(coeff) * cmath.exp(1j * phase)
        total += value
    return total / N ** (2 * g)


def oracle_evaluate(v, rho):
    "Monomial products via complex powers, not the angle dot product."
    vals = rho.values
    total = 0j
    for m, coeff in v.items():
        term = complex(coeff)
        for z, a in zip(vals, m.coords):
            term *= z ** a
        total += term
    return total


