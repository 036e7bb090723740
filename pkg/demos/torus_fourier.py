"""Walkthrough: sparse Fourier vectors on the character torus.

The basis monomials are orthonormal, the twist action permutes them,
evaluation intertwines the two pictures, grid means witness discrete
orthogonality, and decay constants quantify coefficient decay.
"""

import math
import random
from fractions import Fraction

from twistlab import (
    GaussianRational,
    SparseVector,
    TorusPoint,
    act,
    basis_curves,
    decay_constant,
    evaluate,
    grid_mean,
    inner,
    torus_action,
    twist_matrix,
    word_matrix,
    x_basis,
    y_basis,
    zero_class,
)
from twistlab.words import TwistWord

g = 3
rng = random.Random(1)
x1, y1, y2 = x_basis(g, 1), y_basis(g, 1), y_basis(g, 2)

print("== orthonormal basis ==")
e1, e2 = SparseVector.basis(x1), SparseVector.basis(y2)
print("<e_m, e_m> =", inner(e1, e1))
print("<e_m, e_n> =", inner(e1, e2))

print()
print("== the twist action permutes basis vectors ==")
moved = act(twist_matrix(x1), SparseVector.basis(y1))
print("t_x1 moves the y1 monomial to:", moved.support[0])

print()
print("== evaluation and equivariance ==")
v = SparseVector(g, {x1: Fraction(1, 2), y2: GaussianRational(0, 1)})
rho = TorusPoint.from_angles([rng.uniform(0, 2 * math.pi) for _ in range(2 * g)])
table = {c.id: c for c in basis_curves(g)}
M = word_matrix(TwistWord.of(("x1", 1), ("y2", -1), ("x3", 2)), table)
lhs = evaluate(act(M, v), rho)
rhs = evaluate(v, torus_action(M.inv(), rho))
print("evaluate(M v, rho)             =", lhs)
print("evaluate(v, M^-1 rho)          =", rhs)
print("difference                     = %.2e" % abs(lhs - rhs))

print()
print("== grid means: discrete orthogonality ==")
print("mean of a nonconstant monomial:", grid_mean(SparseVector.basis(x1), 5))
one = SparseVector.basis(zero_class(g), full=True)
print("mean of the constant function :", grid_mean(one, 5))

print()
print("== decay constants ==")
m = 2 * x1 - y2
w = SparseVector(g, {m: Fraction(1, 2), x1: Fraction(3, 4)})
for k in range(4):
    print("  F_%d = %s" % (k, decay_constant(w, k)))
