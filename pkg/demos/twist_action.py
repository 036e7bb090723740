"""Walkthrough: the integer homology lattice and the twist action.

Shows the intersection pairing on the symplectic basis, transvections,
twist matrices and their symplectic invariant, infinite orbits, and the
choice of a norm-increasing twist ray for any nonzero class.
"""

import random

from twistlab import (
    HomologyClass,
    basis_curve_class,
    basis_curve_name,
    choose_increasing_twist,
    intersection,
    is_symplectic,
    norm1,
    orbit_ray,
    transvect,
    twist_matrix,
    x_basis,
    y_basis,
)

g = 3
x1, y1 = x_basis(g, 1), y_basis(g, 1)
x2, y2 = x_basis(g, 2), y_basis(g, 2)

print("== intersection pairing on the basis ==")
print("i(x1, y1) =", intersection(x1, y1))
print("i(y1, x1) =", intersection(y1, x1))
print("i(x1, x2) =", intersection(x1, x2))
print("i(x1 + 2 y2, y1) =", intersection(x1 + 2 * y2, y1))

print()
print("== transvections ==")
m = 2 * x1 + 3 * y1
print("m          =", m, " |m| =", norm1(m))
print("t_x1 m     =", transvect(x1, 1, m))
print("t_y1^-1 m  =", transvect(y1, -1, m))
print("t_x1 fixes x1:", transvect(x1, 1, x1) == x1)

print()
print("== twist matrices are symplectic ==")
c = x1 + y2
M = twist_matrix(c)
for row in M.rows:
    print("  ", row)
print("is_symplectic:", is_symplectic(M))

print()
print("== orbits are infinite when the pairing is nonzero ==")
ray = orbit_ray(x1, 1, y1, 5)
print("orbit of y1 under t_x1:", ", ".join(str(p) for p in ray))
print("distinct entries:", len({p.coords for p in ray}))

print()
print("== a norm-increasing ray exists for every nonzero class ==")
rng = random.Random(0)
for _ in range(3):
    coords = [rng.randint(-5, 5) for _ in range(2 * g)]
    if not any(coords):
        coords[0] = 1
    m = HomologyClass(coords)
    idx, eps = choose_increasing_twist(m)
    c = basis_curve_class(g, idx)
    norms = [norm1(transvect(c, eps * n, m)) for n in range(8)]
    print(
        "m = %-18s  curve %-3s eps %+d  norms %s"
        % (m, basis_curve_name(idx), eps, norms)
    )
