"""Walkthrough: the builtin relation catalog and the Torelli test.

Verifies every catalog instance by exact matrix equality, shows a broken
instance failing, re-derives the chain boundary classes by bounded
search, and tests words for trivial homology action.
"""

from twistlab import (
    Curve,
    SymplecticMatrix,
    TwistWord,
    builtin_catalog,
    find_twist_pair,
    is_torelli,
    verify_relation,
    word_matrix,
    x_basis,
)

g = 3
catalog = builtin_catalog(g)

print("== builtin catalog, genus 3 ==")
for rel in catalog:
    print("  %-22s %s" % (rel.name, "ok" if verify_relation(rel) else "FAILED"))

print()
print("== a braid instance with disjoint classes must fail ==")
broken = type(catalog[0])(
    name="broken-braid",
    curves=(Curve("a", x_basis(g, 1)), Curve("b", x_basis(g, 2))),
    lhs=TwistWord.of(("a", 1), ("b", 1), ("a", 1)),
    rhs=TwistWord.of(("b", 1), ("a", 1), ("b", 1)),
)
print("verify_relation(broken braid):", verify_relation(broken))

print()
print("== chain boundary classes by bounded search ==")
chain = next(r for r in catalog if r.name.startswith("chain"))
M = word_matrix(chain.lhs, chain.curves)
d, e = find_twist_pair(M, 6)
print("(t_a t_b t_c)^4 = t_d t_e with d = %s, e = %s" % (d, e))
print("matches frozen catalog:", {d, e} == {chain.table["d"].cls, chain.table["e"].cls})

print()
print("== Torelli membership at the symplectic level ==")
bp = next(r for r in catalog if r.name.startswith("bounding"))
print("bounding pair word acts trivially:", is_torelli(bp.lhs, bp.curves))
single = TwistWord.of(("a1", 1))
lantern = next(r for r in catalog if r.name.startswith("lantern"))
print("single twist acts trivially:", is_torelli(single, lantern.curves))
print(
    "bounding pair matrix is the identity:",
    word_matrix(bp.lhs, bp.curves) == SymplecticMatrix.identity(2 * g),
)
