"""
Elimination, intersection and dimension
=======================================

Eliminating generators from a left ideal contracts it to a subalgebra.
Intersections of two ideals use an extra central variable t.
"""

from solvkit import (
    QQ,
    AlgebraDef,
    Lex,
    eliminate_ideal,
    gk_dim_search,
    intersect_ideals,
    validate_algebra,
    weakly_independent,
)

A = validate_algebra(AlgebraDef.commutative(("x", "y"), QQ, Lex.natural(2)))
x, y = A.gens()

# <x - y^2, y^3> meets K[y] in <y^3>
G = eliminate_ideal([x - y ** 2, y ** 3], {"y"})
print("contraction to K[y]:", G, "over", G.algebra.names)

# the lcm appears as the generator of an intersection of principal ideals
K = validate_algebra(AlgebraDef.commutative(("x",)))
(t,) = K.gens()
print("<x> cap <x + 1>    :", intersect_ideals([t], [t + 1]))

# y is independent modulo <x>, x is not
print("{y} independent    :", bool(weakly_independent([x], {"y"})))
print("{x} independent    :", bool(weakly_independent([x], {"x"})))
print("dimension of A/<x> :", gk_dim_search([x]))
