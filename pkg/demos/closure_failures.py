"""
Generator subsets that do not span a subalgebra
===============================================

Elimination needs the ordered monomials in the kept generators to span
the subalgebra they generate.  Two algebras where this fails are shown.
"""

from fractions import Fraction

from solvkit import QQ, AlgebraDef, DegLex, Lex, eliminate_ideal, subalgebra_closure_check, validate_algebra

# q-Heisenberg with q = 2: x z = q z x, z y = q y z, x y = y x / q + z
q = Fraction(2)
H = validate_algebra(AlgebraDef(("x", "y", "z"), QQ,
                                {(2, 0): (1 / q, {}), (2, 1): (q, {}), (1, 0): (q, {(0, 0, 1): -q})},
                                DegLex.natural(3)))
print(subalgebra_closure_check(H, {"x", "y"}))
print("{x, z} closed:", subalgebra_closure_check(H, {"x", "z"}) is None)

# a3 a1 = a1 a3 + a2^2 a3 + a2, all other pairs commute
B = validate_algebra(AlgebraDef(("a1", "a2", "a3"), QQ,
                                {(1, 0): (1, {}), (2, 0): (1, {(0, 2, 1): 1, (0, 1, 0): 1}), (2, 1): (1, {})},
                                Lex.natural(3)))
a1, a2, a3 = B.gens()
failure = eliminate_ideal([a1 + a3], {"a1", "a3"})
print(failure)
print("offending monomial:", B.format_monomial(failure.monomial))
