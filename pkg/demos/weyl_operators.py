"""
Differential operators in the first Weyl algebra
================================================

The Weyl algebra is generated by x and d subject to d*x = x*d + 1.
Elements act on K[x] with d as the derivative.
"""

from solvkit import QQ, AlgebraDef, DegLex, buchberger, member, normal_form, validate_algebra

# a relation table maps (j, i) with j > i to (lambda, lower-order part)
W = validate_algebra(AlgebraDef(("x", "d"), QQ, {(1, 0): (1, {(0, 0): 1})}, DegLex.natural(2)))
x, d = W.gens()
print("checks passed:", ", ".join(W.checks))

# products are returned in PBW form: powers of x to the left of powers of d
print("d * x^2     =", d * x ** 2)
print("d^3 * x^3   =", d ** 3 * x ** 3)

# the same values, parsed from text
assert d ** 3 * x ** 3 == W("x^3*d^3 + 9*x^2*d^2 + 18*x*d + 6")

# x and d generate the whole algebra as a left ideal
print("gb(x, d)    =", buchberger([x, d]))

# the left ideal generated by d^2 and x*d^2 + d^2 is just <d^2>
G = buchberger([d ** 2, x * d ** 2 + d ** 2])
print("gb          =", G)
r, quotients = normal_form(x * d ** 2 + 3 * d, G)
print("remainder   =", r)
print("d^3 member? ", bool(member(d ** 3, G)))
