"""
Kernels, images and surjectivity of module maps
===============================================

A map of free modules is given by the images of the basis vectors.
Its kernel comes from a Groebner basis of the graph submodule.
"""

from solvkit import (
    AlgebraDef,
    FreeHom,
    Presentation,
    QuotientHom,
    image_membership,
    image_membership_quotient,
    is_surjective_free,
    is_surjective_quotient,
    kernel_free,
    kernel_quotient,
    validate_algebra,
)

A = validate_algebra(AlgebraDef.commutative(("x", "y")))
x, y = A.gens()

# (a, b) -> a x + b y has the Koszul syzygy as its kernel
phi = FreeHom([x, y])
print("kernel of (x, y)   :", kernel_free(phi))
print("x^2 + y^3 in image :", image_membership(phi, x ** 2 + y ** 3))
print("surjective         :", is_surjective_free(phi))

K = validate_algebra(AlgebraDef.commutative(("t",)))
(t,) = K.gens()
one = K.one()
print("(t, 1 - t)         :", is_surjective_free(FreeHom([t, one - t])))

# maps between quotients K[t]/<relations>
free = Presentation.free(K, 1)
mod_t2 = Presentation(K, 1, (t ** 2,))
psi = QuotientHom(free, mod_t2, [t])
print("kernel into K[t]/<t^2>:", kernel_quotient(psi))
print("t + t^2 in image      :", image_membership_quotient(psi, t + t ** 2))
print("surjective            :", is_surjective_quotient(psi))
