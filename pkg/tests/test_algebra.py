import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import ALGEBRAS, SMALL, commutative, polys, to_sympy, weyl
from solvkit import (
    GF,
    QQ,
    AlgebraDef,
    DegLex,
    IncompleteRelationTable,
    LeadingMonomialNotSmaller,
    Lex,
    OverlapInconsistent,
    ZeroLambda,
    extend_with_t,
    mul,
    mul_mono,
    subalgebra,
    tensor,
    validate_algebra,
)
from solvkit.algebra import Algebra, _exp, _word, rewrite_words


def test_validated_suite():
    for name, A in ALGEBRAS.items():
        assert A.checks == ("lambda-nonzero", "lm-descent", "overlap-confluence"), name


def test_direct_construction_is_refused():
    d = AlgebraDef.commutative(("x",))
    with pytest.raises(TypeError):
        Algebra(d, {}, ())


def inconsistent_triple():
    # x < y < z:  y x = 2 x y,  z y = y z,  z x = x z + y
    rels = {(1, 0): (2, {}), (2, 1): (1, {}), (2, 0): (1, {(0, 1, 0): 1})}
    return AlgebraDef(("x", "y", "z"), QQ, rels, DegLex.natural(3))


def test_inconsistent_triple_is_rejected_with_both_normal_forms():
    with pytest.raises(OverlapInconsistent) as info:
        validate_algebra(inconsistent_triple())
    err = info.value
    assert (err.k, err.j, err.i) == (2, 1, 0)
    # (z y) x -> 2 x y z + y^2 ;  z (y x) -> 2 x y z + 2 y^2
    assert err.left == {(1, 1, 1): 2, (0, 2, 0): 1}
    assert err.right == {(1, 1, 1): 2, (0, 2, 0): 2}


def test_zero_lambda():
    d = AlgebraDef(("x", "d"), QQ, {(1, 0): (0, {(0, 0): 1})}, DegLex.natural(2))
    with pytest.raises(ZeroLambda) as info:
        validate_algebra(d)
    assert (info.value.j, info.value.i) == (1, 0)


def test_leading_monomial_not_smaller():
    # d x = x d + x^2 violates descent under deglex
    d = AlgebraDef(("x", "d"), QQ, {(1, 0): (1, {(2, 0): 1})}, DegLex.natural(2))
    with pytest.raises(LeadingMonomialNotSmaller):
        validate_algebra(d)


def test_incomplete_table():
    d = AlgebraDef(("x", "y", "z"), QQ, {(1, 0): (1, {})}, DegLex.natural(3))
    with pytest.raises(IncompleteRelationTable):
        validate_algebra(d)


def test_commutative_under_lex_and_deglex():
    for order in (Lex.natural(2), DegLex.natural(2)):
        A = commutative(order=order)
        assert A.is_commutative()


def test_weyl_products():
    W = weyl()
    x, d = W.gens()
    assert mul_mono(W, (0, 1), (1, 0)) == x * d + 1
    assert mul_mono(W, (0, 2), (1, 0)) == x * d ** 2 + 2 * d
    assert mul(W, d, x ** 2) == x ** 2 * d + 2 * x
    assert mul_mono(W, (0, 0), (3, 2)) == W.monomial((3, 2))
    assert d ** 3 * x ** 3 == W("x^3*d^3 + 9*x^2*d^2 + 18*x*d + 6")


def test_zero_and_linear_ops():
    A = commutative()
    x, y = A.gens()
    f = x + y
    assert mul(A, f, A.zero()).is_zero() and mul(A, A.zero(), f).is_zero()
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert f + 0 == f
    assert (f - f).is_zero()
    assert 2 * (x + y) == 2 * x + 2 * y


def apply_weyl(W, f, p, X):
    """Apply the differential operator f in A_1 to the sympy polynomial p(X)."""
    out = sympy.Integer(0)
    for (a, b), c in f.terms.items():
        out += sympy.Rational(c.numerator, c.denominator) * X ** a * sympy.diff(p, X, b)
    return sympy.expand(out)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_weyl_operator_action(data):
    W = weyl()
    X = sympy.Symbol("X")
    f = data.draw(polys(W, maxdeg=3))
    g = data.draw(polys(W, maxdeg=3))
    coeffs = data.draw(st.lists(st.integers(-5, 5), min_size=1, max_size=7))
    p = sum(c * X ** k for k, c in enumerate(coeffs))
    assert apply_weyl(W, f * g, p, X) == apply_weyl(W, f, apply_weyl(W, g, p, X), X)


@pytest.mark.parametrize("name", sorted(SMALL))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_associativity(name, data):
    A = SMALL[name]
    f, g, h = (data.draw(polys(A)) for _ in range(3))
    assert (f * g) * h == f * (g * h)


@pytest.mark.parametrize("name", sorted(SMALL))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_lm_multiplicative_and_no_zero_divisors(name, data):
    A = SMALL[name]
    f = data.draw(polys(A, nonzero=True))
    g = data.draw(polys(A, nonzero=True))
    p = f * g
    assert not p.is_zero()
    assert p.lm() == tuple(a + b for a, b in zip(f.lm(), g.lm()))


@pytest.mark.parametrize("name", sorted(SMALL))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_recursive_product_matches_leftmost_rewriting(name, data):
    A = SMALL[name]
    a = data.draw(st.tuples(*[st.integers(0, 2) for _ in range(A.n)]))
    b = data.draw(st.tuples(*[st.integers(0, 2) for _ in range(A.n)]))
    words = rewrite_words(A.relations, A.n, {_word(a) + _word(b): A.field.one})
    assert A.mul_mono(a, b).terms == words


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_rewriting_strictly_descends(name):
    A = ALGEBRAS[name]
    key = A.order.key
    for (j, i) in A.relations:
        top = key(_exp((i, j), A.n))
        seen = []
        rewrite_words(A.relations, A.n, {(j, i): A.field.one}, observe=seen.append)
        for w in seen:
            if sorted(w) == [i, j]:
                continue
            assert key(_exp(w, A.n)) < top


@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_commutative_oracle(data):
    A = ALGEBRAS["comm3"]
    syms = sympy.symbols("x y z")
    f = data.draw(polys(A, maxdeg=3, max_terms=4))
    g = data.draw(polys(A, maxdeg=3, max_terms=4))
    assert to_sympy(f * g, syms) == sympy.expand(to_sympy(f, syms) * to_sympy(g, syms))


def test_gf_arithmetic():
    F = GF(7)
    A = ALGEBRAS["weyl_gf5"]
    x, d = A.gens()
    # d^5 x = x d^5 + 5 d^4 and 5 vanishes in GF(5)
    assert d ** 5 * x == x * d ** 5
    assert str(5 * x) == "0"
    assert F(Fraction(1, 3)) * 3 == F(1)
    with pytest.raises(ValueError):
        GF(8)


def test_extend_with_t():
    W = weyl()
    Wt = extend_with_t(W)
    assert Wt.names == ("x", "d", "t")
    x, d, t = Wt.gens()
    assert d * x == x * d + 1
    assert t * x == x * t and t * d == d * t
    Kx = commutative(("x",))
    assert extend_with_t(Kx).is_commutative()
    assert extend_with_t(commutative(("t",))).names == ("t", "t_")


def test_tensor():
    Kx, Ky = commutative(("x",)), commutative(("y",))
    T = tensor(Kx, Ky)
    assert T.names == ("x", "y") and T.is_commutative()
    W2 = tensor(weyl(), weyl())
    assert W2.names == ("x_1", "d_1", "x_2", "d_2")
    x1, d1, x2, d2 = W2.gens()
    assert d1 * x1 == x1 * d1 + 1 and d2 * x2 == x2 * d2 + 1 and d1 * x2 == x2 * d1


def test_subalgebra():
    A = ALGEBRAS["comm3"]
    B = subalgebra(A, {0, 2})
    assert B.names == ("x", "z")
    with pytest.raises(ValueError):
        subalgebra(ALGEBRAS["qheis"], {0, 1})


def test_random_products_are_exact_over_rationals():
    rng = random.Random(3)
    A = ALGEBRAS["qheis"]
    for _ in range(20):
        a = tuple(rng.randint(0, 3) for _ in range(3))
        b = tuple(rng.randint(0, 3) for _ in range(3))
        for c in A.mul_mono(a, b).terms.values():
            assert isinstance(c, Fraction)
