import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import ALGEBRAS, exponents, vecs
from solvkit import POT, TOP, DegLex, DegRevLex, ElimBlock, Lex, Schreyer, Weighted, compare, compare_module
from solvkit.orderings import (
    ArityMismatch,
    ComponentOutOfRange,
    DirectSumElim,
    EmptyOrFullSubset,
    Graded,
    Product,
    PotElim,
    Restricted,
    TElim,
    TExtension,
    module_elim_order,
)

N = 3
ORDERS = {
    "lex": Lex.natural(N),
    "lex_perm": Lex((2, 0, 1)),
    "deglex": DegLex.natural(N),
    "deglex_w": DegLex((1, 2, 0), (1, 2, 3)),
    "degrevlex": DegRevLex.natural(N),
    "weighted": Weighted((2, 1, 1), Lex.natural(N)),
    "elim": ElimBlock(DegLex.natural(N), frozenset({1, 2})),
    "elim_lex": ElimBlock(Lex.natural(N), frozenset({0})),
    "text": TExtension(DegLex.natural(N - 1)),
    "product": Product(Lex.natural(1), DegRevLex.natural(2)),
    "restricted": Restricted(DegLex.natural(5), (0, 2, 4)),
}


@pytest.mark.parametrize("name", sorted(ORDERS))
@settings(max_examples=60, deadline=None)
@given(a=exponents(N), b=exponents(N), c=exponents(N), g=exponents(N))
def test_order_axioms(name, a, b, c, g):
    o = ORDERS[name]
    ab, ba = compare(o, a, b), compare(o, b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab < 0 and compare(o, b, c) < 0:
        assert compare(o, a, c) < 0
    if ab < 0:
        shift = lambda e: tuple(x + y for x, y in zip(e, g))  # noqa: E731
        assert compare(o, shift(a), shift(b)) < 0
    if any(a):
        assert compare(o, (0,) * N, a) < 0


def test_compare_examples():
    assert compare(Lex.natural(2), (0, 3), (1, 0)) == -1
    assert compare(DegLex.natural(2), (1, 1), (0, 3)) == -1
    assert compare(TExtension(Lex.natural(1)), (5, 0), (0, 1)) == -1
    with pytest.raises(ArityMismatch):
        compare(Lex.natural(2), (1, 2, 3), (0, 0))


def test_degrevlex_matches_sympy():
    syms = sympy.symbols("a b c")
    import itertools

    monos = [e for e in itertools.product(range(3), repeat=3)]
    for name, o in (("grevlex", DegRevLex.natural(3)), ("grlex", DegLex.natural(3)), ("lex", Lex.natural(3))):
        key = sympy.polys.orderings.monomial_key(name, syms)
        ours = sorted(monos, key=o.key)
        theirs = sorted(monos, key=lambda e: key(sympy.Mul(*[s ** k for s, k in zip(syms, e)])))
        assert ours == theirs, name


def test_elim_examples():
    o = ElimBlock(Lex.natural(2), frozenset({1}))
    assert compare(o, (0, 5), (1, 0)) == -1
    o = ElimBlock(Lex.natural(3), frozenset({1, 2}))
    assert compare(o, (0, 1, 4), (1, 0, 1)) == -1
    assert compare(o, (1, 0, 1), (1, 1, 0)) == -1
    for keep in (frozenset(), frozenset({0, 1, 2})):
        with pytest.raises(EmptyOrFullSubset):
            ElimBlock(Lex.natural(3), keep)


@settings(max_examples=100, deadline=None)
@given(a=exponents(N), b=exponents(N))
def test_elim_restricts_to_base(a, b):
    base = DegLex.natural(N)
    o = ElimBlock(base, frozenset({1, 2}))
    a, b = (0,) + a[1:], (0,) + b[1:]
    assert compare(o, a, b) == compare(base, a, b)


def _elim_property(key, inS, a, b):
    # b below some monomial a of S forces b into S
    if inS(a) and key(b) < key(a):
        assert inS(b)


@settings(max_examples=200, deadline=None)
@given(a=exponents(N), b=exponents(N))
def test_elimination_property_monomial_orders(a, b):
    for keep in ({1, 2}, {0}, {2}):
        o = ElimBlock(DegRevLex.natural(N), frozenset(keep))
        _elim_property(o.key, lambda e: all(x == 0 or i in keep for i, x in enumerate(e)), a, b)
    o = TExtension(DegLex.natural(N - 1))
    _elim_property(o.key, lambda e: e[-1] == 0, a, b)


MODULE_ORDERS = {
    "top": TOP(DegLex.natural(2)),
    "pot": POT(DegLex.natural(2)),
    "graded": Graded((1, 1), (0, 2, 1), TOP(DegLex.natural(2))),
    "schreyer": Schreyer(TOP(DegLex.natural(2)), (((1, 0), 0), ((0, 1), 0), ((1, 1), 1))),
    "potelim": PotElim(DegLex.natural(2), frozenset({1, 2})),
    "directsum": DirectSumElim(POT(Lex.natural(2)), TOP(DegLex.natural(2)), 1),
    "telim": TElim(POT(DegLex.natural(1))),
}


@pytest.mark.parametrize("name", sorted(MODULE_ORDERS))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_module_order_axioms(name, data):
    o = MODULE_ORDERS[name]
    comp = st.integers(0, 2)
    u = (data.draw(exponents(2)), data.draw(comp))
    v = (data.draw(exponents(2)), data.draw(comp))
    w = (data.draw(exponents(2)), data.draw(comp))
    g = data.draw(exponents(2))
    uv = compare_module(o, u, v)
    assert uv == -compare_module(o, v, u)
    assert (uv == 0) == (u == v)
    if uv < 0 and compare_module(o, v, w) < 0:
        assert compare_module(o, u, w) < 0
    if uv < 0:
        sh = lambda m: (tuple(x + y for x, y in zip(m[0], g)), m[1])  # noqa: E731
        assert compare_module(o, sh(u), sh(v)) < 0
    if any(u[0]):
        assert compare_module(o, ((0, 0), u[1]), u) < 0


@pytest.mark.parametrize("alg", ["weyl", "qheis", "sl2", "additive"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_module_order_compatible_with_multiplication(alg, data):
    A = ALGEBRAS[alg]
    for o in (TOP(A.order), POT(A.order), PotElim(A.order, frozenset({0}))):
        u = (data.draw(exponents(A.n, 2)), data.draw(st.integers(0, 1)))
        v = (data.draw(exponents(A.n, 2)), data.draw(st.integers(0, 1)))
        gam = data.draw(exponents(A.n, 2))
        if compare_module(o, u, v) >= 0:
            continue
        one = A.field.one
        lu = max(A.left_mul_terms({gam: one}, {u: one}), key=lambda m: o.key(*m))
        lv = max(A.left_mul_terms({gam: one}, {v: one}), key=lambda m: o.key(*m))
        assert compare_module(o, lu, lv) < 0


def test_module_examples():
    assert compare_module(POT(DegLex.natural(2)), ((5, 5), 0), ((0, 0), 1)) == -1
    assert compare_module(TOP(DegLex.natural(1)), ((2,), 1), ((3,), 0)) == -1
    S = Schreyer(TOP(DegLex.natural(2)), (((1, 0), 0), ((0, 1), 0)))
    assert compare_module(S, ((0, 1), 0), ((1, 0), 1)) == -1
    with pytest.raises(ComponentOutOfRange):
        compare_module(S, ((0, 0), 2), ((0, 0), 0))


def test_schreyer_from_elements():
    A = ALGEBRAS["comm2"]
    x, y = A.gens()
    S = Schreyer.from_elements(TOP(A.order), [x, y])
    assert S.leads == (((1, 0), 0), ((0, 1), 0))


def test_module_elim_examples():
    o = module_elim_order("pot", base=DegLex.natural(2), keep=[0])
    assert compare_module(o, ((9, 9), 0), ((0, 0), 1)) == -1
    o = module_elim_order("direct_sum", upper=TOP(DegLex.natural(2)), lower=TOP(DegLex.natural(2)), split=1)
    assert compare_module(o, ((9, 9), 1), ((0, 0), 0)) == -1
    o = module_elim_order("t_elim", inner=TOP(DegLex.natural(1)))
    assert compare_module(o, ((9, 0), 0), ((0, 1), 0)) == -1
    with pytest.raises(EmptyOrFullSubset):
        module_elim_order("pot", base=DegLex.natural(2), keep=[])


@settings(max_examples=200, deadline=None)
@given(a=exponents(2), b=exponents(2), c1=st.integers(0, 2), c2=st.integers(0, 2))
def test_elimination_property_module_orders(a, b, c1, c2):
    u, v = (a, c1), (b, c2)
    cases = [
        (PotElim(DegLex.natural(2), frozenset({1})), lambda m: m[1] == 1),
        (POT(DegLex.natural(2)), lambda m: m[1] in (0, 1)),
        (DirectSumElim(TOP(DegLex.natural(2)), TOP(DegLex.natural(2)), 2), lambda m: m[1] >= 2),
        (TElim(TOP(DegLex.natural(1))), lambda m: m[0][-1] == 0),
    ]
    for o, inS in cases:
        if inS(u) and o.key(*v) < o.key(*u):
            assert inS(v)


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_vec_lm_is_max(data):
    A = ALGEBRAS["comm2"]
    v = data.draw(vecs(A, 2))
    if v.is_zero():
        return
    o = POT(A.order)
    m = v.lm(o)
    assert all(compare_module(o, t, m) <= 0 for t in v.terms)
