"""Shared test algebras, oracles and hypothesis strategies."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import sympy
from hypothesis import strategies as st

from solvkit import GF, QQ, AlgebraDef, DegLex, DegRevLex, Lex, Poly, Vec, validate_algebra

# ---------- test algebras ----------


def commutative(names=("x", "y"), order=None, field=QQ):
    return validate_algebra(AlgebraDef.commutative(names, field, order))


def weyl(field=QQ):
    """A_1: d*x = x*d + 1."""
    return validate_algebra(AlgebraDef(("x", "d"), field, {(1, 0): (1, {(0, 0): 1})}, DegLex.natural(2)))


def weyl2():
    """A_2 with generators x1, x2, d1, d2."""
    rels = {}
    for j in range(4):
        for i in range(j):
            rels[(j, i)] = (1, {})
    rels[(2, 0)] = (1, {(0, 0, 0, 0): 1})
    rels[(3, 1)] = (1, {(0, 0, 0, 0): 1})
    return validate_algebra(AlgebraDef(("x1", "x2", "d1", "d2"), QQ, rels, DegRevLex.natural(4)))


def q_heisenberg(q=2):
    """h_1(q): x z = q z x, z y = q y z, x y = q^-1 y x + z, PBW order x < y < z."""
    q = Fraction(q)
    rels = {
        (2, 0): (1 / q, {}),
        (2, 1): (q, {}),
        (1, 0): (q, {(0, 0, 1): -q}),
    }
    return validate_algebra(AlgebraDef(("x", "y", "z"), QQ, rels, DegLex.natural(3)))


def additive_weyl(q=2):
    """A_1(q): y x = q x y + 1."""
    return validate_algebra(AlgebraDef(("x", "y"), QQ, {(1, 0): (q, {(0, 0): 1})}, DegLex.natural(2)))


def a123(lam=1, mu=1):
    """K[a1,a2,a3]: a3 a1 = lam a1 a3 + mu a2^2 a3 + a2, other pairs commute; lex a1 > a2 > a3."""
    rels = {
        (1, 0): (1, {}),
        (2, 0): (lam, {(0, 2, 1): mu, (0, 1, 0): 1}),
        (2, 1): (1, {}),
    }
    return validate_algebra(AlgebraDef(("a1", "a2", "a3"), QQ, rels, Lex.natural(3)))


def qplane(q=3):
    """Quantum plane y x = q x y."""
    return validate_algebra(AlgebraDef(("x", "y"), QQ, {(1, 0): (q, {})}, DegLex.natural(2)))


def lie_sl2():
    """U(sl2) with e, f, h ordered e < f < h: f e = e f - h, h e = e h + 2e, h f = f h - 2f."""
    rels = {
        (1, 0): (1, {(0, 0, 1): -1}),
        (2, 0): (1, {(1, 0, 0): 2}),
        (2, 1): (1, {(0, 1, 0): -2}),
    }
    return validate_algebra(AlgebraDef(("e", "f", "h"), QQ, rels, DegLex.natural(3)))


def all_algebras():
    return {
        "comm2": commutative(),
        "comm3": commutative(("x", "y", "z")),
        "comm2_gf7": commutative(field=GF(7)),
        "weyl": weyl(),
        "weyl_gf5": weyl(GF(5)),
        "weyl2": weyl2(),
        "qheis": q_heisenberg(),
        "additive": additive_weyl(),
        "a123": a123(),
        "qplane": qplane(),
        "sl2": lie_sl2(),
    }


ALGEBRAS = all_algebras()
SMALL = {k: ALGEBRAS[k] for k in ("comm2", "weyl", "qheis", "additive", "qplane", "sl2", "comm2_gf7")}

# ---------- random elements ----------


def exps(n, maxdeg):
    return [e for e in product(range(maxdeg + 1), repeat=n) if sum(e) <= maxdeg]


def random_poly(A, rng: random.Random, terms=3, maxdeg=2, coeffs=(-3, 3)) -> Poly:
    pool = exps(A.n, maxdeg)
    d = {}
    for _ in range(terms):
        c = rng.randint(*coeffs)
        if c:
            d[rng.choice(pool)] = c
    return A.poly(d)


@st.composite
def polys(draw, A, maxdeg=2, max_terms=3, nonzero=False):
    pool = exps(A.n, maxdeg)
    items = draw(st.lists(st.tuples(st.sampled_from(pool), st.integers(-3, 3)), min_size=1 if nonzero else 0,
                          max_size=max_terms))
    p = A.poly(dict(items))
    if nonzero and p.is_zero():
        p = A.monomial(items[0][0], 1)
    return p


@st.composite
def vecs(draw, A, rank, maxdeg=1, max_terms=2):
    return Vec.from_polys(A, [draw(polys(A, maxdeg, max_terms)) for _ in range(rank)])


def exponents(n, maxdeg=4):
    return st.tuples(*[st.integers(0, maxdeg) for _ in range(n)])


# ---------- sympy bridges ----------


def to_sympy(p: Poly, syms):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        c = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(int(c))
        term = c
        for s, k in zip(syms, e):
            term *= s ** k
        expr += term
    return sympy.expand(expr)


def from_sympy(A, expr, syms) -> Poly:
    P = sympy.Poly(expr, *syms)
    return A.poly({m: Fraction(int(c.p), int(c.q)) for m, c in P.terms()})


def sympy_order(order):
    if isinstance(order, Lex) and order.perm == tuple(range(order.nvars)):
        return "lex"
    if isinstance(order, DegLex) and order.perm == tuple(range(order.nvars)):
        return "grlex"
    if isinstance(order, DegRevLex) and order.perm == tuple(range(order.nvars)):
        return "grevlex"
    raise ValueError(order)


# ---------- brute-force linear algebra ----------


def _matrix_rank(rows):
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def span_rows(elements, monos):
    """Coefficient rows of ``elements`` over the column list ``monos``."""
    idx = {m: k for k, m in enumerate(monos)}
    rows = []
    for el in elements:
        row = [0] * len(monos)
        for m, c in el.items():
            row[idx[m]] = sympy.Rational(c.numerator, c.denominator)
        rows.append(row)
    return rows


def truncated_span(A, gens, D, rank=None):
    """Terms dicts spanning N_{<=D}: a^gamma * g restricted to products of total degree <= D.

    Only products whose every term has degree <= D are kept, which is the
    degree-filtered part for graded orders with degree-nonincreasing relations.
    """
    out = []
    for g in gens:
        t = g.terms
        for gam in exps(A.n, D):
            if rank is None:
                prod = A.mul_terms({gam: A.field.one}, t)
                if prod and max(sum(e) for e in prod) <= D:
                    out.append(prod)
            else:
                prod = A.left_mul_terms({gam: A.field.one}, t)
                if prod and max(sum(e) for e, _ in prod) <= D:
                    out.append(prod)
    return out


def in_span(vectors, target) -> bool:
    """Is the terms dict ``target`` in the linear span of ``vectors``?"""
    monos = sorted({m for v in vectors for m in v} | set(target))
    rows = span_rows(vectors, monos)
    r0 = _matrix_rank(rows)
    r1 = _matrix_rank(rows + span_rows([target], monos))
    return r0 == r1


def intersect_with_coordinates(vectors, allowed) -> list:
    """Basis (as terms dicts) of span(vectors) ∩ span(allowed monomials)."""
    monos = sorted({m for v in vectors for m in v})
    bad = [m for m in monos if not allowed(m)]
    good = [m for m in monos if allowed(m)]
    if not vectors:
        return []
    M = sympy.Matrix(span_rows(vectors, bad + good))
    nb = len(bad)
    out = []
    # combinations c with c^T M[:, bad] = 0
    if nb:
        null = M[:, :nb].T.nullspace()
    else:
        null = [sympy.eye(len(vectors))[:, k] for k in range(len(vectors))]
    for c in null:
        row = (c.T * M)[0, nb:]
        d = {}
        for m, x in zip(good, row):
            if x != 0:
                d[m] = Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1]))
        if d:
            out.append(d)
    return out
