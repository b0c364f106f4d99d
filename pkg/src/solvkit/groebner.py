"""Left division, S-vectors and Buchberger's algorithm for left submodules.

Everything works on free-module elements; a left ideal is the rank-one case
and its generators may be passed as plain :class:`Poly` objects. Plain
monomial orders are used as TOP orders on rank one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .orderings import ModuleOrder, as_module_order
from .polys import Poly, Vec, add_into, scaled


class RankMismatch(ValueError):
    pass


def _terms(x) -> dict:
    if isinstance(x, Vec):
        return x.terms
    if isinstance(x, Poly):
        return {(e, 0): c for e, c in x.terms.items()}
    raise TypeError(f"expected Poly or Vec, got {type(x).__name__}")


def _rank(x):
    return x.rank if isinstance(x, Vec) else None


def _wrap(A, rank, terms):
    if rank is None:
        return Poly(A, {e: c for (e, _), c in terms.items()})
    return Vec(A, rank, terms)


def _divides(b, a):
    return all(x >= y for x, y in zip(a, b))


class _Reducer:
    """A list of reducers with cached products a^gamma * g."""

    def __init__(self, A, key):
        self.A = A
        self.key = key
        self.elems = []
        self.leads = []
        self._prod = {}

    def lm(self, terms):
        key = self.key
        return max(terms, key=lambda m: key(m[0], m[1]))

    def add(self, terms):
        self.elems.append(terms)
        self.leads.append(self.lm(terms))
        return len(self.elems) - 1

    def times(self, k, gamma) -> dict:
        """a^gamma * g_k (cached)."""
        p = self._prod.get((k, gamma))
        if p is None:
            if any(gamma):
                p = self.A.left_mul_terms({gamma: self.A.field.one}, self.elems[k])
            else:
                p = self.elems[k]
            self._prod[(k, gamma)] = p
        return p

    def find(self, m, skip=None):
        e, c = m
        for k, (be, bc) in enumerate(self.leads):
            if k != skip and bc == c and _divides(be, e):
                return k
        return None

    def reduce(self, terms, *, full=True, quotients=None, skip=None, trace=None):
        """Divide ``terms`` by the reducers.

        Returns the remainder; with ``quotients`` (a list of dicts, one per
        reducer) the cofactors are accumulated there.
        """
        key = self.key
        p = dict(terms)
        r = {}
        while p:
            m = max(p, key=lambda t: key(t[0], t[1]))
            k = self.find(m, skip)
            if k is None:
                if not full:
                    add_into(r, p)
                    break
                r[m] = p.pop(m)
                continue
            be = self.leads[k][0]
            gamma = tuple(x - y for x, y in zip(m[0], be))
            h = self.times(k, gamma)
            coef = p[m] / h[m]
            if trace is not None:
                trace(m, k, gamma, coef)
            add_into(p, h, -coef)
            if quotients is not None:
                add_into(quotients[k], {gamma: coef})
        return r


def _setup(elements, order, A=None):
    elements = list(elements)
    rank = None
    for x in elements:
        if A is None:
            A = x.ring
        elif x.ring is not A:
            raise TypeError("elements over different algebras")
    ranks = {_rank(x) for x in elements}
    if len(ranks) > 1:
        raise RankMismatch(f"mixed ranks {sorted(ranks, key=str)}")
    if ranks:
        rank = ranks.pop()
    if order is None:
        if A is None:
            raise ValueError("need an ordering or at least one element")
        order = A.order
    return A, rank, as_module_order(order)


def normal_form(xi, G, order=None, *, trace=None):
    """Divide ``xi`` by the list ``G``; return ``(remainder, quotients)``.

    ``quotients`` is a list of ``(Poly, index)`` pairs with nonzero cofactors,
    so that ``xi == sum(q * G[k]) + remainder``. The divisor is always the
    lowest-index element whose leading monomial left-divides.
    """
    if isinstance(G, GroebnerBasis):
        order = order or G.order
        G = list(G.elements)
    A, rank, morder = _setup([xi] + list(G), order)
    red = _Reducer(A, morder.key)
    for g in G:
        red.add(_terms(g))
    quots = [{} for _ in G]
    def tr(m, k, gamma, coef):
        trace(_format_step(A, rank, m, k, gamma, coef))

    r = red.reduce(_terms(xi), quotients=quots, trace=tr if trace is not None else None)
    pairs = [(Poly(A, q), k) for k, q in enumerate(quots) if q]
    return _wrap(A, rank, r), pairs


def _format_step(A, rank, m, k, gamma, coef):
    e, c = m
    mono = A.format_monomial(e) + (f"*e{c + 1}" if rank is not None else "")
    return f"reduce {mono} by g{k + 1}: subtract ({coef})*{A.format_monomial(gamma)}*g{k + 1}"


def _spair(A, f, g, key):
    red = _Reducer(A, key)
    (a, c1), (b, c2) = red.lm(f), red.lm(g)
    if c1 != c2:
        return None
    gam = tuple(max(x, y) for x, y in zip(a, b))
    one = A.field.one
    uf = A.left_mul_terms({tuple(x - y for x, y in zip(gam, a)): one}, f)
    ug = A.left_mul_terms({tuple(x - y for x, y in zip(gam, b)): one}, g)
    m = (gam, c1)
    out = scaled(uf, 1 / uf[m])
    add_into(out, ug, -1 / ug[m])
    return out


def spair(f, g, order=None):
    """Left S-vector of ``f`` and ``g``; ``None`` when the leading components differ."""
    A, rank, morder = _setup([f, g], order)
    if f.is_zero() or g.is_zero():
        raise ValueError("S-vectors need nonzero arguments")
    s = _spair(A, _terms(f), _terms(g), morder.key)
    return None if s is None else _wrap(A, rank, s)


@dataclass(frozen=True)
class GroebnerBasis:
    """A left Groebner basis together with the ordering it is valid for."""

    elements: tuple
    order: object
    algebra: object
    rank: int | None = None
    reduced: bool = False
    provenance: str = "buchberger"

    @property
    def module_order(self) -> ModuleOrder:
        return as_module_order(self.order)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def leading_monomials(self) -> list:
        key = self.module_order.key
        return [max(_terms(g), key=lambda m: key(*m)) for g in self.elements]

    def reduce(self, xi):
        return normal_form(xi, self)[0]

    def __contains__(self, xi):
        return self.reduce(xi).is_zero()

    def __str__(self):
        return "[ " + ", ".join(str(g) for g in self.elements) + " ]" if self.elements else "[ ]"


def _reduced_terms(A, elems, key):
    """Minimal, inter-reduced, monic versions of ``elems``, sorted by LM descending."""
    red = _Reducer(A, key)
    items = sorted((t for t in elems if t), key=lambda t: key(*red.lm(t)))
    kept = []
    kept_lms = []
    for t in items:
        e, c = red.lm(t)
        if any(bc == c and _divides(be, e) for be, bc in kept_lms):
            continue
        kept.append(t)
        kept_lms.append((e, c))
    for t in kept:
        red.add(t)
    out = []
    for k, t in enumerate(kept):
        r = red.reduce(t, skip=k)
        out.append(scaled(r, 1 / r[kept_lms[k]]))
    out.sort(key=lambda t: key(*red.lm(t)), reverse=True)
    return out


def buchberger(gens, order=None, *, reduced=True, algebra=None, rank=None, provenance="buchberger"):
    """Left Groebner basis of the submodule generated by ``gens``.

    Pairs are processed smallest lcm first; pairs whose leading monomials sit
    in different components are skipped. With ``reduced`` the result is the
    reduced basis (monic, inter-reduced, sorted by leading monomial).
    """
    gens = list(gens)
    A, r, morder = _setup(gens, order, algebra)
    if rank is None:
        rank = r
    key = morder.key
    red = _Reducer(A, key)
    heap = []

    def push(i, j):
        (a, c1), (b, c2) = red.leads[i], red.leads[j]
        if c1 != c2:
            return
        gam = tuple(max(x, y) for x, y in zip(a, b))
        heapq.heappush(heap, (key(gam, c1), i, j))

    for g in gens:
        t = _terms(g)
        if t:
            k = red.add(dict(t))
            for i in range(k):
                push(i, k)
    while heap:
        _, i, j = heapq.heappop(heap)
        s = _spair(A, red.elems[i], red.elems[j], key)
        rem = red.reduce(s)
        if rem:
            k = red.add(rem)
            for i2 in range(k):
                push(i2, k)
    elems = red.elems
    if reduced:
        elems = _reduced_terms(A, elems, key)
    return GroebnerBasis(tuple(_wrap(A, rank, t) for t in elems), order if order is not None else A.order,
                         A, rank, reduced, provenance)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The reduced Groebner basis of the same submodule."""
    A = G.algebra
    key = G.module_order.key
    elems = _reduced_terms(A, [_terms(g) for g in G.elements], key)
    return GroebnerBasis(tuple(_wrap(A, G.rank, t) for t in elems), G.order, A, G.rank, True, G.provenance)


def is_groebner(G, order=None) -> bool:
    """Check that every S-vector of ``G`` reduces to zero modulo ``G``."""
    if isinstance(G, GroebnerBasis):
        order = order or G.order
        G = list(G.elements)
    if not G:
        return True
    A, _, morder = _setup(G, order)
    red = _Reducer(A, morder.key)
    terms = [_terms(g) for g in G]
    for t in terms:
        if not t:
            return False
        red.add(t)
    for j in range(len(terms)):
        for i in range(j):
            s = _spair(A, terms[i], terms[j], morder.key)
            if s is not None and red.reduce(s):
                return False
    return True


@dataclass(frozen=True)
class Membership:
    """Result of a membership test; truthy iff the element is a member.

    ``representation`` lists ``(Poly, index)`` cofactors of the basis elements.
    """

    is_member: bool
    representation: list = field(default_factory=list)

    def __bool__(self):
        return self.is_member


def member(xi, G: GroebnerBasis) -> Membership:
    if xi.is_zero():
        return Membership(True, [])
    r, q = normal_form(xi, G)
    if r.is_zero():
        return Membership(True, q)
    return Membership(False, [])
