"""Elimination: contractions to sub-bases, intersections and dimension search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import Algebra, extend_with_t, subalgebra
from .groebner import GroebnerBasis, RankMismatch, buchberger
from .orderings import (
    POT,
    TOP,
    DirectSumElim,
    ElimBlock,
    EmptyOrFullSubset,
    ModuleOrder,
    PotElim,
    TElim,
    TExtension,
    as_module_order,
)
from .polys import Poly, Vec


class OrderingNotEliminatingForS(ValueError):
    pass


class ZeroIdeal(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSubset:
    """Monomials supported on the generators in ``keep``."""

    keep: frozenset

    def contains(self, e, c=0) -> bool:
        return all(x == 0 or i in self.keep for i, x in enumerate(e))


@dataclass(frozen=True)
class ComponentSubset:
    """Module monomials sitting on the components in ``keep``."""

    keep: frozenset

    def contains(self, e, c=0) -> bool:
        return c in self.keep


@dataclass(frozen=True)
class TSlice:
    """Monomials of t-degree zero (t is the last generator)."""

    def contains(self, e, c=0) -> bool:
        return e[-1] == 0


def in_span(x, S) -> bool:
    """True iff every monomial of ``x`` lies in ``S``."""
    if isinstance(x, Poly):
        return all(S.contains(e, 0) for e in x.terms)
    return all(S.contains(e, c) for e, c in x.terms)


def _eliminates(order, S, rank) -> bool:
    if isinstance(S, GeneratorSubset):
        if isinstance(order, TOP):
            order = order.base
        return isinstance(order, ElimBlock) and order.keep == S.keep
    if isinstance(S, TSlice):
        if isinstance(order, TOP):
            order = order.base
        return isinstance(order, (TExtension, TElim))
    if isinstance(S, ComponentSubset):
        if isinstance(order, PotElim):
            return order.keep == S.keep
        if isinstance(order, POT):
            return S.keep == frozenset(range(len(S.keep)))
        if isinstance(order, DirectSumElim):
            return rank is not None and S.keep == frozenset(range(order.split, rank))
        return rank == 1 and S.keep == frozenset({0})
    raise TypeError(f"unknown sub-basis descriptor {S!r}")


def truncate_to_VS(G: GroebnerBasis, S) -> list:
    """Elements of ``G`` lying entirely in the span of ``S``.

    ``G`` must have been computed under an ordering that eliminates for ``S``;
    this is checked structurally.
    """
    if not _eliminates(G.order, S, G.rank):
        raise OrderingNotEliminatingForS(f"{G.order!r} is not an elimination ordering for {S!r}")
    return [g for g in G.elements if in_span(g, S)]


@dataclass(frozen=True)
class ClosureFailure:
    """The relation a_j a_i leaves the span of monomials in the kept generators."""

    j: int
    i: int
    monomial: tuple
    text: str = ""

    def __str__(self):
        return self.text or f"ClosureFailure({self.j}, {self.i}, {self.monomial})"


def _indices(A: Algebra, U) -> frozenset:
    return frozenset(A.names.index(u) if isinstance(u, str) else int(u) for u in U)


def _check_proper(A, U):
    if not U or len(U) >= A.n:
        raise EmptyOrFullSubset(f"subset {sorted(U)} must be nonempty and proper")


def subalgebra_closure_check(A: Algebra, U) -> ClosureFailure | None:
    """None if the monomials in ``U`` span the subalgebra they generate."""
    U = _indices(A, U)
    _check_proper(A, U)
    S = GeneratorSubset(U)
    for (j, i) in sorted(A.relations):
        if j in U and i in U:
            f = A.f(j, i)
            for e, _ in f.sorted_terms():
                if not S.contains(e):
                    text = (f"ClosureFailure({A.names[j]}, {A.names[i]}, {A.format_monomial(e)}): "
                            f"{A.names[j]}*{A.names[i]} leaves the span of monomials in "
                            f"{{{', '.join(A.names[k] for k in sorted(U))}}}")
                    return ClosureFailure(j, i, e, text)
    return None


def _algebra_of(gens, algebra):
    for g in gens:
        return g.ring
    if algebra is None:
        raise ValueError("pass algebra= when the generator list is empty")
    return algebra


def eliminate_ideal(gens, U, *, algebra=None):
    """Groebner basis of N ∩ K[U] over the subalgebra K[U].

    Returns a :class:`ClosureFailure` instead when the monomials in ``U`` are
    not a basis of K[U].
    """
    gens = list(gens)
    A = _algebra_of(gens, algebra)
    U = _indices(A, U)
    fail = subalgebra_closure_check(A, U)
    if fail is not None:
        return fail
    G = buchberger(gens, ElimBlock(A.order, U), algebra=A)
    kept = truncate_to_VS(G, GeneratorSubset(U))
    B = subalgebra(A, U)
    slots = sorted(U)
    elems = tuple(Poly(B, {tuple(e[s] for s in slots): c for e, c in g.terms.items()}) for g in kept)
    return GroebnerBasis(elems, B.order, B, None, True, "eliminate_ideal")


def eliminate_module(gens, U, *, algebra=None, rank=None) -> GroebnerBasis:
    """Groebner basis of N ∩ L_U, expressed in the free module on ``U``.

    Components of the result are renumbered 0..|U|-1 in increasing order.
    """
    gens = list(gens)
    A = _algebra_of(gens, algebra)
    if rank is None:
        rank = gens[0].rank if gens else None
    U = frozenset(int(c) for c in U)
    if not U or (rank is not None and not U <= set(range(rank))):
        raise EmptyOrFullSubset(f"component subset {sorted(U)} invalid for rank {rank}")
    G = buchberger(gens, PotElim(A.order, U), algebra=A, rank=rank)
    kept = truncate_to_VS(G, ComponentSubset(U))
    pos = {c: k for k, c in enumerate(sorted(U))}
    elems = tuple(Vec(A, len(U), {(e, pos[c]): v for (e, c), v in g.terms.items()}) for g in kept)
    return GroebnerBasis(elems, POT(A.order), A, len(U), True, "eliminate_module")


def intersect_ideals(N1, N2, *, algebra=None) -> GroebnerBasis:
    """Reduced Groebner basis of N1 ∩ N2 via the central extension A[t]."""
    N1, N2 = list(N1), list(N2)
    A = _algebra_of(N1 + N2, algebra)
    At = extend_with_t(A)
    t = At.gen(A.n)
    one = At.one()

    def lift(p):
        return Poly(At, {e + (0,): c for e, c in p.terms.items()})

    gens = [t * lift(u) for u in N1] + [(one - t) * lift(v) for v in N2]
    G = buchberger(gens, At.order, algebra=At)
    kept = truncate_to_VS(G, TSlice())
    elems = tuple(Poly(A, {e[:-1]: c for e, c in g.terms.items()}) for g in kept)
    return GroebnerBasis(elems, A.order, A, None, True, "intersect_ideals")


def intersect_submodules(N1, N2, *, order: ModuleOrder | None = None, algebra=None, rank=None) -> GroebnerBasis:
    """Reduced Groebner basis of N1 ∩ N2 in a free module, via L[t]."""
    N1, N2 = list(N1), list(N2)
    A = _algebra_of(N1 + N2, algebra)
    ranks = {v.rank for v in N1 + N2}
    if rank is not None:
        ranks.add(rank)
    if len(ranks) != 1:
        raise RankMismatch(f"submodules of different ranks: {sorted(ranks)}")
    rank = ranks.pop()
    order = as_module_order(order or A.order)
    At = extend_with_t(A)
    t = At.gen(A.n)
    one = At.one()

    def lift(v):
        return Vec(At, rank, {(e + (0,), c): x for (e, c), x in v.terms.items()})

    gens = [t * lift(u) for u in N1] + [(one - t) * lift(v) for v in N2]
    G = buchberger(gens, TElim(order), algebra=At, rank=rank)
    kept = truncate_to_VS(G, TSlice())
    elems = tuple(Vec(A, rank, {(e[:-1], c): x for (e, c), x in g.terms.items()}) for g in kept)
    return GroebnerBasis(elems, order, A, rank, True, "intersect_submodules")


def weakly_independent(gens, U, *, algebra=None) -> bool:
    """True iff N ∩ span(monomials in U) = 0."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return True
    A = _algebra_of(gens, algebra)
    U = _indices(A, U)
    if len(U) >= A.n:
        return False
    if not U:
        G = buchberger(gens, A.order)
        return not any(not any(g.lm()) for g in G)
    G = buchberger(gens, ElimBlock(A.order, U))
    return not truncate_to_VS(G, GeneratorSubset(U))


@dataclass(frozen=True)
class DimensionResult:
    """Largest size of a weakly independent generator subset, with a witness.

    ``exact`` is set when the algebra is quadric with a unit-weight graded
    ordering, in which case ``d`` is the GK dimension of A/N.
    """

    d: int
    witness: tuple
    names: tuple
    exact: bool

    def __str__(self):
        kind = "GK.dim" if self.exact else "weak-independence number"
        return f"{self.d} witness {{{', '.join(self.names)}}} ({kind})"


def gk_dim_search(gens, *, algebra=None) -> DimensionResult:
    """Search subsets by decreasing size, lexicographically within a size."""
    gens = list(gens)
    A = _algebra_of(gens, algebra)
    if all(g.is_zero() for g in gens):
        raise ZeroIdeal("dimension search needs a nonzero left ideal")
    exact = A.is_quadric()
    for size in range(A.n - 1, 0, -1):
        for U in combinations(range(A.n), size):
            if weakly_independent(gens, U, algebra=A):
                return DimensionResult(size, U, tuple(A.names[i] for i in U), exact)
    return DimensionResult(0, (), (), exact)
