"""Monomial orderings on PBW exponents and on free-module monomials.

Every ordering is an immutable descriptor exposing ``key``: a sort key such
that ``a < b`` in the ordering iff ``key(a) < key(b)``. Exponents are tuples
of nonnegative ints; module monomials are ``(exponent, component)`` pairs with
0-based components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ArityMismatch(ValueError):
    pass


class ComponentOutOfRange(ValueError):
    pass


class EmptyOrFullSubset(ValueError):
    pass


def _cached(method):
    def key(self, *args):
        cache = self._cache
        try:
            return cache[args]
        except KeyError:
            k = cache[args] = method(self, *args)
            return k

    key.__doc__ = method.__doc__
    return key


def _cache_field():
    return field(default_factory=dict, init=False, repr=False, compare=False, hash=False)


class MonomialOrder:
    """Base class of orderings on exponent tuples of length ``nvars``."""

    nvars: int

    def key(self, e):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        return compare(self, a, b)

    def max(self, exps):
        return max(exps, key=self.key)


def _check_perm(perm, n=None):
    perm = tuple(perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of generator indices: {perm}")
    if n is not None and len(perm) != n:
        raise ArityMismatch(f"expected {n} generators, got {len(perm)}")
    return perm


def _check_weights(weights, n):
    weights = tuple(int(w) for w in weights)
    if len(weights) != n:
        raise ArityMismatch(f"expected {n} weights, got {len(weights)}")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    return weights


@dataclass(frozen=True)
class Lex(MonomialOrder):
    """Lexicographic order; ``perm[0]`` is the most significant generator."""

    perm: tuple
    _cache: dict = _cache_field()

    def __post_init__(self):
        object.__setattr__(self, "perm", _check_perm(self.perm))

    @classmethod
    def natural(cls, n: int) -> Lex:
        return cls(tuple(range(n)))

    @property
    def nvars(self):
        return len(self.perm)

    @_cached
    def key(self, e):
        return tuple(e[i] for i in self.perm)


@dataclass(frozen=True)
class DegLex(MonomialOrder):
    """Weighted degree first, ties broken by ``Lex(perm)``."""

    perm: tuple
    weights: tuple = None
    _cache: dict = _cache_field()

    def __post_init__(self):
        perm = _check_perm(self.perm)
        object.__setattr__(self, "perm", perm)
        w = (1,) * len(perm) if self.weights is None else self.weights
        object.__setattr__(self, "weights", _check_weights(w, len(perm)))

    @classmethod
    def natural(cls, n: int) -> DegLex:
        return cls(tuple(range(n)))

    @property
    def nvars(self):
        return len(self.perm)

    @_cached
    def key(self, e):
        return (sum(w * x for w, x in zip(self.weights, e)),) + tuple(e[i] for i in self.perm)


@dataclass(frozen=True)
class DegRevLex(MonomialOrder):
    """Weighted degree first, ties broken reverse-lexicographically."""

    perm: tuple
    weights: tuple = None
    _cache: dict = _cache_field()

    def __post_init__(self):
        perm = _check_perm(self.perm)
        object.__setattr__(self, "perm", perm)
        w = (1,) * len(perm) if self.weights is None else self.weights
        object.__setattr__(self, "weights", _check_weights(w, len(perm)))

    @classmethod
    def natural(cls, n: int) -> DegRevLex:
        return cls(tuple(range(n)))

    @property
    def nvars(self):
        return len(self.perm)

    @_cached
    def key(self, e):
        d = sum(w * x for w, x in zip(self.weights, e))
        return (d,) + tuple(-e[i] for i in reversed(self.perm))


@dataclass(frozen=True)
class Weighted(MonomialOrder):
    """Compare by a positive weight vector, then by ``tie``."""

    weights: tuple
    tie: MonomialOrder
    _cache: dict = _cache_field()

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights, self.tie.nvars))

    @property
    def nvars(self):
        return self.tie.nvars

    @_cached
    def key(self, e):
        return (sum(w * x for w, x in zip(self.weights, e)), self.tie.key(e))


@dataclass(frozen=True)
class ElimBlock(MonomialOrder):
    """Block order eliminating every generator outside ``keep``.

    The part of an exponent outside ``keep`` (zero-padded) is compared first
    under ``base``; ties are broken by the ``keep`` part, again under ``base``.
    On exponents supported in ``keep`` this is exactly ``base``.
    """

    base: MonomialOrder
    keep: frozenset
    _cache: dict = _cache_field()

    def __post_init__(self):
        keep = frozenset(int(i) for i in self.keep)
        n = self.base.nvars
        if not keep or len(keep) >= n or not keep <= set(range(n)):
            raise EmptyOrFullSubset(f"keep set {sorted(keep)} must be a nonempty proper subset of 0..{n - 1}")
        object.__setattr__(self, "keep", keep)

    @property
    def nvars(self):
        return self.base.nvars

    @_cached
    def key(self, e):
        keep = self.keep
        outer = tuple(0 if i in keep else x for i, x in enumerate(e))
        inner = tuple(x if i in keep else 0 for i, x in enumerate(e))
        return (self.base.key(outer), self.base.key(inner))


@dataclass(frozen=True)
class TExtension(MonomialOrder):
    """Order on A[t]: the last slot is t and its exponent dominates."""

    inner: MonomialOrder
    _cache: dict = _cache_field()

    @property
    def nvars(self):
        return self.inner.nvars + 1

    @_cached
    def key(self, e):
        return (e[-1], self.inner.key(e[:-1]))


@dataclass(frozen=True)
class Product(MonomialOrder):
    """Order on a tensor product: first block dominates, second breaks ties."""

    first: MonomialOrder
    second: MonomialOrder
    _cache: dict = _cache_field()

    @property
    def nvars(self):
        return self.first.nvars + self.second.nvars

    @_cached
    def key(self, e):
        n = self.first.nvars
        return (self.first.key(e[:n]), self.second.key(e[n:]))


@dataclass(frozen=True)
class Restricted(MonomialOrder):
    """``base`` restricted to the monomials supported on ``slots``.

    Exponents of the restricted order have length ``len(slots)``; slot ``k``
    corresponds to generator ``slots[k]`` of the ambient algebra.
    """

    base: MonomialOrder
    slots: tuple
    _cache: dict = _cache_field()

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(sorted(self.slots)))

    @property
    def nvars(self):
        return len(self.slots)

    def embed(self, e):
        full = [0] * self.base.nvars
        for s, x in zip(self.slots, e):
            full[s] = x
        return tuple(full)

    @_cached
    def key(self, e):
        return self.base.key(self.embed(e))


def compare(order: MonomialOrder, a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    n = order.nvars
    if len(a) != n or len(b) != n:
        raise ArityMismatch(f"order on {n} generators applied to exponents of length {len(a)}, {len(b)}")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def elim_order(base: MonomialOrder, keep: Iterable[int]) -> ElimBlock:
    return ElimBlock(base, frozenset(keep))


def t_order(base: MonomialOrder) -> TExtension:
    return TExtension(base)


def product_order(first: MonomialOrder, second: MonomialOrder) -> Product:
    return Product(first, second)


def is_graded(order: MonomialOrder) -> bool:
    """True for degree orders with all generator weights equal to 1."""
    if isinstance(order, (DegLex, DegRevLex)):
        return all(w == 1 for w in order.weights)
    if isinstance(order, Weighted):
        return all(w == 1 for w in order.weights)
    return False


# ---------- module orders ----------


class ModuleOrder:
    """Base class of orderings on ``(exponent, component)`` pairs."""

    rank = None

    def key(self, e, c):
        raise NotImplementedError

    def compare(self, u, v) -> int:
        return compare_module(self, u, v)


@dataclass(frozen=True)
class TOP(ModuleOrder):
    """Term over position: exponent first, then component index."""

    base: MonomialOrder
    _cache: dict = _cache_field()

    @property
    def nvars(self):
        return self.base.nvars

    @_cached
    def key(self, e, c):
        return (self.base.key(e), c)


@dataclass(frozen=True)
class POT(ModuleOrder):
    """Position over term: component index first, then exponent."""

    base: MonomialOrder
    _cache: dict = _cache_field()

    @property
    def nvars(self):
        return self.base.nvars

    @_cached
    def key(self, e, c):
        return (c, self.base.key(e))


@dataclass(frozen=True)
class Graded(ModuleOrder):
    """Compare ``weights . e + shifts[c]`` first, then ``tie``."""

    weights: tuple
    shifts: tuple
    tie: ModuleOrder
    _cache: dict = _cache_field()

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights, self.tie.nvars))
        object.__setattr__(self, "shifts", tuple(int(b) for b in self.shifts))

    @property
    def nvars(self):
        return self.tie.nvars

    @property
    def rank(self):
        return len(self.shifts)

    @_cached
    def key(self, e, c):
        d = sum(w * x for w, x in zip(self.weights, e)) + self.shifts[c]
        return (d, self.tie.key(e, c))


@dataclass(frozen=True)
class Schreyer(ModuleOrder):
    """Order on a free module with basis eps_1..eps_m induced by g_1..g_m.

    ``a^al eps_i < a^be eps_j`` iff ``LM(a^al g_i) < LM(a^be g_j)`` under
    ``base``, or the two are equal and ``i < j``. Only the leading monomials of
    the reference elements are kept, so later changes to them are invisible.
    """

    base: ModuleOrder
    leads: tuple
    _cache: dict = _cache_field()

    def __post_init__(self):
        object.__setattr__(self, "leads", tuple((tuple(e), int(c)) for e, c in self.leads))

    @classmethod
    def from_elements(cls, base: ModuleOrder, elements) -> Schreyer:
        from .polys import as_vec

        leads = []
        for g in elements:
            g = as_vec(g)
            if g.is_zero():
                raise ValueError("Schreyer ordering needs nonzero reference elements")
            leads.append(g.lm(base))
        return cls(base, tuple(leads))

    @property
    def nvars(self):
        return self.base.nvars

    @property
    def rank(self):
        return len(self.leads)

    @_cached
    def key(self, e, c):
        be, bc = self.leads[c]
        return (self.base.key(tuple(x + y for x, y in zip(e, be)), bc), c)


@dataclass(frozen=True)
class PotElim(ModuleOrder):
    """POT with the ``keep`` components placed below all the others."""

    base: MonomialOrder
    keep: frozenset
    _cache: dict = _cache_field()

    def __post_init__(self):
        keep = frozenset(int(c) for c in self.keep)
        if not keep:
            raise EmptyOrFullSubset("POT elimination needs a nonempty set of kept components")
        object.__setattr__(self, "keep", keep)

    @property
    def nvars(self):
        return self.base.nvars

    @_cached
    def key(self, e, c):
        return (c not in self.keep, c, self.base.key(e))


@dataclass(frozen=True)
class DirectSumElim(ModuleOrder):
    """Order on L1 + L2 with every L2 monomial below every L1 monomial.

    Components ``0..split-1`` form L1 (ordered by ``upper``), components from
    ``split`` on form L2 (ordered by ``lower`` with components renumbered from 0).
    """

    upper: ModuleOrder
    lower: ModuleOrder
    split: int
    _cache: dict = _cache_field()

    def __post_init__(self):
        if self.split < 1:
            raise EmptyOrFullSubset("direct-sum elimination needs a nonempty upper block")

    @property
    def nvars(self):
        return self.upper.nvars

    @_cached
    def key(self, e, c):
        if c < self.split:
            return (1, self.upper.key(e, c))
        return (0, self.lower.key(e, c - self.split))


@dataclass(frozen=True)
class TElim(ModuleOrder):
    """Order on free A[t]-modules: t-degree first, then ``inner`` on the rest."""

    inner: ModuleOrder
    _cache: dict = _cache_field()

    @property
    def nvars(self):
        return self.inner.nvars + 1

    @_cached
    def key(self, e, c):
        return (e[-1], self.inner.key(e[:-1], c))


def as_module_order(order) -> ModuleOrder:
    if isinstance(order, ModuleOrder):
        return order
    if isinstance(order, MonomialOrder):
        return TOP(order)
    raise TypeError(f"not an ordering: {order!r}")


def compare_module(order: ModuleOrder, u, v) -> int:
    """Compare module monomials ``u = (exp, comp)`` and ``v``; returns -1/0/1."""
    order = as_module_order(order)
    for _, c in (u, v):
        if c < 0 or (order.rank is not None and c >= order.rank):
            raise ComponentOutOfRange(f"component {c} outside rank {order.rank}")
    n = order.nvars
    if len(u[0]) != n or len(v[0]) != n:
        raise ArityMismatch(f"order on {n} generators applied to exponents of length {len(u[0])}, {len(v[0])}")
    ku, kv = order.key(tuple(u[0]), u[1]), order.key(tuple(v[0]), v[1])
    return (ku > kv) - (ku < kv)


def module_elim_order(kind: str, *, base: MonomialOrder | None = None, keep: Sequence[int] = (),
                      upper: ModuleOrder | None = None, lower: ModuleOrder | None = None,
                      split: int | None = None, inner: ModuleOrder | None = None) -> ModuleOrder:
    """Build one of the three module elimination orderings.

    ``"pot"``: POT over ``base`` with the ``keep`` components lowest.
    ``"direct_sum"``: ``upper`` block above ``lower`` block, split at ``split``.
    ``"t_elim"``: t-degree dominates, then ``inner``.
    """
    if kind == "pot":
        return PotElim(base, frozenset(keep))
    if kind == "direct_sum":
        return DirectSumElim(upper, lower, split)
    if kind == "t_elim":
        return TElim(inner)
    raise ValueError(f"unknown module elimination kind {kind!r}")
