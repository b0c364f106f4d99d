"""Sparse elements of a solvable algebra (``Poly``) and of free modules (``Vec``).

Terms live in a dict keyed by exponent (or ``(exponent, component)``); the
ordering is supplied when a leading term or a sorted view is requested.
"""

from __future__ import annotations


def add_into(acc: dict, terms: dict, scale=None):
    """acc += scale * terms, dropping cancelled entries."""
    for m, c in terms.items():
        if scale is not None:
            c = c * scale
        v = acc.get(m)
        if v is None:
            if c:
                acc[m] = c
        else:
            v = v + c
            if v:
                acc[m] = v
            else:
                del acc[m]
    return acc


def scaled(terms: dict, c) -> dict:
    if not c:
        return {}
    return {m: v * c for m, v in terms.items()}


class Poly:
    """An element of a validated algebra in the PBW basis."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: dict | None = None):
        self.ring = ring
        self.terms = terms if terms is not None else {}

    @classmethod
    def from_dict(cls, ring, d: dict) -> Poly:
        F = ring.field
        out = {}
        for e, c in d.items():
            e = tuple(e)
            if len(e) != ring.n:
                raise ValueError(f"exponent {e} has wrong length for {ring.n} generators")
            add_into(out, {e: F(c)})
        return cls(ring, out)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise TypeError("polynomials from different algebras")
            return other
        try:
            c = self.ring.field(other)
        except (TypeError, ValueError):
            return None
        return Poly(self.ring, {(0,) * self.ring.n: c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly(self.ring, add_into(dict(self.terms), o.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly(self.ring, add_into(dict(self.terms), o.terms, -self.ring.field.one))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Vec):
            return other.__rmul__(self)
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise TypeError("polynomials from different algebras")
            return Poly(self.ring, self.ring.mul_terms(self.terms, other.terms))
        try:
            c = self.ring.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Poly(self.ring, scaled(self.terms, c))

    def __rmul__(self, other):
        # scalars commute with everything
        try:
            c = self.ring.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Poly(self.ring, scaled(self.terms, c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        r = self.ring.one()
        for _ in range(k):
            r = r * self
        return r

    def sorted_terms(self, order=None) -> list:
        """Terms as ``(exponent, coeff)`` pairs, strictly descending."""
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lm(self, order=None):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=(order or self.ring.order).key)

    def lc(self, order=None):
        return self.terms[self.lm(order)]

    def lt(self, order=None):
        m = self.lm(order)
        return m, self.terms[m]

    def monic(self, order=None) -> Poly:
        if not self.terms:
            return self
        return Poly(self.ring, scaled(self.terms, 1 / self.lc(order)))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def support(self) -> set:
        """Indices of generators occurring in some monomial."""
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def __str__(self):
        return self.ring.format_terms(self.sorted_terms())

    def __repr__(self):
        return f"Poly({self})"


class Vec:
    """An element of the free module of given rank over ``ring``."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank: int, terms: dict | None = None):
        self.ring = ring
        self.rank = rank
        self.terms = terms if terms is not None else {}

    @classmethod
    def from_polys(cls, ring, polys) -> Vec:
        terms = {}
        polys = list(polys)
        for c, p in enumerate(polys):
            if not isinstance(p, Poly):
                p = Poly.from_dict(ring, {(0,) * ring.n: p}) if p else Poly(ring)
            for e, v in p.terms.items():
                terms[(e, c)] = v
        return cls(ring, len(polys), terms)

    @classmethod
    def unit(cls, ring, rank: int, i: int) -> Vec:
        return cls(ring, rank, {((0,) * ring.n, i): ring.field.one})

    @classmethod
    def zero(cls, ring, rank: int) -> Vec:
        return cls(ring, rank, {})

    def _check(self, other):
        if not isinstance(other, Vec):
            return None
        if other.ring is not self.ring or other.rank != self.rank:
            raise TypeError(f"rank mismatch: {self.rank} vs {other.rank}")
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __neg__(self):
        return Vec(self.ring, self.rank, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Vec(self.ring, self.rank, add_into(dict(self.terms), o.terms))

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Vec(self.ring, self.rank, add_into(dict(self.terms), o.terms, -self.ring.field.one))

    def __rmul__(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise TypeError("element and vector over different algebras")
            return Vec(self.ring, self.rank, self.ring.left_mul_terms(other.terms, self.terms))
        try:
            c = self.ring.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Vec(self.ring, self.rank, scaled(self.terms, c))

    def __mul__(self, other):
        # right multiplication only by scalars: these are left modules
        if isinstance(other, Poly):
            return NotImplemented
        return self.__rmul__(other)

    def component(self, i: int) -> Poly:
        return Poly(self.ring, {e: v for (e, c), v in self.terms.items() if c == i})

    def components(self) -> list:
        return [self.component(i) for i in range(self.rank)]

    def support(self) -> set:
        return {c for _, c in self.terms}

    def sorted_terms(self, order) -> list:
        key = order.key
        return sorted(self.terms.items(), key=lambda t: key(*t[0]), reverse=True)

    def lm(self, order):
        if not self.terms:
            raise ValueError("the zero vector has no leading monomial")
        key = order.key
        return max(self.terms, key=lambda m: key(*m))

    def lc(self, order):
        return self.terms[self.lm(order)]

    def monic(self, order) -> Vec:
        if not self.terms:
            return self
        return Vec(self.ring, self.rank, scaled(self.terms, 1 / self.lc(order)))

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.components()) + "]"

    def __repr__(self):
        return f"Vec({self})"


def as_vec(x) -> Vec:
    if isinstance(x, Vec):
        return x
    if isinstance(x, Poly):
        return Vec(x.ring, 1, {(e, 0): c for e, c in x.terms.items()})
    raise TypeError(f"expected Poly or Vec, got {type(x).__name__}")
