"""Kernels, image membership and surjectivity of module homomorphisms.

A map phi: L1 -> L2 (ranks s and m) is handled through the graph submodule
generated by e_i - eta_i in L = L1 + L2. Components 0..s-1 of L are the source
block and s..s+m-1 the target block; the POT elimination ordering puts the
source block lowest, so remainders that avoid the target block are preimages.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .groebner import GroebnerBasis, RankMismatch, buchberger, member, normal_form
from .orderings import POT, PotElim
from .polys import Vec, add_into, as_vec


class HomNotWellDefined(ValueError):
    pass


class VerificationFailed(RuntimeError):
    """An answer failed its evaluation check; this indicates an internal bug."""


@dataclass(frozen=True)
class ImageResult:
    """``preimage`` is set iff the element lies in the image."""

    in_image: bool
    preimage: Vec | None = None

    def __bool__(self):
        return self.in_image

    def __str__(self):
        return f"InImage({self.preimage})" if self.in_image else "NotInImage"


@dataclass(frozen=True)
class SurjectivityResult:
    """On success ``rows[j][i]`` is f_ji with eps_j = sum_i f_ji eta_i.

    On failure ``missing`` is the first target component that is not hit.
    """

    surjective: bool
    rows: tuple = ()
    missing: int | None = None

    def __bool__(self):
        return self.surjective

    def __str__(self):
        if not self.surjective:
            return f"NotSurjective(e{self.missing + 1})"
        parts = []
        for j, row in enumerate(self.rows):
            terms = [f"({f})*eta{i + 1}" for i, f in enumerate(row) if not f.is_zero()]
            parts.append(f"eps{j + 1} = " + (" + ".join(terms) or "0"))
        return "Surjective: " + "; ".join(parts)


@dataclass(frozen=True)
class WellDefinedness:
    """``failing`` is the index of the first relation whose image leaves N2."""

    ok: bool
    failing: int | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "WellDefined" if self.ok else f"NotWellDefined({self.failing + 1})"


def _images(A, images, target_rank):
    out = [as_vec(v) for v in images]
    if target_rank is None:
        if not out:
            raise ValueError("target_rank is required for a map with no images")
        target_rank = out[0].rank
    for v in out:
        if v.ring is not A:
            raise TypeError("images over a different algebra")
        if v.rank != target_rank:
            raise RankMismatch(f"image of rank {v.rank} in a target of rank {target_rank}")
    return out, target_rank


def _shift(v: Vec, rank: int, offset: int) -> Vec:
    return Vec(v.ring, rank, {(e, c + offset): x for (e, c), x in v.terms.items()})


def _block(v: Vec, lo: int, hi: int) -> Vec:
    return Vec(v.ring, hi - lo, {(e, c - lo): x for (e, c), x in v.terms.items() if lo <= c < hi})


def _evaluate(A, images, m, xi: Vec) -> Vec:
    acc = {}
    for i, eta in enumerate(images):
        f = xi.component(i)
        if f:
            add_into(acc, A.left_mul_terms(f.terms, eta.terms))
    return Vec(A, m, acc)


class FreeHom:
    """phi: A^s -> A^m given by the images of the standard basis."""

    def __init__(self, images, *, algebra=None, target_rank=None):
        images = list(images)
        A = algebra if algebra is not None else (images[0].ring if images else None)
        if A is None:
            raise ValueError("algebra is required for a map with no images")
        self.algebra = A
        self.images, self.m = _images(A, images, target_rank)
        self.s = len(self.images)
        if self.s == 0:
            raise ValueError("the source must have positive rank")

    def __call__(self, xi) -> Vec:
        xi = as_vec(xi)
        if xi.rank != self.s:
            raise RankMismatch(f"element of rank {xi.rank} given to a map from rank {self.s}")
        return _evaluate(self.algebra, self.images, self.m, xi)

    @property
    def order(self):
        return PotElim(self.algebra.order, frozenset(range(self.s)))

    def _graph_gens(self):
        A, s, m = self.algebra, self.s, self.m
        return [Vec.unit(A, s + m, i) - _shift(eta, s + m, s) for i, eta in enumerate(self.images)]

    @cached_property
    def graph(self) -> GroebnerBasis:
        return buchberger(self._graph_gens(), self.order, algebra=self.algebra, rank=self.s + self.m,
                          provenance="graph")

    def _check(self, delta: Vec):
        return delta.is_zero()


def graph_kernel_basis(phi: FreeHom) -> GroebnerBasis:
    """Reduced Groebner basis of the graph submodule sum A(e_i - eta_i)."""
    return phi.graph


def _kernel(phi) -> GroebnerBasis:
    s = phi.s
    elems = tuple(_block(g, 0, s) for g in phi.graph if all(c < s for _, c in g.terms))
    for g in elems:
        if not phi._check(phi(g)):
            raise VerificationFailed(f"kernel element {g} does not map into the relations")
    return GroebnerBasis(elems, POT(phi.algebra.order), phi.algebra, s, True, "kernel")


def kernel_free(phi: FreeHom) -> GroebnerBasis:
    """Groebner basis (under POT) of the kernel; empty iff phi is injective."""
    return _kernel(phi)


def _target(phi, eta) -> Vec:
    eta = as_vec(eta)
    if eta.rank != phi.m:
        raise RankMismatch(f"element of rank {eta.rank} in a target of rank {phi.m}")
    return eta


def _image(phi, eta) -> ImageResult:
    eta = _target(phi, eta)
    s, m = phi.s, phi.m
    r, _ = normal_form(_shift(eta, s + m, s), phi.graph)
    if any(c >= s for _, c in r.terms):
        return ImageResult(False)
    xi = _block(r, 0, s)
    if not phi._check(phi(xi) - eta):
        raise VerificationFailed(f"preimage {xi} does not map to {eta}")
    return ImageResult(True, xi)


def image_membership(phi: FreeHom, eta) -> ImageResult:
    """Decide whether ``eta`` is in the image; the preimage is the normal form."""
    return _image(phi, eta)


def _surjective(phi) -> SurjectivityResult:
    A, s, m = phi.algebra, phi.s, phi.m
    one = (0,) * A.n
    rows = []
    for j in range(m):
        lead = (one, s + j)
        g = next((g for g in phi.graph if g.lm(phi.order) == lead), None)
        if g is None or any(c >= s and (e, c) != lead for e, c in g.terms):
            return SurjectivityResult(False, missing=j)
        g = g.monic(phi.order)
        xi = -_block(g, 0, s)
        row = tuple(xi.component(i) for i in range(s))
        if not phi._check(phi(xi) - Vec.unit(A, m, j)):
            raise VerificationFailed(f"expression for eps{j + 1} does not evaluate correctly")
        rows.append(row)
    return SurjectivityResult(True, tuple(rows))


def is_surjective_free(phi: FreeHom) -> SurjectivityResult:
    """Surjective iff the reduced graph basis contains eps_j - xi_j for every j."""
    return _surjective(phi)


@dataclass(frozen=True)
class Presentation:
    """The module A^rank / N with N generated by ``relations``."""

    algebra: object
    rank: int
    relations: tuple = ()

    def __post_init__(self):
        rels = tuple(as_vec(v) for v in self.relations)
        for v in rels:
            if v.rank != self.rank:
                raise RankMismatch(f"relation of rank {v.rank} in a presentation of rank {self.rank}")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def free(cls, algebra, rank: int) -> Presentation:
        return cls(algebra, rank, ())


def _relation_basis(P: Presentation) -> GroebnerBasis:
    return buchberger(P.relations, POT(P.algebra.order), algebra=P.algebra, rank=P.rank)


def hom_exists(M1: Presentation, M2: Presentation, images, *, n2_basis: GroebnerBasis | None = None) -> WellDefinedness:
    """Check that eta_i induce a map M1 -> M2: each relation of M1 must map into N2."""
    A = M1.algebra
    images, _ = _images(A, images, M2.rank)
    if len(images) != M1.rank:
        raise RankMismatch(f"{len(images)} images for a source of rank {M1.rank}")
    G2 = n2_basis if n2_basis is not None else _relation_basis(M2)
    for q, xi in enumerate(M1.relations):
        if not member(_evaluate(A, images, M2.rank, xi), G2):
            return WellDefinedness(False, q)
    return WellDefinedness(True)


class QuotientHom(FreeHom):
    """phi: A^s/N1 -> A^m/N2 induced by eta_i; the eta_i are lifts to A^m."""

    def __init__(self, source: Presentation, target: Presentation, images):
        super().__init__(images, algebra=source.algebra, target_rank=target.rank)
        if self.s != source.rank:
            raise RankMismatch(f"{self.s} images for a source of rank {source.rank}")
        self.source = source
        self.target = target

    @cached_property
    def relation_basis(self) -> GroebnerBasis:
        return _relation_basis(self.target)

    @cached_property
    def well_defined(self) -> WellDefinedness:
        return hom_exists(self.source, self.target, self.images, n2_basis=self.relation_basis)

    def require_well_defined(self):
        w = self.well_defined
        if not w:
            raise HomNotWellDefined(f"relation {w.failing + 1} of the source does not map into the target relations")

    def _graph_gens(self):
        n = self.s + self.m
        return super()._graph_gens() + [_shift(v, n, self.s) for v in self.target.relations]

    def _check(self, delta: Vec):
        return member(delta, self.relation_basis).is_member


def kernel_quotient(phi: QuotientHom) -> GroebnerBasis:
    """Coset representatives generating the kernel, from (N2 + graph) restricted to L1."""
    phi.require_well_defined()
    return _kernel(phi)


def image_membership_quotient(phi: QuotientHom, eta) -> ImageResult:
    phi.require_well_defined()
    return _image(phi, eta)


def is_surjective_quotient(phi: QuotientHom) -> SurjectivityResult:
    phi.require_well_defined()
    return _surjective(phi)
