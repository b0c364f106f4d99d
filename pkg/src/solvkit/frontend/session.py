"""Execute parsed ``.solv`` statements against the library."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import AlgebraDef, ValidationError, validate_algebra
from ..elimination import (
    ClosureFailure,
    eliminate_ideal,
    eliminate_module,
    gk_dim_search,
    intersect_ideals,
    intersect_submodules,
    weakly_independent,
)
from ..fields import QQ
from ..groebner import GroebnerBasis, buchberger, member, normal_form
from ..homs import (
    FreeHom,
    Presentation,
    QuotientHom,
    image_membership,
    image_membership_quotient,
    is_surjective_free,
    is_surjective_quotient,
    kernel_free,
    kernel_quotient,
)
from ..orderings import POT, TOP, DegLex
from ..polys import Vec
from .parser import Script, Statement, parse


class SessionError(Exception):
    """A hard error, tagged with the line and statement that caused it."""

    def __init__(self, line, text, message):
        self.line, self.text, self.message = line, text, message
        super().__init__(f"line {line}: {text}: {message}")


@dataclass
class Result:
    line: int
    command: str
    text: str
    data: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)

    def as_json(self) -> dict:
        out = {"line": self.line, "command": self.command, "result": self.text}
        out.update(self.data)
        if self.trace:
            out["trace"] = self.trace
        return out


class _AlgebraBinding:
    def __init__(self, name, gens, fld, order):
        self.name = name
        self.gens = gens
        self.field = fld
        self.order = order or DegLex.natural(len(gens))
        self.rels = {}
        self._algebra = None
        self.warnings = []

    def definition(self) -> AlgebraDef:
        n = len(self.gens)
        rels = dict(self.rels)
        for j in range(n):
            for i in range(j):
                if (j, i) not in rels:
                    rels[(j, i)] = (1, {})
                    self.warnings.append(f"warning: algebra {self.name}: no relation for "
                                         f"{self.gens[j]}*{self.gens[i]}; assuming they commute")
        return AlgebraDef(self.gens, self.field, rels, self.order)

    @property
    def algebra(self):
        if self._algebra is None:
            self.warnings = []
            self._algebra = validate_algebra(self.definition())
        return self._algebra


@dataclass
class _Ideal:
    alg: _AlgebraBinding
    gens: list
    _gb: GroebnerBasis | None = None

    @property
    def gb(self):
        if self._gb is None:
            self._gb = buchberger(self.gens, self.alg.algebra.order, algebra=self.alg.algebra)
        return self._gb


@dataclass
class _Module:
    alg: _AlgebraBinding
    rank: int
    kind: str
    rels: list

    @property
    def order(self):
        A = self.alg.algebra
        return POT(A.order) if self.kind == "pot" else TOP(A.order)

    def presentation(self):
        return Presentation(self.alg.algebra, self.rank, tuple(self.rels))


@dataclass
class _Submodule:
    alg: _AlgebraBinding
    module: _Module
    gens: list
    _gb: GroebnerBasis | None = None

    @property
    def rank(self):
        return self.module.rank

    @property
    def gb(self):
        if self._gb is None:
            self._gb = buchberger(self.gens, self.module.order, algebra=self.alg.algebra, rank=self.rank)
        return self._gb


@dataclass
class _Hom:
    alg: _AlgebraBinding
    phi: FreeHom
    quotient: bool


def _basis(G) -> tuple:
    return str(G), {"basis": [str(g) for g in G]}


def _bool(v: bool) -> tuple:
    return ("true" if v else "false"), {"value": bool(v)}


class Session:
    """Holds named bindings; statements are executed one at a time."""

    def __init__(self, *, default_field=QQ, trace: bool = False):
        self.default_field = default_field
        self.trace = trace
        self.bindings = {}
        self.current = None
        self.warnings = []

    # ---------- helpers ----------

    def _algebra(self):
        alg = self.current.algebra
        self.warnings.extend(self.current.warnings)
        self.current.warnings = []
        return alg

    def _lookup(self, name, *kinds):
        b = self.bindings.get(name)
        if b is None:
            raise ValueError(f"unknown name {name!r}")
        if kinds and not isinstance(b, kinds):
            want = " or ".join(k.__name__.strip("_").lower() for k in kinds)
            raise ValueError(f"{name!r} is not a {want}")
        if getattr(b, "alg", self.current) is not self.current:
            raise ValueError(f"{name!r} belongs to algebra {b.alg.name}, not the current algebra {self.current.name}")
        return b

    def _poly(self, d):
        if isinstance(d, list):
            raise ValueError("expected a polynomial, got a vector")
        return self._algebra().poly(d)

    def _vec(self, d, rank):
        A = self._algebra()
        comps = d if isinstance(d, list) else [d]
        if len(comps) != rank:
            raise ValueError(f"vector has {len(comps)} entries, expected {rank}")
        return Vec.from_polys(A, [A.poly(c) for c in comps])

    # ---------- execution ----------

    def run(self, script: Script):
        """Yield results statement by statement; raise SessionError on a hard error."""
        for st in script.statements:
            yield from self.execute(st)

    def execute(self, st: Statement) -> list:
        try:
            return self._dispatch(st)
        except SessionError:
            raise
        except (ValueError, TypeError, ArithmeticError) as exc:
            raise SessionError(st.line, st.text, f"{type(exc).__name__}: {exc}") from exc

    def _dispatch(self, st: Statement) -> list:
        a = st.args
        k = st.kind
        if k == "algebra":
            if a["name"] in self.bindings:
                raise ValueError(f"name {a['name']!r} is already bound")
            b = _AlgebraBinding(a["name"], a["gens"], a["field"] or self.default_field, a["order"])
            for r in a.get("rels", ()):
                b.rels[(r["hi"], r["lo"])] = (r["lam"], r["f"])
            self.bindings[a["name"]] = b
            self.current = b
            return []
        if k == "rel":
            if self.current._algebra is not None:
                raise ValueError("relations must come before the algebra is first used")
            self.current.rels[(a["hi"], a["lo"])] = (a["lam"], a["f"])
            return []
        if k in ("ideal", "module", "submodule", "hom"):
            if a["name"] in self.bindings:
                raise ValueError(f"name {a['name']!r} is already bound")
            self.bindings[a["name"]] = getattr(self, "_decl_" + k)(a)
            return []
        text, data, trace = getattr(self, "_cmd_" + k.replace("-", "_"))(a)
        return [Result(st.line, k, text, data, trace or [])]

    # ---------- declarations ----------

    def _decl_ideal(self, a):
        return _Ideal(self.current, [self._poly(g) for g in a["gens"]])

    def _decl_module(self, a):
        self._algebra()
        return _Module(self.current, a["rank"], a["order"], [self._vec(r, a["rank"]) for r in a["rels"]])

    def _decl_submodule(self, a):
        M = self._lookup(a["module"], _Module)
        return _Submodule(self.current, M, [self._vec(g, M.rank) for g in a["gens"]])

    def _decl_hom(self, a):
        src = self._lookup(a["source"], _Module)
        dst = self._lookup(a["target"], _Module)
        A = self._algebra()
        images = [self._vec(g, dst.rank) for g in a["images"]]
        if len(images) != src.rank:
            raise ValueError(f"{len(images)} images given for a source of rank {src.rank}")
        if src.rels or dst.rels:
            phi = QuotientHom(src.presentation(), dst.presentation(), images)
            return _Hom(self.current, phi, True)
        return _Hom(self.current, FreeHom(images, algebra=A, target_rank=dst.rank), False)

    # ---------- commands ----------

    def _cmd_validate(self, a):
        try:
            self._algebra()
        except ValidationError as exc:
            return f"invalid: {exc}", {"valid": False, "error": type(exc).__name__}, None
        return "valid", {"valid": True}, None

    def _cmd_gb(self, a):
        b = self._lookup(a["name"], _Ideal, _Submodule)
        return (*_basis(b.gb), None)

    def _element_for(self, b, expr):
        if isinstance(b, _Ideal):
            return self._poly(expr)
        return self._vec(expr, b.rank)

    def _cmd_nf(self, a):
        b = self._lookup(a["name"], _Ideal, _Submodule)
        x = self._element_for(b, a["expr"])
        steps = [] if self.trace else None
        r, q = normal_form(x, b.gb, trace=steps.append if steps is not None else None)
        return str(r), {}, steps

    def _cmd_member(self, a):
        b = self._lookup(a["name"], _Ideal, _Submodule)
        x = self._element_for(b, a["expr"])
        steps = [] if self.trace else None
        if steps is not None:
            normal_form(x, b.gb, trace=steps.append)
        return (*_bool(member(x, b.gb).is_member), steps)

    def _cmd_eliminate(self, a):
        if "components" in a:
            b = self._lookup(a["name"], _Submodule)
            comps = [c - 1 for c in a["components"]]
            if any(c < 0 or c >= b.rank for c in comps):
                raise ValueError(f"components must lie in 1..{b.rank}")
            G = eliminate_module(b.gens, comps, algebra=self._algebra(), rank=b.rank)
            return (*_basis(G), None)
        b = self._lookup(a["name"], _Ideal)
        res = eliminate_ideal(b.gens, a["keep"], algebra=self._algebra())
        if isinstance(res, ClosureFailure):
            return str(res), {"closure_failure": True}, None
        return (*_basis(res), None)

    def _cmd_intersect(self, a):
        x = self._lookup(a["a"], _Ideal, _Submodule)
        y = self._lookup(a["b"], _Ideal, _Submodule)
        A = self._algebra()
        if isinstance(x, _Ideal) and isinstance(y, _Ideal):
            return (*_basis(intersect_ideals(x.gens, y.gens, algebra=A)), None)
        if isinstance(x, _Submodule) and isinstance(y, _Submodule):
            if x.rank != y.rank:
                raise ValueError(f"cannot intersect submodules of ranks {x.rank} and {y.rank}")
            G = intersect_submodules(x.gens, y.gens, order=x.module.order, algebra=A, rank=x.rank)
            return (*_basis(G), None)
        raise ValueError("intersect needs two ideals or two submodules")

    def _cmd_windep(self, a):
        b = self._lookup(a["name"], _Ideal)
        return (*_bool(weakly_independent(b.gens, a["keep"], algebra=self._algebra())), None)

    def _cmd_dim(self, a):
        b = self._lookup(a["name"], _Ideal)
        r = gk_dim_search(b.gens, algebra=self._algebra())
        return str(r), {"d": r.d, "witness": list(r.names), "exact": r.exact}, None

    def _cmd_kernel(self, a):
        h = self._lookup(a["name"], _Hom)
        G = kernel_quotient(h.phi) if h.quotient else kernel_free(h.phi)
        return (*_basis(G), None)

    def _cmd_member_image(self, a):
        h = self._lookup(a["name"], _Hom)
        eta = self._vec(a["expr"], h.phi.m)
        r = image_membership_quotient(h.phi, eta) if h.quotient else image_membership(h.phi, eta)
        data = {"value": r.in_image}
        if r.in_image:
            data["preimage"] = str(r.preimage)
        return str(r), data, None

    def _cmd_surjective(self, a):
        h = self._lookup(a["name"], _Hom)
        r = is_surjective_quotient(h.phi) if h.quotient else is_surjective_free(h.phi)
        return str(r), {"value": r.surjective}, None

    def _cmd_hom_exists(self, a):
        h = self._lookup(a["name"], _Hom)
        if not h.quotient:
            return "WellDefined", {"value": True}, None
        w = h.phi.well_defined
        return str(w), {"value": w.ok}, None

    def _cmd_mul(self, a):
        p, q = self._poly(a["p"]), self._poly(a["q"])
        return str(p * q), {}, None


def run_text(text: str, **kwargs) -> list:
    """Parse and run a script; return the list of results."""
    s = Session(**kwargs)
    return list(s.run(parse(text)))


__all__ = ["Session", "SessionError", "Result", "run_text"]
