"""Solvable polynomial algebras: presentations, validation, PBW multiplication.

An algebra on generators a_0..a_{n-1} (0-based) is given by one relation per
pair j > i::

    a_j a_i = lam_ji a_i a_j + f_ji

with ``f_ji`` already written in the PBW basis. ``validate_algebra`` checks the
presentation and is the only way to obtain an :class:`Algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fields import QQ, Field
from .orderings import MonomialOrder, Product, Restricted, TExtension, is_graded
from .polys import Poly, add_into


class ValidationError(ValueError):
    pass


class ZeroLambda(ValidationError):
    def __init__(self, j, i):
        self.j, self.i = j, i
        super().__init__(f"ZeroLambda({j}, {i}): relation a_{j}*a_{i} has lambda = 0")


class LeadingMonomialNotSmaller(ValidationError):
    def __init__(self, j, i, lm):
        self.j, self.i, self.lm = j, i, lm
        super().__init__(f"LeadingMonomialNotSmaller({j}, {i}): LM(f) = {lm} is not below a_{i}*a_{j}")


class OverlapInconsistent(ValidationError):
    def __init__(self, k, j, i, left, right):
        self.k, self.j, self.i = k, j, i
        self.left, self.right = left, right
        super().__init__(
            f"OverlapInconsistent({k}, {j}, {i}): (a_{k}a_{j})a_{i} and a_{k}(a_{j}a_{i}) "
            f"have different normal forms")


class IncompleteRelationTable(ValidationError):
    pass


@dataclass
class AlgebraDef:
    """An unvalidated presentation.

    ``relations`` maps ``(j, i)`` with ``j > i`` to ``(lam, f)`` where ``f`` is
    a dict ``{exponent: coeff}``.
    """

    names: tuple
    field: Field
    relations: dict
    order: MonomialOrder

    def __post_init__(self):
        self.names = tuple(self.names)

    @property
    def n(self):
        return len(self.names)

    @classmethod
    def commutative(cls, names, field: Field = QQ, order=None) -> AlgebraDef:
        from .orderings import DegLex

        names = tuple(names)
        n = len(names)
        rels = {(j, i): (1, {}) for j in range(n) for i in range(j)}
        return cls(names, field, rels, order or DegLex.natural(n))


def _unit(n, *slots):
    e = [0] * n
    for s in slots:
        e[s] += 1
    return tuple(e)


def _word(e):
    return tuple(i for i, x in enumerate(e) for _ in range(x))


def _exp(word, n):
    e = [0] * n
    for i in word:
        e[i] += 1
    return tuple(e)


def _normalize_table(d: AlgebraDef):
    n = d.n
    if len(set(d.names)) != n or any(not s for s in d.names):
        raise ValidationError("generator names must be distinct and nonempty")
    if d.order.nvars != n:
        raise ValidationError(f"ordering has {d.order.nvars} variables, algebra has {n}")
    F = d.field
    table = {}
    for j in range(n):
        for i in range(j):
            if (j, i) not in d.relations:
                raise IncompleteRelationTable(f"no relation given for pair ({j}, {i})")
            lam, f = d.relations[(j, i)]
            f = f.terms if isinstance(f, Poly) else f
            fd = {}
            for e, c in f.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValidationError(f"relation ({j}, {i}): exponent {e} has wrong length")
                add_into(fd, {e: F(c)})
            table[(j, i)] = (F(lam), fd)
    extra = set(d.relations) - set(table)
    if extra:
        raise ValidationError(f"relations must be keyed (j, i) with j > i; got {sorted(extra)}")
    return table


def rewrite_words(table, n, words: dict, observe=None) -> dict:
    """Normal form of a combination of generator words.

    Repeatedly rewrites the leftmost adjacent inversion ``a_j a_i`` (j > i)
    with its relation until every word is PBW-ordered. Returns
    ``{exponent: coeff}``. ``observe`` is called on every word produced by a
    rewrite step.
    """
    todo = {}
    add_into(todo, words)
    out = {}
    while todo:
        w, c = todo.popitem()
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                break
        else:
            add_into(out, {_exp(w, n): c})
            continue
        j, i = w[p], w[p + 1]
        lam, f = table[(j, i)]
        pre, post = w[:p], w[p + 2:]
        new = {pre + (i, j) + post: c * lam}
        for e, fc in f.items():
            add_into(new, {pre + _word(e) + post: c * fc})
        if observe is not None:
            for w2 in new:
                observe(w2)
        add_into(todo, new)
    return out


def validate_algebra(d: AlgebraDef) -> Algebra:
    """Check a presentation and return the validated algebra.

    Raises ZeroLambda, LeadingMonomialNotSmaller, OverlapInconsistent or
    IncompleteRelationTable.
    """
    table = _normalize_table(d)
    n = d.n
    for (j, i), (lam, _) in sorted(table.items()):
        if not lam:
            raise ZeroLambda(j, i)
    key = d.order.key
    for (j, i), (_, f) in sorted(table.items()):
        if f:
            lm = max(f, key=key)
            if not key(lm) < key(_unit(n, i, j)):
                raise LeadingMonomialNotSmaller(j, i, lm)
    for i, j, k in combinations(range(n), 3):
        lam_kj, f_kj = table[(k, j)]
        left = {(j, k, i): lam_kj}
        for e, c in f_kj.items():
            add_into(left, {_word(e) + (i,): c})
        lam_ji, f_ji = table[(j, i)]
        right = {(k, i, j): lam_ji}
        for e, c in f_ji.items():
            add_into(right, {(k,) + _word(e): c})
        left = rewrite_words(table, n, left)
        right = rewrite_words(table, n, right)
        if left != right:
            raise OverlapInconsistent(k, j, i, left, right)
    return Algebra(d, table, ("lambda-nonzero", "lm-descent", "overlap-confluence"), _TOKEN)


_TOKEN = object()


class Algebra:
    """A validated solvable polynomial algebra.

    Multiplication of PBW monomials is memoised per instance; the caches are
    pure optimisations keyed by exponents.
    """

    def __init__(self, d: AlgebraDef, table, checks, token=None):
        if token is not _TOKEN:
            raise TypeError("use validate_algebra() to construct an Algebra")
        self.definition = d
        self.names = d.names
        self.n = d.n
        self.field = d.field
        self.order = d.order
        self.relations = table
        self.checks = checks
        self._zero = (0,) * self.n
        self._mg = {}
        self._mm = {}

    def __repr__(self):
        return f"<Algebra {self.field} [{', '.join(self.names)}] order={self.order}>"

    # ---------- elements ----------

    def poly(self, d: dict) -> Poly:
        return Poly.from_dict(self, d)

    def zero(self) -> Poly:
        return Poly(self)

    def one(self) -> Poly:
        return Poly(self, {self._zero: self.field.one})

    def monomial(self, e, c=1) -> Poly:
        return Poly.from_dict(self, {tuple(e): c})

    def gen(self, name_or_index) -> Poly:
        i = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return Poly(self, {_unit(self.n, i): self.field.one})

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.n)]

    def __call__(self, text: str) -> Poly:
        from .frontend.parser import parse_poly

        return parse_poly(self, text)

    def lam(self, j, i):
        return self.relations[(j, i)][0]

    def f(self, j, i) -> Poly:
        return Poly(self, dict(self.relations[(j, i)][1]))

    # ---------- multiplication ----------

    def _mono_gen(self, a, i) -> dict:
        """a^a * a_i in normal form."""
        k = self.n - 1
        while k >= 0 and a[k] == 0:
            k -= 1
        if k <= i:
            e = list(a)
            e[i] += 1
            return {tuple(e): self.field.one}
        cached = self._mg.get((a, i))
        if cached is not None:
            return cached
        # a^a a_i = a^a' (a_k a_i) = lam (a^a' a_i) a_k + a^a' f_ki
        ap = list(a)
        ap[k] -= 1
        ap = tuple(ap)
        lam, f = self.relations[(k, i)]
        out = {}
        for m, c in self._mono_gen(ap, i).items():
            add_into(out, self._mono_gen(m, k), c * lam)
        for e, c in f.items():
            add_into(out, self._mono_mono(ap, e), c)
        self._mg[(a, i)] = out
        return out

    def _mono_mono(self, a, b) -> dict:
        if not any(b):
            return {a: self.field.one}
        if not any(a):
            return {b: self.field.one}
        last = max(i for i, x in enumerate(a) if x)
        first = min(i for i, x in enumerate(b) if x)
        if last <= first:
            return {tuple(x + y for x, y in zip(a, b)): self.field.one}
        cached = self._mm.get((a, b))
        if cached is not None:
            return cached
        # a^a a^b = (a^a a_first) a^b'
        bp = list(b)
        bp[first] -= 1
        bp = tuple(bp)
        out = {}
        for m, c in self._mono_gen(a, first).items():
            add_into(out, self._mono_mono(m, bp), c)
        self._mm[(a, b)] = out
        return out

    def mul_mono(self, a, b) -> Poly:
        """PBW normal form of a^a * a^b."""
        a, b = tuple(a), tuple(b)
        if len(a) != self.n or len(b) != self.n:
            raise ValueError(f"exponents must have length {self.n}")
        return Poly(self, dict(self._mono_mono(a, b)))

    def mul_terms(self, f: dict, g: dict) -> dict:
        out = {}
        for a, c in f.items():
            for b, d in g.items():
                add_into(out, self._mono_mono(a, b), c * d)
        return out

    def left_mul_terms(self, f: dict, v: dict) -> dict:
        """f * v for a module element v given as {(exp, comp): coeff}."""
        out = {}
        for a, c in f.items():
            for (b, comp), d in v.items():
                for m, x in self._mono_mono(a, b).items():
                    add_into(out, {(m, comp): x * c * d})
        return out

    def mul(self, f: Poly, g: Poly) -> Poly:
        return f * g

    # ---------- structure ----------

    def is_commutative(self) -> bool:
        return all(lam == 1 and not f for lam, f in self.relations.values())

    def is_quadric(self) -> bool:
        """Relations of degree <= 2 and a graded ordering with unit weights."""
        degs_ok = all(sum(e) <= 2 for _, f in self.relations.values() for e in f)
        return degs_ok and is_graded(self.order)

    # ---------- printing ----------

    def format_monomial(self, e) -> str:
        parts = []
        for name, x in zip(self.names, e):
            if x == 1:
                parts.append(name)
            elif x > 1:
                parts.append(f"{name}^{x}")
        return "*".join(parts) if parts else "1"

    def format_terms(self, terms) -> str:
        """Render ``(exponent, coeff)`` pairs, assumed already in order."""
        if not terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(terms):
            s = str(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = self.format_monomial(e)
            if mono == "1":
                body = s
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}"
            if k == 0:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


def mul_mono(A: Algebra, a, b) -> Poly:
    return A.mul_mono(a, b)


def mul(A: Algebra, f: Poly, g: Poly) -> Poly:
    return Poly(A, A.mul_terms(f.terms, g.terms))


def _fresh(name, taken):
    while name in taken:
        name += "_"
    return name


def extend_with_t(A: Algebra, name: str = "t") -> Algebra:
    """A[t] with t central and last; ordered so that the t-degree dominates."""
    n = A.n
    rels = {}
    for (j, i), (lam, f) in A.relations.items():
        rels[(j, i)] = (lam, {e + (0,): c for e, c in f.items()})
    for i in range(n):
        rels[(n, i)] = (1, {})
    names = A.names + (_fresh(name, set(A.names)),)
    return validate_algebra(AlgebraDef(names, A.field, rels, TExtension(A.order)))


def tensor(A1: Algebra, A2: Algebra) -> Algebra:
    """A1 (x) A2 with the two blocks commuting and the product ordering."""
    if A1.field != A2.field:
        raise ValueError("tensor factors must share the coefficient field")
    n, m = A1.n, A2.n
    names1, names2 = A1.names, A2.names
    if set(names1) & set(names2):
        names1 = tuple(f"{s}_1" for s in names1)
        names2 = tuple(f"{s}_2" for s in names2)
    rels = {}
    for (j, i), (lam, f) in A1.relations.items():
        rels[(j, i)] = (lam, {e + (0,) * m: c for e, c in f.items()})
    for (j, i), (lam, f) in A2.relations.items():
        rels[(j + n, i + n)] = (lam, {(0,) * n + e: c for e, c in f.items()})
    for j in range(n, n + m):
        for i in range(n):
            rels[(j, i)] = (1, {})
    return validate_algebra(AlgebraDef(names1 + names2, A1.field, rels, Product(A1.order, A2.order)))


def subalgebra(A: Algebra, keep) -> Algebra:
    """The subalgebra generated by the generators in ``keep``.

    Only valid when every relation between kept generators stays inside the
    span of kept monomials; raises ValueError otherwise.
    """
    slots = tuple(sorted(set(keep)))
    pos = {s: k for k, s in enumerate(slots)}
    rels = {}
    for (j, i), (lam, f) in A.relations.items():
        if j in pos and i in pos:
            fd = {}
            for e, c in f.items():
                if any(x and s not in pos for s, x in enumerate(e)):
                    raise ValueError(f"relation ({j}, {i}) leaves the span of kept monomials")
                fd[tuple(e[s] for s in slots)] = c
            rels[(pos[j], pos[i])] = (lam, fd)
    names = tuple(A.names[s] for s in slots)
    return validate_algebra(AlgebraDef(names, A.field, rels, Restricted(A.order, slots)))
