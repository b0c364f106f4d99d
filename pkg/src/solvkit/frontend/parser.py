"""Parser for ``.solv`` scripts.

One statement per line; ``#`` starts a comment. Polynomials are written in
PBW form (variables in each monomial in declared order), e.g.
``3*x^2*d - 1/2*d + 1``. Vectors are bracketed lists ``[p, q]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..fields import parse_field
from ..orderings import DegLex, DegRevLex, ElimBlock, Lex, Weighted

RESERVED = {"mod", "in", "keep", "of", "over", "components", "rank", "order", "rels", "rel", "field", "gens"}


class ParseError(ValueError):
    def __init__(self, msg, line=0, col=0):
        self.msg, self.line, self.col = msg, line, col
        super().__init__(f"line {line}, col {col}: {msg}" if line else msg)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>->|[-+*/^()\[\]{},=:]))")


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    col: int


def tokenize(text: str, line: int = 0) -> list:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        out.append(Tok(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


class _Stream:
    def __init__(self, toks, line, names=()):
        self.toks = toks
        self.i = 0
        self.line = line
        self.names = tuple(names)

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def at(self, text, k=0):
        t = self.peek(k)
        return t is not None and t.text == text

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        col = tok.col if tok else (self.toks[-1].col + len(self.toks[-1].text) if self.toks else 1)
        return ParseError(msg, self.line, col)

    def next(self):
        t = self.peek()
        if t is None:
            raise self.error("unexpected end of line")
        self.i += 1
        return t

    def expect(self, text):
        t = self.peek()
        if t is None or t.text != text:
            raise self.error(f"expected {text!r}" + (f", found {t.text!r}" if t else ""))
        self.i += 1
        return t

    def ident(self, what="identifier"):
        t = self.peek()
        if t is None or t.kind != "id":
            raise self.error(f"expected {what}")
        self.i += 1
        return t

    def integer(self):
        t = self.peek()
        if t is None or t.kind != "num":
            raise self.error("expected an integer")
        self.i += 1
        return int(t.text)

    def done(self):
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek().text!r}")

    # ---------- polynomials ----------

    def gen_index(self, tok):
        try:
            return self.names.index(tok.text)
        except ValueError:
            raise self.error(f"unknown identifier {tok.text!r}", tok) from None

    def monomial(self, first):
        """Parse ``id[^k] (* id[^k])*`` starting at token ``first``."""
        n = len(self.names)
        e = [0] * n
        last = -1
        tok = first
        while True:
            i = self.gen_index(tok)
            k = 1
            if self.at("^"):
                self.next()
                k = self.integer()
            if i < last:
                raise self.error(f"non-PBW monomial: {tok.text} must precede {self.names[last]}", tok)
            e[i] += k
            last = i
            if self.at("*") and self.peek(1) is not None and self.peek(1).kind == "id":
                self.next()
                tok = self.next()
                continue
            return tuple(e)

    def coefficient(self):
        num = self.integer()
        if self.at("/"):
            self.next()
            den = self.integer()
            if den == 0:
                raise self.error("division by zero")
            return Fraction(num, den)
        return Fraction(num)

    def term(self):
        n = len(self.names)
        c = Fraction(1)
        t = self.peek()
        if t is not None and t.kind == "num":
            c = self.coefficient()
            if self.at("*"):
                self.next()
                t = self.peek()
                if t is None or t.kind != "id":
                    raise self.error("expected a variable after '*'")
            elif self.peek() is None or self.peek().kind != "id":
                return (0,) * n, c
        t = self.next()
        if t.kind != "id":
            raise self.error(f"expected a term, found {t.text!r}", t)
        return self.monomial(t), c

    def poly(self) -> dict:
        """Signed sum of terms as ``{exponent: Fraction}``."""
        out = {}
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.next().text == "-" else 1
        while True:
            e, c = self.term()
            v = out.get(e, 0) + sign * c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
            if self.at("+") or self.at("-"):
                sign = -1 if self.next().text == "-" else 1
                continue
            return out

    def vec(self) -> list:
        self.expect("[")
        comps = [self.poly()]
        while self.at(","):
            self.next()
            comps.append(self.poly())
        self.expect("]")
        return comps

    def element(self):
        """A vector ``[..]`` (list of dicts) or a polynomial (dict)."""
        return self.vec() if self.at("[") else self.poly()

    def elements(self) -> list:
        out = [self.element()]
        while self.at(","):
            self.next()
            out.append(self.element())
        return out

    def id_set(self) -> list:
        self.expect("{")
        out = []
        if not self.at("}"):
            out.append(self.ident().text)
            while self.at(","):
                self.next()
                out.append(self.ident().text)
        self.expect("}")
        return out

    def int_set(self) -> list:
        self.expect("{")
        out = [self.integer()]
        while self.at(","):
            self.next()
            out.append(self.integer())
        self.expect("}")
        return out

    def id_list(self) -> list:
        self.expect("(")
        out = [self.ident().text]
        while self.at(","):
            self.next()
            out.append(self.ident().text)
        self.expect(")")
        return out

    # ---------- orderings ----------

    def perm(self, ids, tok):
        if sorted(ids) != sorted(self.names) or len(set(ids)) != len(ids):
            raise self.error("ordering must list every generator exactly once", tok)
        return tuple(self.names.index(s) for s in ids)

    def order(self):
        tok = self.ident("ordering")
        kind = tok.text
        n = len(self.names)
        if kind in ("lex", "deglex", "degrevlex"):
            perm = tuple(range(n))
            if self.at("("):
                perm = self.perm(self.id_list(), tok)
            return {"lex": Lex, "deglex": DegLex, "degrevlex": DegRevLex}[kind](perm)
        if kind == "weights":
            self.expect("(")
            ws = [self.integer()]
            while self.at(","):
                self.next()
                ws.append(self.integer())
            self.expect(")")
            self.expect("over")
            tie = self.order()
            if len(ws) != n:
                raise self.error(f"expected {n} weights, got {len(ws)}", tok)
            return Weighted(tuple(ws), tie)
        if kind == "elim":
            elim = self.id_set()
            self.expect("over")
            base = self.order()
            idx = {self.names.index(s) if s in self.names else -1 for s in elim}
            if -1 in idx:
                raise self.error("unknown generator in elim set", tok)
            keep = frozenset(range(n)) - idx
            if not idx or not keep:
                raise self.error("elim set must be a nonempty proper subset of the generators", tok)
            return ElimBlock(base, keep)
        raise self.error(f"unknown ordering {kind!r}", tok)


def parse_poly_dict(names, text: str) -> dict:
    s = _Stream(tokenize(text), 0, names)
    p = s.poly()
    s.done()
    return p


def _to_poly(A, d: dict):
    return A.poly({e: c for e, c in d.items()})


def parse_poly(A, text: str):
    """Parse a PBW-form polynomial over the algebra ``A``."""
    return _to_poly(A, parse_poly_dict(A.names, text))


def parse_vec(A, text: str):
    from ..polys import Vec

    s = _Stream(tokenize(text), 0, A.names)
    comps = s.vec()
    s.done()
    return Vec.from_polys(A, [_to_poly(A, d) for d in comps])


# ---------- statements ----------


@dataclass
class Statement:
    kind: str
    line: int
    args: dict = field(default_factory=dict)
    text: str = ""


@dataclass
class Script:
    statements: list


_COMMANDS = {"validate", "gb", "nf", "member", "eliminate", "intersect", "windep", "dim",
             "kernel", "member-image", "surjective", "hom-exists", "mul"}


def _split_at(s: _Stream, word: str):
    """Split the remaining tokens at the last top-level ``word``."""
    depth = 0
    at = None
    for k in range(s.i, len(s.toks)):
        t = s.toks[k]
        if t.text in "([{":
            depth += 1
        elif t.text in ")]}":
            depth -= 1
        elif depth == 0 and t.kind == "id" and t.text == word:
            at = k
    if at is None:
        raise s.error(f"expected '{word}'")
    return at


def _next_word(s: _Stream, word: str) -> int:
    """Index of the next ``word`` token, or the end of the line."""
    for k in range(s.i, len(s.toks)):
        if s.toks[k].kind == "id" and s.toks[k].text == word:
            return k
    return len(s.toks)


def _rest(s: _Stream, stop: int):
    sub = _Stream(s.toks[s.i:stop], s.line, s.names)
    return sub


def _parse_element_upto(s: _Stream, word: str):
    stop = _split_at(s, word)
    sub = _rest(s, stop)
    if sub.peek() is None:
        raise s.error("expected an expression")
    el = sub.element()
    sub.done()
    s.i = stop + 1
    return el


def _name(s, what="name"):
    t = s.ident(what)
    if t.text in RESERVED:
        raise s.error(f"{t.text!r} is a reserved word", t)
    return t.text


class _Parser:
    def __init__(self, text: str, default_field=None):
        self.lines = text.splitlines()
        self.names = None
        self.default_field = default_field

    def parse(self) -> Script:
        out = []
        for no, raw in enumerate(self.lines, 1):
            st = self.parse_line(raw, no)
            if st is not None:
                out.append(st)
        return Script(out)

    def parse_line(self, raw: str, no: int):
        """Parse one line; returns None for blank or comment lines."""
        body = raw.split("#", 1)[0]
        toks = tokenize(body, no)
        if not toks:
            return None
        st = self.statement(_Stream(toks, no, self.names or ()))
        st.text = body.strip()
        return st

    def need_algebra(self, s, at=None):
        if self.names is None:
            raise s.error("no algebra declared yet", at or s.toks[0])

    def statement(self, s: _Stream) -> Statement:
        head = s.ident("keyword")
        kw = head.text
        # hyphenated commands arrive as id '-' id
        dash, tail = s.peek(), s.peek(1)
        if (dash is not None and tail is not None and dash.text == "-" and dash.col == head.col + len(kw)
                and tail.col == dash.col + 1 and f"{kw}-{tail.text}" in _COMMANDS):
            s.i += 2
            kw = f"{kw}-{tail.text}"
        line = s.line
        if kw == "algebra":
            return self.algebra(s)
        if kw == "rel":
            return self.relation(s)
        if kw in ("ideal", "module", "submodule", "hom"):
            self.need_algebra(s)
            return getattr(self, kw)(s)
        if kw not in _COMMANDS:
            raise ParseError(f"unknown statement {kw!r}", line, head.col)
        self.need_algebra(s)
        return getattr(self, "cmd_" + kw.replace("-", "_"))(s)

    # ---------- declarations ----------

    def algebra(self, s):
        name = _name(s, "algebra name")
        fld = None
        if s.at("field"):
            s.next()
            t = s.next()
            text = t.text
            if text == "GF":
                if s.at("("):
                    s.next()
                    text = f"GF({s.integer()})"
                    s.expect(")")
                else:
                    text = f"GF {s.integer()}"
            try:
                fld = parse_field(text)
            except ValueError as exc:
                raise s.error(str(exc), t) from None
        s.expect("gens")
        gens = []
        while s.peek() is not None and s.peek().kind == "id" and s.peek().text not in ("order", "rel"):
            t = s.peek()
            g = _name(s, "generator")
            if g in gens:
                raise s.error(f"duplicate generator {g!r}", t)
            gens.append(g)
        if not gens:
            raise s.error("an algebra needs at least one generator")
        s.names = tuple(gens)
        order = None
        if s.at("order"):
            s.next()
            order = s.order()
        self.names = tuple(gens)
        # relations may trail on the same line: ... rel d*x = x*d + 1 rel ...
        rels = []
        while s.at("rel"):
            kw = s.next()
            stop = _next_word(s, "rel")
            if stop == s.i:
                raise s.error("empty relation", kw)
            rels.append(self._relation_body(_Stream(s.toks[s.i:stop], s.line, s.names)))
            s.i = stop
        s.done()
        return Statement("algebra", s.line, {"name": name, "field": fld, "gens": tuple(gens), "order": order,
                                             "rels": rels})

    def relation(self, s):
        self.need_algebra(s)
        return Statement("rel", s.line, self._relation_body(s))

    def _relation_body(self, s) -> dict:
        t1 = s.ident("generator")
        s.expect("*")
        t2 = s.ident("generator")
        hi, lo = s.gen_index(t1), s.gen_index(t2)
        if hi <= lo:
            raise s.error(f"relations must be given as higher*lower: write {t2.text}*{t1.text}"
                          if hi < lo else "a generator does not need a relation with itself", t1)
        s.expect("=")
        rhs = s.poly()
        s.done()
        key = [0] * len(self.names)
        key[hi] += 1
        key[lo] += 1
        key = tuple(key)
        lam = rhs.pop(key, Fraction(0))
        return {"hi": hi, "lo": lo, "lam": lam, "f": rhs}

    def ideal(self, s):
        name = _name(s)
        s.expect("=")
        gens = s.elements()
        s.done()
        if any(isinstance(g, list) for g in gens):
            raise s.error("ideal generators must be polynomials")
        return Statement("ideal", s.line, {"name": name, "gens": gens})

    def module(self, s):
        name = _name(s)
        s.expect("rank")
        rank = s.integer()
        if rank < 1:
            raise s.error("rank must be positive")
        kind = "pot"
        rels = []
        if s.at("order"):
            s.next()
            t = s.ident("pot or top")
            if t.text not in ("pot", "top"):
                raise s.error("module order must be pot or top", t)
            kind = t.text
        if s.at("rels"):
            s.next()
            rels = [self._vec(s, g, rank) for g in s.elements()]
        s.done()
        return Statement("module", s.line, {"name": name, "rank": rank, "order": kind, "rels": rels})

    def _vec(self, s, g, rank):
        if not isinstance(g, list):
            g = [g]
        if len(g) != rank:
            raise s.error(f"vector has {len(g)} entries, expected {rank}")
        return g

    def submodule(self, s):
        name = _name(s)
        s.expect("of")
        parent = _name(s, "module name")
        s.expect("=")
        gens = s.elements()
        s.done()
        return Statement("submodule", s.line, {"name": name, "module": parent, "gens": gens})

    def hom(self, s):
        name = _name(s)
        s.expect(":")
        src = _name(s, "source module")
        s.expect("->")
        dst = _name(s, "target module")
        s.expect("=")
        images = s.elements()
        s.done()
        return Statement("hom", s.line, {"name": name, "source": src, "target": dst, "images": images})

    # ---------- commands ----------

    def cmd_validate(self, s):
        s.done()
        return Statement("validate", s.line)

    def _one_name(self, kind, s):
        n = _name(s)
        s.done()
        return Statement(kind, s.line, {"name": n})

    def cmd_gb(self, s):
        return self._one_name("gb", s)

    def cmd_dim(self, s):
        return self._one_name("dim", s)

    def cmd_kernel(self, s):
        return self._one_name("kernel", s)

    def cmd_surjective(self, s):
        return self._one_name("surjective", s)

    def cmd_hom_exists(self, s):
        return self._one_name("hom-exists", s)

    def cmd_nf(self, s):
        el = _parse_element_upto(s, "mod")
        return Statement("nf", s.line, {"expr": el, "name": self._last_name(s)})

    def cmd_member(self, s):
        el = _parse_element_upto(s, "in")
        return Statement("member", s.line, {"expr": el, "name": self._last_name(s)})

    def cmd_member_image(self, s):
        el = _parse_element_upto(s, "in")
        return Statement("member-image", s.line, {"expr": el, "name": self._last_name(s)})

    def _last_name(self, s):
        n = _name(s)
        s.done()
        return n

    def cmd_eliminate(self, s):
        n = _name(s)
        s.expect("keep")
        if s.at("components"):
            s.next()
            comps = s.int_set()
            s.done()
            return Statement("eliminate", s.line, {"name": n, "components": comps})
        ids = s.id_set()
        for v in ids:
            if v not in self.names:
                raise s.error(f"unknown generator {v!r}")
        s.done()
        return Statement("eliminate", s.line, {"name": n, "keep": ids})

    def cmd_intersect(self, s):
        a = _name(s)
        b = _name(s)
        s.done()
        return Statement("intersect", s.line, {"a": a, "b": b})

    def cmd_windep(self, s):
        n = _name(s)
        ids = s.id_set()
        for v in ids:
            if v not in self.names:
                raise s.error(f"unknown generator {v!r}")
        s.done()
        return Statement("windep", s.line, {"name": n, "keep": ids})

    def cmd_mul(self, s):
        s.expect("(")
        p = s.poly()
        s.expect(")")
        s.expect("*")
        s.expect("(")
        q = s.poly()
        s.expect(")")
        s.done()
        return Statement("mul", s.line, {"p": p, "q": q})


def parse(text: str) -> Script:
    """Parse a whole script; raises :class:`ParseError` with line and column."""
    return _Parser(text).parse()
