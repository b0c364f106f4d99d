"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class Field:
    """Base class for the two supported coefficient fields."""

    name = "?"

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, ModInt):
            raise TypeError("cannot lift a GF(p) element to QQ")
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GF(Field):
    """The prime field Z/pZ."""

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"GF({p}): modulus must be prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value) -> ModInt:
        if isinstance(value, ModInt):
            if value.p != self.p:
                raise TypeError(f"element of GF({value.p}) used in {self.name}")
            return value
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        if isinstance(value, Rational) and not isinstance(value, int):
            num, den = value.numerator, value.denominator
            if den % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return ModInt(num * pow(den, -1, self.p), self.p)
        return ModInt(int(value), self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class ModInt:
    """An element of GF(p), stored as its least nonnegative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise TypeError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModInt(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModInt(pow(self.v, -1, self.p), self.p) ** (-e)
        return ModInt(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def parse_field(text: str) -> Field:
    """Parse ``QQ``, ``GF7``, ``GF(7)`` or ``GF 7``."""
    t = text.replace(" ", "").replace("(", "").replace(")", "")
    if t.upper() == "QQ":
        return QQ
    if t.upper().startswith("GF") and t[2:].isdigit():
        return GF(int(t[2:]))
    raise ValueError(f"unknown field {text!r}")
