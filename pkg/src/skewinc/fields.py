"""Exact scalar fields: the rationals and prime fields F_p.

A :class:`Field` works on *raw* canonical values (``Fraction`` for Q, ``int``
in ``range(p)`` for F_p); the rest of the package stores raw values for speed.
:class:`FieldElement` wraps a raw value together with its field for callers
who want operator syntax and field-mismatch checking.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, MixedFields, ValidationError


def is_prime(p: int) -> bool:
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


class Field:
    name = "?"

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return self.name

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def _key(self):
        return ()

    # raw arithmetic, overridden per field
    zero = one = None

    def is_zero(self, a) -> bool:
        return a == self.zero

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def row_axpy(self, row: dict, c, other: dict) -> None:
        """row += c * other, in place, dropping zeros."""
        add, mul, zero = self.add, self.mul, self.zero
        for k, v in other.items():
            w = add(row.get(k, zero), mul(c, v))
            if w == zero:
                row.pop(k, None)
            else:
                row[k] = w


class Rationals(Field):
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("%s element used in %s" % (value.field, self))
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass a string or Fraction")
        return Fraction(value)

    def parse(self, text: str):
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValidationError("not a rational scalar: %r" % text)
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise DivisionByZero("zero denominator in %r" % text)
        return Fraction(int(num), int(den) if den else 1)

    def format(self, a) -> str:
        return str(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def random(self, rng, nonzero=False, bound=5):
        while True:
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
            if v or not nonzero:
                return v

    def elements(self):
        raise ValueError("Q is infinite")


class PrimeField(Field):

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValidationError("%d is not prime" % p)
        if p >= 2 ** 31:
            raise ValidationError("prime too large: %d" % p)
        self.p = p
        self.name = "F%d" % p
        self.zero = 0
        self.one = 1 % p

    def _key(self):
        return (self.p,)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("%s element used in %s" % (value.field, self))
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero("denominator divisible by %d" % self.p)
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, float):
            raise TypeError("floats are not exact")
        return int(value) % self.p

    def parse(self, text: str):
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ValidationError("not an %s residue: %r" % (self.name, text))
        return int(text) % self.p

    def format(self, a) -> str:
        return str(a)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in %s" % self.name)
        return pow(a, -1, self.p)

    def row_axpy(self, row, c, other):
        p = self.p
        for k, v in other.items():
            w = (row.get(k, 0) + c * v) % p
            if w:
                row[k] = w
            else:
                row.pop(k, None)

    def random(self, rng, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.p)

    def elements(self):
        return range(self.p)


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(text: str) -> Field:
    """Parse the textual form ``"Q"`` or ``"F<p>"``."""
    t = text.strip()
    if t == "Q":
        return QQ
    m = re.fullmatch(r"F(\d+)", t)
    if not m:
        raise ValidationError("field must be 'Q' or 'F<p>', got %r" % text)
    return PrimeField(int(m.group(1)))


class FieldElement:
    """A scalar bound to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, b):
        if isinstance(b, FieldElement):
            if b.field != self.field:
                raise MixedFields("%s and %s" % (self.field, b.field))
            return b.value
        return self.field.coerce(b)

    def __add__(self, b):
        return FieldElement(self.field, self.field.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.field, self.field.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return FieldElement(self.field, self.field.sub(self._other(b), self.value))

    def __mul__(self, b):
        return FieldElement(self.field, self.field.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return FieldElement(self.field, self.field.div(self.value, self._other(b)))

    def __rtruediv__(self, b):
        return FieldElement(self.field, self.field.div(self._other(b), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, b):
        if isinstance(b, FieldElement):
            return self.field == b.field and self.value == b.value
        try:
            return self.value == self.field.coerce(b)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != self.field.zero

    def __repr__(self):
        return "%s(%s)" % (self.field.name, self.field.format(self.value))

    def __str__(self):
        return self.field.format(self.value)
