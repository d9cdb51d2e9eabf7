"""Exact scalar arithmetic over prime fields F_p and the rationals.

Both field kinds share one interface: a field object is callable and maps
integers (and, for the rationals, fractions) to canonical :class:`Scalar`
values.  Scalars are immutable and compare structurally.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational


class FieldMismatchError(ValueError):
    """Raised when operands from two different fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common base for :class:`PrimeField` and :class:`RationalField`."""

    kind: str = ""

    def __call__(self, z) -> "Scalar":
        return Scalar(self, self.canonical(z))

    def canonical(self, z):
        raise NotImplementedError

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    # the raw-value hooks used by Scalar
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError


class PrimeField(Field):
    """The prime field F_p.  Values are integers in ``range(p)``."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, Integral) or not is_prime(int(p)):
            raise ValueError(f"modulus {p!r} is not prime")
        self.modulus = int(p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("prime", self.modulus))

    def __repr__(self):
        return f"PrimeField({self.modulus})"

    def __str__(self):
        return f"F_{self.modulus}"

    @property
    def characteristic(self) -> int:
        return self.modulus

    def canonical(self, z):
        if isinstance(z, Integral):
            return int(z) % self.modulus
        if isinstance(z, Rational):
            num = int(z.numerator) % self.modulus
            den = int(z.denominator) % self.modulus
            if den == 0:
                raise ZeroDivisionError(f"denominator of {z} vanishes mod {self.modulus}")
            return num * pow(den, -1, self.modulus) % self.modulus
        raise TypeError(f"cannot map {z!r} into {self}")

    def elements(self):
        return [Scalar(self, v) for v in range(self.modulus)]

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _sub(self, a, b):
        return (a - b) % self.modulus

    def _mul(self, a, b):
        return a * b % self.modulus

    def _neg(self, a):
        return -a % self.modulus

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.modulus - 2, self.modulus)


class RationalField(Field):
    """The rational numbers, values held as reduced :class:`fractions.Fraction`."""

    kind = "rational"
    modulus = None

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return "QQ"

    @property
    def characteristic(self) -> int:
        return 0

    def canonical(self, z):
        if isinstance(z, (Integral, Rational, str)):
            return Fraction(z)
        raise TypeError(f"cannot map {z!r} into {self}")

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class Scalar:
    """An element of a :class:`Field` in canonical form.

    Plain integers are promoted into the scalar's field on arithmetic and
    comparison, so ``a + 1`` and ``a == 0`` work as expected.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (Integral, Rational)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field._sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (Integral, Rational)):
            try:
                return self.value == self.field.canonical(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        if self.field.kind == "prime" or self.value.denominator == 1:
            return int(self.value)
        raise ValueError(f"{self} is not an integer")

    def __repr__(self):
        return f"Scalar({self.field}, {self})"

    def __str__(self):
        return str(self.value)


# functional spellings of the scalar operations


def f_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if not (isinstance(a, Scalar) and isinstance(b, Scalar)):
        raise TypeError("f_arith expects two Scalars")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def f_inv(a: Scalar) -> Scalar:
    return a.inverse()


def f_from_int(field: Field, z: int) -> Scalar:
    return field(z)
