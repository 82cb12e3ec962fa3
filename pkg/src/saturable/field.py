"""Exact coefficient fields: the rationals and prime fields."""

from fractions import Fraction
from numbers import Integral, Rational

import gmpy2
from gmpy2 import mpq

MPQ = type(mpq(0))


class RationalField:
    """The field of rational numbers, backed by gmpy2's arbitrary precision mpq."""

    characteristic = 0

    def __call__(self, value):
        if isinstance(value, MPQ):
            return value
        if isinstance(value, str):
            return mpq(value)
        if isinstance(value, (Integral, Fraction)):
            return mpq(value)
        if isinstance(value, Rational):
            return mpq(int(value.numerator), int(value.denominator))
        if isinstance(value, Zp):
            raise TypeError("cannot coerce a prime field element into QQ")
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not supported")
        return mpq(value)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def format(self, c):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class Zp:
    """Residue modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Zp):
            if other.p != self.p:
                raise ValueError("mixing prime fields of different characteristic")
            return other.v
        if isinstance(other, Integral):
            return int(other)
        if isinstance(other, (Rational, MPQ)):
            num, den = int(other.numerator), int(other.denominator)
            return num * pow(den, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Zp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Zp(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Zp(-self.v, self.p)

    def __pow__(self, n):
        if n < 0:
            return Zp(pow(self.v, -1, self.p), self.p) ** (-n)
        return Zp(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v} mod {self.p}"


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p):
        p = int(p)
        if p < 2 or not gmpy2.is_prime(p):
            raise ValueError(f"characteristic {p} is not a prime")
        self.characteristic = p

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, Zp):
            if value.p != p:
                raise ValueError("element of a different prime field")
            return value
        if isinstance(value, str):
            value = mpq(value)
        if isinstance(value, Integral):
            return Zp(int(value), p)
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not supported")
        num, den = int(value.numerator), int(value.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return Zp(num * pow(den, -1, p), p)

    @property
    def zero(self):
        return Zp(0, self.characteristic)

    @property
    def one(self):
        return Zp(1, self.characteristic)

    def format(self, c):
        v = c.v
        # symmetric representative reads better and round-trips through parse
        if v > self.characteristic // 2:
            v -= self.characteristic
        return str(v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


def field_for(characteristic):
    if characteristic == 0:
        return QQ
    return PrimeField(characteristic)
