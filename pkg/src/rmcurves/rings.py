"""Exact coefficient rings: integers, rationals, and quadratic fields Q(sqrt(d)).

Polynomial code in this package is generic over a small ring handle that
knows how to make constants and divide exactly.  Elements themselves carry
the arithmetic through operator overloading: Python ints for ZZ, Fraction
for QQ, QuadElem for Q(sqrt(d)).  Finite fields live in fields.py and
satisfy the same protocol.
"""

from __future__ import annotations

from fractions import Fraction


class ZZRing:
    """The rational integers."""

    is_field = False
    name = "ZZ"

    zero = 0
    one = 1

    @staticmethod
    def from_int(n: int) -> int:
        return n

    @staticmethod
    def coerce(x) -> int:
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    @staticmethod
    def exact_div(a: int, b: int) -> int:
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"inexact division {a} / {b} in ZZ")
        return q


class QQRing:
    """The rational numbers as Fraction."""

    is_field = True
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def coerce(x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    @staticmethod
    def exact_div(a: Fraction, b: Fraction) -> Fraction:
        return a / b


ZZ = ZZRing()
QQ = QQRing()


class QuadElem:
    """a + b*sqrt(d) with rational a, b; d a fixed squarefree non-square."""

    __slots__ = ("d", "a", "b")

    def __init__(self, d: int, a, b=0):
        self.d = d
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _lift(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise TypeError("mixed quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.d, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.d, -self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(
            self.d,
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadElem":
        return QuadElem(self.d, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inv(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic field")
        return QuadElem(self.d, self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = QuadElem(self.d, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        return hash((self.d, self.a, self.b))

    def __repr__(self):
        if not self.b:
            return repr(self.a)
        return f"({self.a}+{self.b}*sqrt({self.d}))"


class QuadFieldRing:
    """Ring handle for Q(sqrt(d))."""

    is_field = True

    def __init__(self, d: int):
        if d == 0 or d == 1:
            raise ValueError("d must be a non-square")
        self.d = d
        self.name = f"QQ(sqrt({d}))"
        self.zero = QuadElem(d, 0)
        self.one = QuadElem(d, 1)
        self.gen = QuadElem(d, 0, 1)

    def from_int(self, n: int) -> QuadElem:
        return QuadElem(self.d, n)

    def coerce(self, x) -> QuadElem:
        if isinstance(x, QuadElem):
            if x.d != self.d:
                raise TypeError("mixed quadratic fields")
            return x
        if isinstance(x, (int, Fraction)):
            return QuadElem(self.d, x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def exact_div(self, a, b):
        return self.coerce(a) / self.coerce(b)


_quad_cache: dict[int, QuadFieldRing] = {}


def QuadField(d: int) -> QuadFieldRing:
    if d not in _quad_cache:
        _quad_cache[d] = QuadFieldRing(d)
    return _quad_cache[d]


QQi = QuadField(-1)


def rational_isqrt(x: Fraction):
    """Exact square root of a rational, or None if x is not a square."""
    x = Fraction(x)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def squarefree_part(x: Fraction) -> int:
    """Squarefree integer s with x = s * (rational square).  x nonzero."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("squarefree part of zero")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    s = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                s *= d
        d += 1
    return sign * s * n
