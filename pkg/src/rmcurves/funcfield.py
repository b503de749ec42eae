"""Elements of coordinate rings of hyperelliptic and rational curves.

FuncElem is a(x) + y*b(x) reduced modulo y^2 = f(x); FuncFrac divides one
by a polynomial in x only, which is closed under inversion via conjugate
multiplication.  On rational models (P^1) the y-part stays zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveModel
from .poly import RatFunc, UniPoly, poly_gcd


class FuncElem:
    """a(x) + y b(x) on a model with y^2 = f(x) (b = 0 on rational models)."""

    __slots__ = ("model", "a", "b")

    def __init__(self, model: CurveModel, a: UniPoly, b: UniPoly | None = None):
        self.model = model
        self.a = a
        self.b = b if b is not None else UniPoly.zero(a.ring)
        if model.kind == "rational" and not self.b.is_zero():
            raise ValueError("rational models carry no y")

    @property
    def ring(self):
        return self.a.ring

    @staticmethod
    def const(model: CurveModel, c) -> "FuncElem":
        ring = model.ctx
        return FuncElem(model, UniPoly.const(ring, c))

    @staticmethod
    def coord_x(model: CurveModel) -> "FuncElem":
        return FuncElem(model, UniPoly.x(model.ctx))

    @staticmethod
    def coord_y(model: CurveModel) -> "FuncElem":
        ring = model.ctx
        return FuncElem(model, UniPoly.zero(ring), UniPoly.const(ring, ring.one))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def _lift(self, other) -> "FuncElem":
        if isinstance(other, FuncElem):
            if other.model is not self.model:
                raise ValueError("mixed models")
            return other
        if isinstance(other, UniPoly):
            return FuncElem(self.model, other)
        return FuncElem(self.model, UniPoly.const(self.ring, self.ring.coerce(other)))

    def __add__(self, other):
        o = self._lift(other)
        return FuncElem(self.model, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FuncElem(self.model, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        f = self.model.f
        a = self.a * o.a
        if not (self.b.is_zero() or o.b.is_zero()):
            a = a + f * self.b * o.b
        b = self.a * o.b + self.b * o.a
        return FuncElem(self.model, a, b)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FuncElem":
        if n < 0:
            raise ValueError("use FuncFrac for negative powers")
        result = FuncElem.const(self.model, self.ring.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "FuncElem":
        return FuncElem(self.model, self.a, -self.b)

    def norm(self) -> UniPoly:
        """a^2 - f b^2, the product with the hyperelliptic conjugate."""
        if self.b.is_zero():
            return self.a * self.a
        return self.a * self.a - self.model.f * self.b * self.b

    def __eq__(self, other):
        o = self._lift(other)
        return self.a == o.a and self.b == o.b

    def evaluate(self, x0, y0=None):
        v = self.a(x0)
        if not self.b.is_zero():
            if y0 is None:
                raise ValueError("need y-coordinate")
            v = v + y0 * self.b(x0)
        return v

    def __repr__(self):
        if self.b.is_zero():
            return f"({self.a!r})"
        return f"({self.a!r} + y*({self.b!r}))"


class FuncFrac:
    """FuncElem divided by a polynomial in x, gcd-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: FuncElem, den: UniPoly | None = None, reduce: bool = True):
        if den is None:
            den = UniPoly.const(num.ring, num.ring.one)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = _reduce_pair(num, den)
        self.num = num
        self.den = den

    @property
    def model(self):
        return self.num.model

    @property
    def ring(self):
        return self.num.ring

    @staticmethod
    def const(model: CurveModel, c) -> "FuncFrac":
        return FuncFrac(FuncElem.const(model, c))

    @staticmethod
    def from_ratfunc(model: CurveModel, r: RatFunc) -> "FuncFrac":
        return FuncFrac(FuncElem(model, r.num), r.den)

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.den.degree == 0 and self.num.b.is_zero() and self.num.a.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.ring.exact_div(self.num.a[0], self.den[0])

    def _lift(self, other) -> "FuncFrac":
        if isinstance(other, FuncFrac):
            return other
        if isinstance(other, FuncElem):
            return FuncFrac(other)
        if isinstance(other, UniPoly):
            return FuncFrac(FuncElem(self.model, other))
        return FuncFrac.const(self.model, self.ring.coerce(other))

    def __add__(self, other):
        o = self._lift(other)
        return FuncFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FuncFrac(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        return FuncFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "FuncFrac":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero function")
        # 1/(a+yb) = (a-yb)/norm
        n = self.num.norm()
        return FuncFrac(self.num.conj() * self.den, n)

    def __truediv__(self, other):
        return self * self._lift(other).inv()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inv()

    def __pow__(self, n: int) -> "FuncFrac":
        if n < 0:
            return self.inv() ** (-n)
        return FuncFrac(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._lift(other)
        return self.num * o.den == o.num * self.den

    def conj(self) -> "FuncFrac":
        return FuncFrac(self.num.conj(), self.den, reduce=False)

    def norm_ratfunc(self) -> RatFunc:
        return RatFunc(self.num.norm(), self.den * self.den)

    def evaluate(self, x0, y0=None):
        d = self.den(x0)
        if not d:
            raise ZeroDivisionError("pole at evaluation point")
        return self.ring.exact_div(self.num.evaluate(x0, y0), d)

    def compose_scaling(self, cx, cy) -> "FuncFrac":
        """The function (x, y) -> self(cx * x, cy * y)."""
        num = FuncElem(self.model, self.num.a.scale_x(cx), cy * self.num.b.scale_x(cx))
        return FuncFrac(num, self.den.scale_x(cx))

    def as_poly_pair(self):
        """(a, b, den) with self = (a + y b)/den."""
        return self.num.a, self.num.b, self.den

    def __repr__(self):
        if self.den.degree == 0 and self.den[0] == self.ring.one:
            return repr(self.num)
        return f"{self.num!r}/({self.den!r})"


def _reduce_pair(num: FuncElem, den: UniPoly):
    g = poly_gcd(poly_gcd(num.a, num.b) if not num.b.is_zero() else num.a, den)
    if g.degree > 0:
        num = FuncElem(num.model, num.a.exact_div(g), num.b.exact_div(g))
        den = den.exact_div(g)
    ring = num.ring
    c = den.lc() if not den.is_zero() else ring.one
    if c != ring.one and not den.is_zero():
        inv = ring.exact_div(ring.one, c)
        num = FuncElem(num.model, inv * num.a, inv * num.b)
        den = UniPoly(ring, [x * inv for x in den.coeffs])
    return num, den


def pullback(phi: FuncFrac, target: CurveModel, x_expr: RatFunc, y_mult: RatFunc) -> FuncFrac:
    """Pull a function back through (x, y) -> (x_expr(x), y * y_mult(x)).

    The map must send the target curve into phi's curve:
    f_target * y_mult^2 == f_source(x_expr) as rational functions.
    """
    src = phi.model
    if src.kind != "rational":
        lhs = RatFunc(target.f) * y_mult * y_mult
        rhs = RatFunc(src.f).subst(x_expr)
        if lhs != rhs:
            raise ValueError("map does not carry the target curve to the source curve")
    a, b, den = phi.as_poly_pair()
    A = RatFunc(a).subst(x_expr)
    D = RatFunc(den).subst(x_expr)
    out = A / D
    num_a = out.num
    den_all = out.den
    if not b.is_zero():
        B = RatFunc(b).subst(x_expr) * y_mult / D
        # common denominator for the a-part and y-part
        den_all = out.den * B.den
        num_a = out.num * B.den
        num_b = B.num * out.den
        return FuncFrac(FuncElem(target, num_a, num_b), den_all)
    return FuncFrac(FuncElem(target, num_a), den_all)
