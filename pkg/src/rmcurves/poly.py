"""Dense univariate polynomials over an exact coefficient ring.

UniPoly is generic over the ring handles in rings.py / fields.py.  On top
of it: rational functions (RatFunc), resultants, interpolation, truncated
power-series square roots, Pade approximants, exact polynomial k-th roots,
and factoring over finite fields (squarefree + distinct-degree +
Cantor-Zassenhaus equal-degree splitting).
"""

from __future__ import annotations

from .fields import FieldCtx
from .rng import SplitMix64


class DegenerateSystem(ArithmeticError):
    """Pade linear system is rank-deficient."""


class SeriesNotASquare(ArithmeticError):
    """Leading series coefficient has no square root in the ring."""


class UniPoly:
    """Dense univariate polynomial; coeffs[i] is the x^i coefficient."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        cs = [ring.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(ring) -> "UniPoly":
        return UniPoly(ring, [])

    @staticmethod
    def const(ring, c) -> "UniPoly":
        return UniPoly(ring, [c])

    @staticmethod
    def x(ring) -> "UniPoly":
        return UniPoly(ring, [ring.zero, ring.one])

    @staticmethod
    def from_roots(ring, roots) -> "UniPoly":
        f = UniPoly.const(ring, ring.one)
        for r in roots:
            f = f * UniPoly(ring, [-ring.coerce(r), ring.one])
        return f

    # -- basic structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        c = self.lc()
        if c == self.ring.one:
            return self
        return UniPoly(self.ring, [self.ring.exact_div(a, c) for a in self.coeffs])

    # -- arithmetic ------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        try:
            return UniPoly.const(self.ring, self.ring.coerce(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.ring, [self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return UniPoly.zero(self.ring)
        if (
            len(self.coeffs) + len(o.coeffs) > 48
            and _fast_ctx_kind(self.ring)
        ):
            return _mul_fast(self, o)
        out = [self.ring.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of polynomial")
        result = UniPoly.const(self.ring, self.ring.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly"):
        """Euclidean division; requires lc(other) invertible in the ring."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        r = list(self.coeffs)
        d = other.degree
        if self.degree < d:
            return UniPoly.zero(ring), self
        if len(self.coeffs) > 96 and _fast_ctx_kind(ring) == 1:
            return _divmod_fast(self, other)
        q = [ring.zero] * (self.degree - d + 1)
        lead = other.lc()
        for i in range(self.degree - d, -1, -1):
            if len(r) < i + d + 1:
                continue
            c = r[i + d]
            if not c:
                continue
            c = ring.exact_div(c, lead)
            q[i] = c
            for j, b in enumerate(other.coeffs):
                r[i + j] = r[i + j] - c * b
        return UniPoly(ring, q), UniPoly(ring, r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; x may be a ring element or another UniPoly."""
        if isinstance(x, UniPoly):
            acc = UniPoly.zero(self.ring)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.ring,
            [self.coeffs[i] * self.ring.from_int(i) for i in range(1, len(self.coeffs))],
        )

    def reverse(self, n: int | None = None) -> "UniPoly":
        """x^n * f(1/x) with n defaulting to deg f."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal order below degree")
        cs = list(self.coeffs) + [self.ring.zero] * (n + 1 - len(self.coeffs))
        return UniPoly(self.ring, cs[::-1])

    def scale_x(self, c) -> "UniPoly":
        """f(c*x)."""
        c = self.ring.coerce(c)
        out, pw = [], self.ring.one
        for a in self.coeffs:
            out.append(a * pw)
            pw = pw * c
        return UniPoly(self.ring, out)

    def shift_x(self, c) -> "UniPoly":
        """f(x + c)."""
        x_plus_c = UniPoly(self.ring, [self.ring.coerce(c), self.ring.one])
        return self(x_plus_c)

    def map_coeffs(self, func, new_ring) -> "UniPoly":
        return UniPoly(new_ring, [func(c) for c in self.coeffs])

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


# -- gcd / resultants ----------------------------------------------------------


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field."""
    if (
        max(len(a.coeffs), len(b.coeffs)) > 96
        and _fast_ctx_kind(a.ring) == 1
        and not a.is_zero()
        and not b.is_zero()
    ):
        return _poly_gcd_fast(a, b)
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_xgcd(a: UniPoly, b: UniPoly):
    """(g, s, t) with g = s*a + t*b, g monic, over a field."""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = UniPoly.const(ring, ring.one), UniPoly.zero(ring)
    t0, t1 = UniPoly.zero(ring), UniPoly.const(ring, ring.one)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = r0.lc()
    inv = ring.exact_div(ring.one, c)
    return (
        UniPoly(ring, [x * inv for x in r0.coeffs]),
        UniPoly(ring, [x * inv for x in s0.coeffs]),
        UniPoly(ring, [x * inv for x in t0.coeffs]),
    )


def resultant_univ(f: UniPoly, g: UniPoly):
    """Resultant of two polynomials over a field, by the Euclidean PRS."""
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return ring.zero
    res = ring.one
    sign = 1
    while g.degree > 0:
        r = f % g
        if r.is_zero():
            return ring.zero
        if (f.degree * g.degree) % 2:
            sign = -sign
        res = res * g.lc() ** (f.degree - r.degree)
        f, g = g, r
    res = res * g.lc() ** f.degree
    if sign < 0:
        res = -res
    return res


def modpow_poly(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    result = UniPoly.const(base.ring, base.ring.one)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


# -- interpolation ---------------------------------------------------------------


def interpolate(ring, points) -> UniPoly:
    """Newton divided-difference interpolation through (x_i, y_i) over a field."""
    xs = [ring.coerce(x) for x, _ in points]
    ys = [ring.coerce(y) for _, y in points]
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = ring.exact_div(coef[i] - coef[i - 1], xs[i] - xs[i - j])
    poly = UniPoly.zero(ring)
    for i in range(n - 1, -1, -1):
        poly = poly * UniPoly(ring, [-xs[i], ring.one]) + coef[i]
    return poly


# -- truncated power series ------------------------------------------------------


def series_mul(a: list, b: list, n: int, ring) -> list:
    out = [ring.zero] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[: n - i]):
                out[i + j] = out[i + j] + ai * bj
    return out


def series_sqrt(c: list, n: int, ring, sqrt_const) -> list:
    """s with s^2 = c + O(x^n); sqrt_const(c0) supplies the constant root."""
    if not c:
        raise SeriesNotASquare("zero series")
    r0 = sqrt_const(c[0])
    if r0 is None:
        raise SeriesNotASquare(f"constant term {c[0]!r} is not a square")
    s = [r0] + [ring.zero] * (n - 1)
    inv2r0 = ring.exact_div(ring.one, r0 + r0)
    for k in range(1, n):
        acc = c[k] if k < len(c) else ring.zero
        for i in range(1, k):
            acc = acc - s[i] * s[k - i]
        s[k] = acc * inv2r0
    return s


def pade_sqrt(f: UniPoly, L: int, M: int, sqrt_const=None):
    """Pade (L, M) approximant of sqrt(x^(2d) f(1/x)), pulled back to (P, Q).

    Returns (P, Q) of degrees <= L, <= M with P^2 - f Q^2 of low degree; Q is
    normalized monic.  The series is matched through order L + M, using
    truncation order 2L + 2.
    """
    ring = f.ring
    if f.degree % 2:
        raise ValueError("pade_sqrt needs even degree")
    if sqrt_const is None:
        sqrt_const = _default_sqrt_const(ring)
    order = 2 * L + 2
    rev = f.reverse().coeffs
    s = series_sqrt(list(rev), order, ring, sqrt_const)
    # find q of degree <= M with coefficients L+1 .. L+M of q*s all zero
    ncols = M + 1
    rows = []
    for k in range(L + 1, L + M + 1):
        rows.append([s[k - j] if 0 <= k - j < order else ring.zero for j in range(ncols)])
    kern = _kernel(rows, ncols, ring)
    if len(kern) != 1:
        raise DegenerateSystem(f"Pade kernel dimension {len(kern)}")
    qc = kern[0]
    q_low = UniPoly(ring, qc)
    p_series = series_mul(qc, s, L + 1, ring)
    p_low = UniPoly(ring, p_series)
    P = p_low.reverse(L)
    Q = q_low.reverse(M)
    lead = Q.lc()
    if lead and lead != ring.one:
        inv = ring.exact_div(ring.one, lead)
        P = UniPoly(ring, [c * inv for c in P.coeffs])
        Q = UniPoly(ring, [c * inv for c in Q.coeffs])
    return P, Q


def _default_sqrt_const(ring):
    from fractions import Fraction

    from .rings import QuadElem, rational_isqrt

    if isinstance(ring, FieldCtx):
        return lambda c: ring.sqrt(c)

    def sq(c):
        if isinstance(c, Fraction):
            return rational_isqrt(c)
        if isinstance(c, QuadElem):
            if not c.b:
                r = rational_isqrt(c.a)
                if r is not None:
                    return QuadElem(c.d, r)
                r = rational_isqrt(c.a / c.d)
                if r is not None:
                    return QuadElem(c.d, 0, r)
            return None
        if isinstance(c, int):
            return rational_isqrt(Fraction(c))
        return None

    return sq


def _kernel(rows, ncols, ring):
    """Kernel basis of a matrix over a field (list-of-rows)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    pivots = {}
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = ring.exact_div(ring.one, mat[r][c])
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [ring.zero] * ncols
        vec[fc] = ring.one
        for c, pr in pivots.items():
            vec[c] = -mat[pr][fc]
        basis.append(vec)
    return basis


def poly_nth_root(f: UniPoly, n: int) -> UniPoly | None:
    """Exact g with g^n = f (f monic of degree divisible by n), else None."""
    if f.is_zero() or f.degree % n:
        return None
    ring = f.ring
    if f.lc() != ring.one:
        return None
    m = f.degree // n
    g = UniPoly(ring, [ring.zero] * m + [ring.one])
    n_inv_num = ring.from_int(n)
    for j in range(1, m + 1):
        cur = g**n
        target = f[n * m - j] - cur[n * m - j]
        coeff = ring.exact_div(target, n_inv_num)
        g = g + UniPoly(ring, [ring.zero] * (m - j) + [coeff])
    if g**n == f:
        return g
    return None


# -- rational functions ----------------------------------------------------------


class RatFunc:
    """Fraction of UniPoly over a field, kept gcd-reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None, reduce: bool = True):
        ring = num.ring
        if den is None:
            den = UniPoly.const(ring, ring.one)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = den.lc()
            if c != ring.one:
                inv = ring.exact_div(ring.one, c)
                num = UniPoly(ring, [a * inv for a in num.coeffs])
                den = UniPoly(ring, [a * inv for a in den.coeffs])
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @staticmethod
    def const(ring, c) -> "RatFunc":
        return RatFunc(UniPoly.const(ring, c))

    @staticmethod
    def from_poly(p: UniPoly) -> "RatFunc":
        return RatFunc(p)

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc(other)
        try:
            return RatFunc.const(self.ring, self.ring.coerce(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

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
        return RatFunc(self.num**n, self.den**n, reduce=False)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __call__(self, x):
        num = self.num(x)
        den = self.den(x)
        return self.ring.exact_div(num, den) if hasattr(self.ring, "exact_div") else num / den

    def subst(self, g: "RatFunc") -> "RatFunc":
        """Composition self(g(x)) for rational g."""
        ring = self.ring
        n = max(self.num.degree, self.den.degree)
        num = UniPoly.zero(ring)
        den = UniPoly.zero(ring)
        gn, gd = g.num, g.den
        pw_n = [UniPoly.const(ring, ring.one)]
        pw_d = [UniPoly.const(ring, ring.one)]
        for i in range(n):
            pw_n.append(pw_n[-1] * gn)
            pw_d.append(pw_d[-1] * gd)
        for i in range(n + 1):
            if i <= self.num.degree and self.num[i]:
                num = num + self.num[i] * pw_n[i] * pw_d[n - i]
            if i <= self.den.degree and self.den[i]:
                den = den + self.den[i] * pw_n[i] * pw_d[n - i]
        return RatFunc(num, den)

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


# -- factoring over finite fields --------------------------------------------------


def _frobenius_pth_root(f: UniPoly) -> UniPoly:
    """g with g(x)^p = f(x^p) pattern inverted: f must have only x^(p*i) terms."""
    ctx: FieldCtx = f.ring
    p = ctx.p
    out = []
    for i in range(0, f.degree + 1, p):
        c = f[i]
        # p-th root of a coefficient in F_{p^k}: c^(p^(k-1))
        out.append(c ** (p ** (ctx.k - 1)))
    return UniPoly(ctx, out)


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """[(g_i, e_i)] with f = lc * prod g_i^e_i, g_i squarefree monic, over F_q."""
    ctx: FieldCtx = f.ring
    p = ctx.p
    f = f.monic()
    out: list[tuple[UniPoly, int]] = []

    def recurse(f: UniPoly, mult: int):
        if f.degree < 1:
            return
        df = f.derivative()
        if df.is_zero():
            root = _frobenius_pth_root(f)
            recurse(root, mult * p)
            return
        c = poly_gcd(f, df)
        w = f.exact_div(c)
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            fac = w.exact_div(y)
            if fac.degree > 0:
                out.append((fac.monic(), i * mult))
            w = y
            c = c.exact_div(y)
            i += 1
        if c.degree > 0:
            root = _frobenius_pth_root(c)
            recurse(root, mult * p)

    recurse(f, 1)
    return out


def _equal_degree_split(f: UniPoly, d: int, rng: SplitMix64) -> list[UniPoly]:
    """Split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus)."""
    ctx: FieldCtx = f.ring
    if f.degree == d:
        return [f]
    q = ctx.q
    while True:
        a = UniPoly(ctx, [ctx.element_by_index(rng.below(q)) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = poly_gcd(a, f)
        if 0 < g.degree < f.degree:
            pass
        elif q % 2 == 1:
            b = modpow_poly(a, (q**d - 1) // 2, f)
            g = poly_gcd(b - UniPoly.const(ctx, ctx.one), f)
        else:
            # char 2: trace map
            b = a
            t = a
            for _ in range(d * ctx.k - 1):
                t = (t * t) % f
                b = b + t
            g = poly_gcd(b, f)
        if 0 < g.degree < f.degree:
            left = _equal_degree_split(g.monic(), d, rng)
            right = _equal_degree_split(f.exact_div(g).monic(), d, rng)
            return left + right


def factor_univariate(f: UniPoly, seed: int = 1) -> list[tuple[UniPoly, int]]:
    """Irreducible factorization over F_q: [(factor, multiplicity)], monic factors.

    The leading unit is dropped; multiplying the factors back recovers f / lc(f).
    """
    ctx: FieldCtx = f.ring
    if f.is_zero():
        raise ValueError("factor of zero polynomial")
    rng = SplitMix64(seed)
    result: list[tuple[UniPoly, int]] = []
    for g, e in squarefree_decomposition(f):
        # distinct-degree on squarefree g, then equal-degree splitting
        h = UniPoly.x(ctx)
        rest = g
        d = 0
        while rest.degree >= 2 * (d + 1):
            d += 1
            h = modpow_poly(h, ctx.q, rest)
            part = poly_gcd(h - UniPoly.x(ctx), rest)
            if part.degree > 0:
                for irr in _equal_degree_split(part.monic(), d, rng):
                    result.append((irr.monic(), e))
                rest = rest.exact_div(part)
                h = h % rest
        if rest.degree > 0:
            result.append((rest.monic(), e))
    result.sort(key=lambda fe: (fe[0].degree, tuple(c.coeffs[::-1] for c in fe[0].coeffs)))
    return result


def is_irreducible_poly(f: UniPoly) -> bool:
    """Irreducibility over the base finite field (Frobenius test)."""
    ctx: FieldCtx = f.ring
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    x = UniPoly.x(ctx)
    xq = modpow_poly(x, ctx.q**d, f)
    if xq != x % f:
        return False
    from .fields import _factor_int

    for r in _factor_int(d):
        xe = modpow_poly(x, ctx.q ** (d // r), f)
        if poly_gcd(xe - x, f).degree > 0:
            return False
    return True


def count_roots(f: UniPoly) -> int:
    """Number of distinct roots of f in its base field F_q."""
    ctx: FieldCtx = f.ring
    if f.is_zero():
        raise ValueError("count_roots of zero polynomial")
    if f.degree == 0:
        return 0
    xq = modpow_poly(UniPoly.x(ctx), ctx.q, f)
    g = poly_gcd(xq - UniPoly.x(ctx), f)
    return g.degree


def roots_in_field(f: UniPoly) -> list:
    """Distinct roots of f in F_q, sorted by element index."""
    ctx: FieldCtx = f.ring
    if f.degree == 0:
        return []
    xq = modpow_poly(UniPoly.x(ctx), ctx.q, f)
    g = poly_gcd(xq - UniPoly.x(ctx), f)
    if g.degree == 0:
        return []
    rng = SplitMix64(7)
    linears = _equal_degree_split(g.monic(), 1, rng)
    rts = [-lin[0] for lin in linears]
    rts.sort(key=lambda r: r.coeffs[::-1])
    return rts


# -- numpy fast paths for dense arithmetic over small finite fields ---------------


def _fast_ctx_kind(ring):
    """1 for prime fields, 2 for degree-2 extensions, 0 otherwise."""
    if isinstance(ring, FieldCtx) and ring.p < (1 << 21):
        if ring.k == 1:
            return 1
        if ring.k == 2:
            return 2
    return 0


def _make_elem(ring, coeffs):
    from .fields import FieldElem

    return FieldElem(ring, coeffs)


def _mul_fast(a: "UniPoly", b: "UniPoly") -> "UniPoly":
    import numpy as np

    ring: FieldCtx = a.ring
    p = ring.p
    kind = _fast_ctx_kind(ring)
    if kind == 1:
        va = np.array([c.coeffs[0] for c in a.coeffs], dtype=np.int64)
        vb = np.array([c.coeffs[0] for c in b.coeffs], dtype=np.int64)
        prod = np.convolve(va, vb) % p
        return UniPoly(ring, [_make_elem(ring, (int(c),)) for c in prod])
    # k == 2 with x^2 = r0 + r1 x
    r0, r1 = ring._red
    a0 = np.array([c.coeffs[0] for c in a.coeffs], dtype=np.int64)
    a1 = np.array([c.coeffs[1] for c in a.coeffs], dtype=np.int64)
    b0 = np.array([c.coeffs[0] for c in b.coeffs], dtype=np.int64)
    b1 = np.array([c.coeffs[1] for c in b.coeffs], dtype=np.int64)
    c00 = np.convolve(a0, b0) % p
    c11 = np.convolve(a1, b1) % p
    c01 = (np.convolve(a0, b1) + np.convolve(a1, b0)) % p
    out0 = (c00 + r0 * c11) % p
    out1 = (c01 + r1 * c11) % p
    return UniPoly(ring, [_make_elem(ring, (int(x), int(y))) for x, y in zip(out0, out1)])


def _divmod_fast(a: "UniPoly", b: "UniPoly"):
    """Euclidean division via int arrays (prime fields only)."""
    import numpy as np

    ring: FieldCtx = a.ring
    p = ring.p
    ra = np.array([c.coeffs[0] for c in a.coeffs], dtype=np.int64)
    rb = [c.coeffs[0] for c in b.coeffs]
    db = len(rb) - 1
    inv = pow(rb[-1], p - 2, p)
    nb = np.array(rb[:-1], dtype=np.int64)
    q = np.zeros(len(ra) - db, dtype=np.int64)
    for i in range(len(ra) - db - 1, -1, -1):
        c = int(ra[i + db]) % p
        if c:
            c = c * inv % p
            q[i] = c
            if db:
                ra[i : i + db] -= c * nb
                ra[i : i + db] %= p
            ra[i + db] = 0
    rem = [_make_elem(ring, (int(x % p),)) for x in ra[:db]]
    qq = [_make_elem(ring, (int(x),)) for x in q]
    return UniPoly(ring, qq), UniPoly(ring, rem)


def _poly_gcd_fast(a: "UniPoly", b: "UniPoly"):
    """Monic gcd via int-array remainder loop (prime fields)."""
    import numpy as np

    ring: FieldCtx = a.ring
    p = ring.p
    va = np.array([c.coeffs[0] for c in a.coeffs], dtype=np.int64)
    vb = np.array([c.coeffs[0] for c in b.coeffs], dtype=np.int64)

    def trim(v):
        n = len(v)
        while n > 0 and v[n - 1] == 0:
            n -= 1
        return v[:n]

    va, vb = trim(va), trim(vb)
    while len(vb):
        db = len(vb) - 1
        inv = pow(int(vb[-1]), p - 2, p)
        nb = vb[:-1]
        ra = va.copy()
        for i in range(len(ra) - db - 1, -1, -1):
            c = int(ra[i + db]) % p
            if c:
                c = c * inv % p
                if db:
                    ra[i : i + db] -= c * nb
                    ra[i : i + db] %= p
                ra[i + db] = 0
        va, vb = vb, trim(ra[:db] if db else ra[:0])
    if not len(va):
        return UniPoly.zero(ring)
    inv = pow(int(va[-1]), p - 2, p)
    va = (va * inv) % p
    return UniPoly(ring, [_make_elem(ring, (int(c),)) for c in va])
