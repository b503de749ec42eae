"""Curve models, elliptic group law, and genus-2 Jacobian arithmetic.

Mumford pairs (u, v) with Cantor composition implement the group law on
odd-degree genus-2 models.  Even-degree sextic models are handled through
an explicit birational change moving a rational Weierstrass point to
infinity; automorphisms act on Mumford pairs algebraically and class
corrections for the moved base point are applied explicitly, so no point
coordinates ever leave the base field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import FieldCtx
from .poly import UniPoly, interpolate, poly_gcd, poly_xgcd
from .rng import SplitMix64
from . import zeta as zeta_mod


class ModelMismatch(TypeError):
    """Operands attached to different curve models."""


class PointNotOnCurve(ValueError):
    pass


class EvenModelUnsupported(TypeError):
    """Mumford arithmetic needs an odd-degree model; transform first."""


class NoTorsion(ValueError):
    """l does not divide the Jacobian order."""


class NoStableSubgroup(RuntimeError):
    """No order-l subgroup stable under the automorphism was found."""


class AutomorphismMismatch(ValueError):
    """Map does not preserve the curve equation."""


class NoRationalPoint(RuntimeError):
    """No rational Weierstrass point available for the model change."""


@dataclass(frozen=True)
class CurveModel:
    """Plane or hyperelliptic curve model over an exact ring.

    kind: 'rational' (P^1, coordinate x), 'elliptic' (y^2 = monic cubic),
    'hyper5'/'hyper6' (y^2 = f, deg 5/6), 'plane' (F(u,v) = 0, integer
    coefficient dict).
    """

    kind: str
    ctx: object
    f: UniPoly | None = None
    plane_terms: tuple | None = None  # tuple of ((i, j), int) pairs

    def __post_init__(self):
        if self.kind in ("elliptic", "hyper5", "hyper6"):
            deg = {"elliptic": 3, "hyper5": 5, "hyper6": 6}[self.kind]
            if self.f is None or self.f.degree != deg:
                raise ValueError(f"{self.kind} model needs deg-{deg} f")
            if self.kind in ("elliptic", "hyper5") and self.f.lc() != self.ctx.one:
                raise ValueError("odd-degree models are kept monic")
            if poly_gcd(self.f, self.f.derivative()).degree > 0:
                raise ValueError("f must be squarefree (nonsingular affine model)")

    @property
    def genus(self) -> int:
        if self.kind == "elliptic":
            return 1
        if self.kind in ("hyper5", "hyper6"):
            return 2
        if self.kind == "plane":
            d = max(i + j for (i, j), _ in self.plane_terms)
            return (d - 1) * (d - 2) // 2
        return 0

    def plane_dict(self) -> dict:
        return dict(self.plane_terms)

    def f_int_coeffs(self) -> list[int]:
        return [c.to_int() for c in self.f.coeffs]


def hyper_model(ctx, coeffs) -> CurveModel:
    f = UniPoly(ctx, [ctx.coerce(c) for c in coeffs])
    kind = {3: "elliptic", 5: "hyper5", 6: "hyper6"}.get(f.degree)
    if kind is None:
        raise ValueError(f"unsupported degree {f.degree}")
    return CurveModel(kind, ctx, f)


def plane_model(ctx, terms: dict) -> CurveModel:
    return CurveModel("plane", ctx, None, tuple(sorted((tuple(e), int(c)) for e, c in terms.items())))


# -- elliptic curves ------------------------------------------------------------------


EllPoint = tuple | None  # (x, y) or None for the point at infinity


def on_curve(model: CurveModel, P: EllPoint) -> bool:
    if P is None:
        return True
    x, y = P
    return y * y == model.f(x)


def ell_neg(model: CurveModel, P: EllPoint) -> EllPoint:
    return None if P is None else (P[0], -P[1])


def ell_add(model: CurveModel, P: EllPoint, Q: EllPoint) -> EllPoint:
    """Chord-tangent addition on y^2 = x^3 + a2 x^2 + a4 x + a6."""
    if model.kind != "elliptic":
        raise ModelMismatch("ell_add needs an elliptic model")
    if P is None:
        return Q
    if Q is None:
        return P
    if not on_curve(model, P) or not on_curve(model, Q):
        raise PointNotOnCurve(f"{P} / {Q}")
    ctx = model.ctx
    a2, a4 = model.f[2], model.f[1]
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return None
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4) / (y1 + y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - a2 - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def ell_mul(model: CurveModel, m: int, P: EllPoint) -> EllPoint:
    if m < 0:
        return ell_mul(model, -m, ell_neg(model, P))
    R: EllPoint = None
    base = P
    while m:
        if m & 1:
            R = ell_add(model, R, base)
        base = ell_add(model, base, base)
        m >>= 1
    return R


def ell_order(model: CurveModel) -> int:
    """#E(F_p) by quadratic-character enumeration, with a Hasse-bound check."""
    ctx: FieldCtx = model.ctx
    if not isinstance(ctx, FieldCtx) or ctx.k != 1:
        raise ModelMismatch("ell_order needs a prime-field model")
    n = zeta_mod.count_points_hyper(model.f_int_coeffs(), ctx.p, 1)
    import math

    if abs(n - ctx.p - 1) > 2 * math.isqrt(ctx.p) + 1:
        raise ArithmeticError("Hasse bound violated (count bug)")
    return n


def ell_random_point(model: CurveModel, rng: SplitMix64) -> EllPoint:
    ctx: FieldCtx = model.ctx
    while True:
        x = ctx.element_by_index(rng.below(ctx.q))
        v = model.f(x)
        y = ctx.sqrt(v)
        if y is not None:
            if y and rng.below(2):
                y = -y
            return (x, y)


# -- genus-2 Mumford divisors ----------------------------------------------------------


@dataclass(frozen=True)
class JacDivisor:
    """Reduced Mumford pair on an odd-degree genus-2 model."""

    u: UniPoly  # monic, deg <= 2
    v: UniPoly  # deg < deg u

    def is_identity(self) -> bool:
        return self.u.degree == 0

    def __repr__(self):
        return f"Jac[{self.u!r}, {self.v!r}]"


def jac_identity(model: CurveModel) -> JacDivisor:
    ctx = model.ctx
    return JacDivisor(UniPoly.const(ctx, ctx.one), UniPoly.zero(ctx))


def jac_check(model: CurveModel, D: JacDivisor) -> bool:
    if D.u.degree > 2 or D.u.lc() != model.ctx.one:
        return False
    return ((D.v * D.v - model.f) % D.u).is_zero()


def make_divisor(model: CurveModel, u: UniPoly, v: UniPoly) -> JacDivisor:
    _require_odd(model)
    u = u.monic()
    v = v % u
    D = JacDivisor(u, v)
    if not jac_check(model, D):
        raise ValueError("not a valid Mumford pair (u does not divide v^2 - f)")
    return D


def _require_odd(model: CurveModel):
    if model.kind != "hyper5":
        if model.kind == "hyper6":
            raise EvenModelUnsupported("transform the sextic model to odd degree first")
        raise ModelMismatch("genus-2 arithmetic needs a hyper5 model")


def jac_neg(model: CurveModel, D: JacDivisor) -> JacDivisor:
    return JacDivisor(D.u, (-D.v) % D.u)


def cantor_add(model: CurveModel, D1: JacDivisor, D2: JacDivisor) -> JacDivisor:
    """Cantor composition + reduction on y^2 = f, deg f = 5."""
    _require_odd(model)
    ctx = model.ctx
    f = model.f
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    d1, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(d1, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v = num.exact_div(d) % u
    # reduction
    while u.degree > 2:
        u = (f - v * v).exact_div(u)
        u = u.monic()
        v = (-v) % u
    return JacDivisor(u.monic(), v % u.monic())


def jac_mul(model: CurveModel, m: int, D: JacDivisor) -> JacDivisor:
    if m < 0:
        return jac_mul(model, -m, jac_neg(model, D))
    R = jac_identity(model)
    base = D
    while m:
        if m & 1:
            R = cantor_add(model, R, base)
        base = cantor_add(model, base, base)
        m >>= 1
    return R


def jac_order(model: CurveModel) -> int:
    """#Jac(F_p) for a genus-2 model over a prime field, from N_1 and N_2."""
    ctx = model.ctx
    if not isinstance(ctx, FieldCtx) or ctx.k != 1:
        raise ModelMismatch("jac_order needs a prime-field model")
    if model.kind not in ("hyper5", "hyper6"):
        raise ModelMismatch("jac_order needs a genus-2 model")
    zd = zeta_mod.zeta_data_hyper(model.f_int_coeffs(), ctx.p)
    return zd.jac_order


def random_divisor(model: CurveModel, rng: SplitMix64) -> JacDivisor:
    """Random reduced divisor: u = (x - r1)(x - r2) with v lifted through sqrt."""
    _require_odd(model)
    ctx: FieldCtx = model.ctx
    while True:
        r1 = ctx.element_by_index(rng.below(ctx.q))
        r2 = ctx.element_by_index(rng.below(ctx.q))
        if r1 == r2:
            continue
        y1 = ctx.sqrt(model.f(r1))
        y2 = ctx.sqrt(model.f(r2))
        if y1 is None or y2 is None:
            continue
        if y1 and rng.below(2):
            y1 = -y1
        if y2 and rng.below(2):
            y2 = -y2
        u = UniPoly.from_roots(ctx, [r1, r2])
        v = interpolate(ctx, [(r1, y1), (r2, y2)])
        return make_divisor(model, u, v)


def torsion_search(model: CurveModel, l: int, seed: int) -> JacDivisor:
    """A divisor of order exactly l (l | #Jac), deterministic in the seed."""
    n = jac_order(model)
    if n % l:
        raise NoTorsion(f"{l} does not divide #Jac = {n}")
    m = n
    while m % l == 0:
        m //= l
    rng = SplitMix64(seed)
    for _ in range(400):
        Q = random_divisor(model, rng)
        P = jac_mul(model, m, Q)
        if P.is_identity():
            continue
        while True:
            lP = jac_mul(model, l, P)
            if lP.is_identity():
                return P
            P = lP
    raise NoTorsion("no order-l point found (is the order correct?)")


# -- automorphisms ----------------------------------------------------------------------


@dataclass(frozen=True)
class CurveAutomorphism:
    """(x, y) -> (cx * x, cy * y) of finite order m preserving y^2 = f(x)."""

    cx: object
    cy: object
    order: int

    def inverse(self) -> "CurveAutomorphism":
        return CurveAutomorphism(1 / self.cx, 1 / self.cy, self.order)


def check_automorphism(model: CurveModel, aut: CurveAutomorphism) -> bool:
    """f(cx * x) == cy^2 * f(x), and the m-th iterate is the identity."""
    scaled = model.f.scale_x(aut.cx)
    if scaled != aut.cy * aut.cy * model.f:
        return False
    cx_m = aut.cx**aut.order
    cy_m = aut.cy**aut.order
    one = model.ctx.one
    return cx_m == one and cy_m == one


def apply_automorphism(model: CurveModel, aut: CurveAutomorphism, D: JacDivisor) -> JacDivisor:
    """Pointwise action on a Mumford pair: u(x/cx) monic-normalized, cy * v(x/cx)."""
    if not check_automorphism(model, aut):
        raise AutomorphismMismatch("map does not preserve the model")
    cxi = 1 / aut.cx
    u2 = D.u.scale_x(cxi).monic()
    v2 = (aut.cy * D.v.scale_x(cxi)) % u2
    return JacDivisor(u2, v2)


def automorphism_eigenvalue(model: CurveModel, aut: CurveAutomorphism, D: JacDivisor, l: int):
    """a with aut(D) = a * D in the Jacobian, or None."""
    A = apply_automorphism(model, aut, D)
    P = jac_identity(model)
    for a in range(1, l):
        P = cantor_add(model, P, D)
        if P == A:
            return a
    return None


def action_eigenvalue(model: CurveModel, action, D: JacDivisor, l: int):
    """a with action(D) = a * D in the Jacobian, or None."""
    A = action(D)
    P = jac_identity(model)
    for a in range(1, l):
        P = cantor_add(model, P, D)
        if P == A:
            return a
    return None


def stable_subgroup_search(
    model: CurveModel,
    aut: CurveAutomorphism | None,
    l: int,
    seed: int,
    required_order: int | None = None,
    tries: int = 25,
    action=None,
    action_order: int | None = None,
):
    """(P, a) with P of order l and action(P) = a P, a of the required order mod l.

    The action defaults to the pointwise automorphism.  Samples l-torsion
    and projects onto eigenlines: for a candidate eigenvalue a, the sum
    a^(-i) action^i(P) over i < m lands in the a-eigenspace.
    """
    from .cyclo import order_mod

    if action is None:
        action = lambda D: apply_automorphism(model, aut, D)  # noqa: E731
        n_aut = aut.order
    else:
        n_aut = action_order if action_order is not None else (aut.order if aut else 1)
    candidates = [
        a
        for a in range(2, l)
        if pow(a, n_aut, l) == 1
        and (required_order is None or order_mod(a, l) == required_order)
    ]
    rng = SplitMix64(seed)
    for attempt in range(tries):
        try:
            P = torsion_search(model, l, rng.next_u64())
            a0 = action_eigenvalue(model, action, P, l)
            if a0 is not None and (required_order is None or order_mod(a0, l) == required_order):
                return P, a0
            for a in candidates:
                ainv = pow(a, l - 2, l)
                acc = jac_identity(model)
                img = P
                coef = 1
                for _ in range(n_aut):
                    acc = cantor_add(model, acc, jac_mul(model, coef, img))
                    img = action(img)
                    coef = coef * ainv % l
                if not acc.is_identity():
                    got = action_eigenvalue(model, action, acc, l)
                    if got == a:
                        return acc, a
        except ValueError:
            continue  # degenerate transport configuration; resample
    raise NoStableSubgroup(f"no stable order-{l} line under the automorphism")


# -- even-degree models: move a Weierstrass point to infinity ---------------------------


@dataclass
class OddTransform:
    """Birational data for y^2 = f6(x) -> Y^2 = f5(X) with X = c1/(x - x0)."""

    even: CurveModel
    odd: CurveModel
    x0: object  # rational Weierstrass root of f6
    c1: object  # f6'(x0), the leading coefficient before rescaling

    def to_odd_point(self, pt):
        x, y = pt
        ctx = self.even.ctx
        d = x - self.x0
        if not d:
            raise ValueError("Weierstrass base point has no affine odd image")
        return (self.c1 / d, self.c1**2 * y / d**3)

    def to_even_point(self, pt):
        X, Y = pt
        if not X:
            raise ValueError("odd point above X=0 maps to even infinity")
        return (self.x0 + self.c1 / X, Y * self.c1 / X**3)


def even_to_odd_transform(model: CurveModel, x0=None) -> OddTransform:
    """Move a rational Weierstrass point of a sextic model to infinity.

    Raises NoRationalPoint when f6 has no root in the base field and no x0
    is supplied.
    """
    if model.kind != "hyper6":
        raise ModelMismatch("even_to_odd_transform needs a hyper6 model")
    ctx = model.ctx
    if x0 is None:
        from .poly import roots_in_field

        rts = roots_in_field(model.f)
        if not rts:
            raise NoRationalPoint("sextic has no rational Weierstrass point")
        x0 = rts[0]
    else:
        x0 = ctx.coerce(x0)
        if model.f(x0):
            raise ValueError("x0 is not a root of f")
    shifted = model.f.shift_x(x0)  # f(x0 + u) = c1 u + ... + c6 u^6
    c = [shifted[k] for k in range(7)]
    c1 = c[1]
    # Y^2 = sum_k c_k c1^(k-2) W^(6-k), monic of degree 5
    coeffs = [ctx.zero] * 6
    inv_c1 = 1 / c1
    for k in range(1, 7):
        val = c[k] * c1 ** (k - 2) if k >= 2 else c[k] * inv_c1
        coeffs[6 - k] = val
    f5 = UniPoly(ctx, coeffs)
    odd = CurveModel("hyper5", ctx, f5)
    return OddTransform(model, odd, x0, c1)


def transport_divisor_to_even(tr: OddTransform, D: JacDivisor):
    """Mumford pair on the odd model -> point-set Mumford pair on the sextic.

    Returns (u_e, v_e, d) with d the degree; raises on degenerate support
    (a point above X = 0, whose even image is at infinity).
    """
    ctx = tr.even.ctx
    U, V = D.u, D.v
    d = U.degree
    if d == 0:
        return (UniPoly.const(ctx, ctx.one), UniPoly.zero(ctx), 0)
    if not U[0]:
        raise ValueError("divisor meets X = 0 (degenerate for transport)")
    x0, c1 = tr.x0, tr.c1
    if d == 1:
        w0 = -U[0]
        x_img = x0 + c1 / w0
        y_img = V(w0) * c1 / w0**3
        ue = UniPoly(ctx, [-x_img, ctx.one])
        ve = UniPoly.const(ctx, y_img)
        return (ue, ve, 1)
    # d == 2: u_e proportional to (x-x0)^2 U(c1/(x-x0))
    U1, U0 = U[1], U[0]
    a2 = U0
    a1 = c1 * U1 - 2 * x0 * U0
    a0 = c1 * c1 - c1 * U1 * x0 + U0 * x0 * x0
    ue = UniPoly(ctx, [a0, a1, a2]).monic()
    # v_e(x) = V(c1/(x-x0)) * (x-x0)^3 / c1^2 mod ue ; (x-x0) invertible mod ue
    xm = UniPoly(ctx, [-x0, ctx.one])
    inv_xm = _inv_mod(xm, ue)
    W_of_x = (c1 * inv_xm) % ue  # image of the odd coordinate X
    val = UniPoly.zero(ctx)
    for i in range(V.degree, -1, -1):
        val = (val * W_of_x + V[i]) % ue
    xm3 = (xm * xm * xm) % ue
    ve = (val * xm3 * (1 / (c1 * c1))) % ue
    return (ue, ve, 2)


def transport_divisor_to_odd(tr: OddTransform, ue: UniPoly, ve: UniPoly, d: int) -> JacDivisor:
    """Inverse of transport_divisor_to_even (same degenerate-support caveats)."""
    ctx = tr.even.ctx
    x0, c1 = tr.x0, tr.c1
    odd = tr.odd
    if d == 0:
        return jac_identity(odd)
    if ue(x0) == ctx.zero:
        raise ValueError("divisor meets the moved Weierstrass point")
    if d == 1:
        xi = -ue[0]
        w0 = c1 / (xi - x0)
        y0 = ve(xi) * c1**2 / (xi - x0) ** 3
        U = UniPoly(ctx, [-w0, ctx.one])
        V = UniPoly.const(ctx, y0)
        return make_divisor(odd, U, V)
    u1, u0 = ue[1], ue[0]
    b2 = ue(x0)
    b1 = c1 * (2 * x0 + u1)
    b0 = c1 * c1
    U = UniPoly(ctx, [b0, b1, b2]).monic()
    xm = UniPoly.x(ctx)  # odd coordinate W
    inv_w = _inv_mod(xm, U)
    x_of_w = (UniPoly.const(ctx, x0) + c1 * inv_w) % U
    val = UniPoly.zero(ctx)
    for i in range(ve.degree, -1, -1):
        val = (val * x_of_w + ve[i]) % U
    # V = ve(x(W)) * c1^2 / (x - x0)^3 with (x - x0) = c1 / W, so V = val * W^3 / c1
    V = (val * _pow_mod(xm, 3, U) * (1 / c1)) % U
    return make_divisor(odd, U, V)


def _inv_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError("not invertible")
    return (s * (1 / g[0])) % m


def _pow_mod(a: UniPoly, e: int, m: UniPoly) -> UniPoly:
    r = UniPoly.const(a.ring, a.ring.one)
    a = a % m
    while e:
        if e & 1:
            r = (r * a) % m
        a = (a * a) % m
        e >>= 1
    return r


def conjugated_automorphism_action(
    tr: OddTransform, aut: CurveAutomorphism, D: JacDivisor
) -> JacDivisor:
    """Action of an even-model automorphism on odd-model divisor classes.

    Moves the divisor to the sextic, acts pointwise, returns, and corrects
    for the moved base point: the class picks up -d * [(K) - (infinity)]
    where K is the odd image of aut(x0, 0).
    """
    odd = tr.odd
    if D.is_identity():
        return D
    ctx = tr.even.ctx
    ue, ve, d = transport_divisor_to_even(tr, D)
    # pointwise action on the even Mumford pair
    cxi = 1 / aut.cx
    ue2 = ue.scale_x(cxi).monic()
    ve2 = (aut.cy * ve.scale_x(cxi)) % ue2 if d == 2 else aut.cy * ve.scale_x(cxi)
    img = transport_divisor_to_odd(tr, ue2, ve2, d)
    # base-point correction: aut(x0, 0) = (cx * x0, 0)
    x0_img = aut.cx * tr.x0
    if x0_img == tr.x0:
        return img
    wK = tr.c1 / (x0_img - tr.x0)
    K = make_divisor(odd, UniPoly(ctx, [-wK, ctx.one]), UniPoly.zero(ctx))
    return cantor_add(odd, img, jac_mul(odd, -d, K))
