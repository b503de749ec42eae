"""Zeta data for curves over F_p: counts, Frobenius and trace charpolys.

Counting is exact enumeration (quadratic-character sums for hyperelliptic
models, per-line root counts for smooth plane models) over F_p .. F_{p^g};
the numerator of the zeta function is assembled from the counts through
Newton's identities and the functional equation.  Genus is capped at 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import GF, FieldCtx
from .multipoly import MultiPoly, resultant
from .poly import UniPoly, poly_gcd, poly_nth_root, roots_in_field
from .rings import QQ, ZZ
from . import zcount


class SingularModel(ValueError):
    """Model is singular where a smooth model is required."""


class GenusTooLarge(ValueError):
    """Full zeta data is implemented for genus <= 3 only."""


class WeilViolation(ArithmeticError):
    """Counts are inconsistent with the Weil bounds / functional equation."""


class FunctionalEquationViolation(ArithmeticError):
    """Frobenius charpoly does not satisfy t^2g pi(p/t) = p^g pi(t)."""


# -- point counting -----------------------------------------------------------------


def count_points_hyper(f_int: list[int], p: int, k: int) -> int:
    """Points of the smooth model of y^2 = f(x) over F_{p^k}.

    f_int: integer coefficients (low to high).  Infinity contributes 1 point
    for odd degree, and 2 or 0 for even degree according to whether the
    leading coefficient is a square in F_{p^k}.
    """
    ctx = GF(p, k)
    f = UniPoly(ctx, [ctx.from_int(c) for c in f_int])
    affine = zcount.hyper_affine_count(f, ctx)
    deg = f.degree
    if deg % 2 == 1:
        inf = 1
    else:
        inf = 2 if ctx.legendre(f.lc()) == 1 else 0
    return affine + inf


def count_points_plane(terms: dict, p: int, k: int) -> int:
    """Points of a smooth plane curve F(u, v) = 0 over F_{p^k}, infinity included.

    terms: {(i, j): int} with F = sum c_ij u^i v^j; the caller must have
    established smoothness of the projective model.
    """
    ctx = GF(p, k)
    deg = max(i + j for (i, j) in terms)
    du = max(i for (i, j) in terms)
    dv = max(j for (i, j) in terms)
    affine = zcount.plane_affine_count(terms, du, dv, ctx)
    # points at infinity: zeros of the top-degree form on the line W = 0
    top = {(i, j): c for (i, j), c in terms.items() if i + j == deg}
    inf = 0
    # (0 : 1 : 0) lies on the curve iff the v^deg coefficient vanishes
    if top.get((0, deg), 0) % p == 0:
        inf += 1
    # points (1 : v : 0): roots of sum_j top[deg-j, j] v^j
    coeffs = [ctx.from_int(top.get((deg - j, j), 0)) for j in range(deg + 1)]
    fpoly = UniPoly(ctx, coeffs)
    if fpoly.is_zero():
        raise SingularModel("top-degree form vanishes identically")
    from .poly import count_roots

    if fpoly.degree >= 1:
        inf += count_roots(fpoly)
    return affine + inf


# -- smoothness ---------------------------------------------------------------------


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    singular_points: tuple = ()  # descriptions of singular points found
    checked: bool = True  # False when the model was too large to check

    def __bool__(self):
        return self.smooth


def check_smooth(terms: dict, p: int) -> SmoothnessReport:
    """Decide smoothness of the projective plane model over the closure of F_p.

    terms: {(i, j): int}.  Total degree <= 6.  Uses resultant elimination
    plus root extraction in extensions (degree <= 12), and checks the line
    at infinity through the homogenized partials.
    """
    ctx = GF(p)
    deg = max(i + j for (i, j) in terms)
    if deg > 6:
        raise ValueError("check_smooth handles total degree <= 6")
    if p <= deg:
        raise ValueError("characteristic too small for the Euler-relation check")
    V = ("u", "v")
    F = MultiPoly(ctx, V, {e: ctx.from_int(c) for e, c in terms.items()})
    Fu = _mp_derivative(F, 0)
    Fv = _mp_derivative(F, 1)
    sing: list = []

    # affine singular locus
    if Fu.is_zero() and Fv.is_zero():
        return SmoothnessReport(False, ("constant or p-th power model",))
    pairs = [(F, Fu), (F, Fv), (Fu, Fv)]
    res_list = []
    for A, B in pairs:
        if A.is_zero() or B.is_zero():
            continue
        if not A.uses_var("v") and not B.uses_var("v"):
            continue
        try:
            R = resultant(A, B, "v")
        except ArithmeticError:
            continue
        res_list.append(R)
    cand = None  # univariate in u: common factor of the resultants
    for R in res_list:
        ru = _mp_to_unipoly(R, "u", ctx)
        cand = ru if cand is None else poly_gcd(cand, ru)
        if cand.degree == 0 and not cand.is_zero():
            break
    if cand is None or cand.is_zero():
        # everything collapsed; fall back to scanning u over small extensions
        cand = None
    if cand is not None and cand.degree > 0:
        from .poly import factor_univariate

        for m, _ in factor_univariate(cand):
            d = m.degree
            ext = GF(p, d) if d > 1 else ctx
            u0 = _root_in_ext(m, ext)
            fv = _eval_u(F, u0, ext)
            fuv = _eval_u(Fu, u0, ext)
            fvv = _eval_u(Fv, u0, ext)
            g = poly_gcd(poly_gcd(fv, fuv), fvv)
            if g.degree >= 1 or (g.is_zero() and fv.is_zero()):
                sing.append(("affine", f"u min-poly {m!r}"))
    if cand is None:
        # degenerate elimination: directly scan u in extensions up to degree 2
        for d in (1, 2):
            ext = GF(p, d)
            for idx in range(ext.q):
                u0 = ext.element_by_index(idx)
                fv = _eval_u_ext(F, u0, ext)
                fuv = _eval_u_ext(Fu, u0, ext)
                fvv = _eval_u_ext(Fv, u0, ext)
                g = poly_gcd(poly_gcd(fv, fuv), fvv)
                if g.degree >= 1 or (g.is_zero() and fv.is_zero()):
                    sing.append(("affine", f"u = {u0!r} (deg {d})"))

    # line at infinity: homogenize F(u, v) -> Fh(U, V, W), look at W = 0
    H = ("U", "V", "W")
    Fh_terms = {}
    for (i, j), c in F.terms.items():
        Fh_terms[(i, j, deg - i - j)] = c
    Fh = MultiPoly(ctx, H, Fh_terms)
    FU = _mp_derivative(Fh, 0)
    FV = _mp_derivative(Fh, 1)
    FW = _mp_derivative(Fh, 2)
    # candidate points: V^deg coefficient zero -> (0:1:0); else roots of top form
    top_coeffs = [ctx.from_int(0)] * (deg + 1)
    for (i, j, w), c in Fh.terms.items():
        if w == 0:
            top_coeffs[j] = top_coeffs[j] + c  # exponent i = deg - j
    toppoly = UniPoly(ctx, top_coeffs)
    if not toppoly[deg]:
        if _vanishes_at_inf(FU, 0, ctx) and _vanishes_at_inf(FV, 0, ctx) and _vanishes_at_inf(FW, 0, ctx):
            sing.append(("infinity", "(0:1:0)"))
    from .poly import factor_univariate

    if toppoly.degree >= 1:
        for m, _ in factor_univariate(toppoly):
            d = m.degree
            ext = GF(p, d) if d > 1 else ctx
            v0 = _root_in_ext(m, ext)
            vals = []
            for G in (FU, FV, FW):
                vals.append(_eval_inf(G, v0, ext))
            if all(not v for v in vals):
                sing.append(("infinity", f"v min-poly {m!r}"))
    if sing:
        return SmoothnessReport(False, tuple(sing))
    return SmoothnessReport(True)


def _mp_derivative(F: MultiPoly, vi: int) -> MultiPoly:
    out = {}
    ring = F.ring
    for e, c in F.terms.items():
        if e[vi]:
            e2 = list(e)
            k = e2[vi]
            e2[vi] -= 1
            out[tuple(e2)] = out.get(tuple(e2), ring.zero) + c * ring.from_int(k)
    return MultiPoly(ring, F.vars, out)


def _mp_to_unipoly(F: MultiPoly, name: str, ctx) -> UniPoly:
    i = F._vi(name)
    for e in F.terms:
        for j, v in enumerate(F.vars):
            if v != name and e[j]:
                raise ArithmeticError("not univariate")
    coeffs = [ctx.zero] * (F.degree_in(name) + 1)
    for e, c in F.terms.items():
        coeffs[e[i]] = c
    return UniPoly(ctx, coeffs)


def _root_in_ext(m: UniPoly, ext: FieldCtx):
    """A root of the F_p-irreducible m inside ext = F_{p^deg m}."""
    if m.degree == 1:
        c = m[0]
        return ext.from_int(-c.to_int() % ext.p) if hasattr(c, "to_int") else -c
    lifted = UniPoly(ext, [ext.from_int(c.to_int()) for c in m.coeffs])
    rts = roots_in_field(lifted)
    if not rts:
        raise ArithmeticError("irreducible factor has no root in its own extension")
    return rts[0]


def _eval_u(F: MultiPoly, u0, ext) -> UniPoly:
    """Evaluate u := u0 (element of ext), leaving a UniPoly in v over ext."""
    dv = F.degree_in("v")
    coeffs = [ext.zero] * (dv + 1)
    for (i, j), c in F.terms.items():
        cc = ext.from_int(c.to_int())
        coeffs[j] = coeffs[j] + cc * u0**i
    return UniPoly(ext, coeffs)


_eval_u_ext = _eval_u


def _eval_inf(G: MultiPoly, v0, ext) -> object:
    """Evaluate a homogeneous trivariate at (1 : v0 : 0)."""
    total = ext.zero
    for (i, j, w), c in G.terms.items():
        if w == 0:
            total = total + ext.from_int(c.to_int()) * v0**j
    return total


def _vanishes_at_inf(G: MultiPoly, _unused, ctx) -> bool:
    """Evaluate a homogeneous trivariate at (0:1:0)."""
    total = ctx.zero
    for (i, j, w), c in G.terms.items():
        if i == 0 and w == 0:
            total = total + c
    return not total


# -- charpoly assembly -----------------------------------------------------------------


@dataclass
class ZetaData:
    p: int
    genus: int
    counts: list[int]
    pi: UniPoly  # Frobenius charpoly, degree 2g over ZZ
    trace_poly: UniPoly  # degree g over ZZ
    jac_order: int = 0
    meta: dict = field(default_factory=dict)


def frobenius_charpoly(counts: list[int], p: int, g: int) -> UniPoly:
    """pi(t) from N_1..N_g by Newton's identities + the functional equation."""
    if g not in (1, 2, 3):
        raise GenusTooLarge(f"genus {g} unsupported")
    if len(counts) < g:
        raise ValueError("need N_1..N_g")
    t = [Fraction(p**i + 1 - counts[i - 1]) for i in range(1, g + 1)]
    e = [Fraction(1)]
    for i in range(1, g + 1):
        acc = Fraction(0)
        for j in range(1, i):
            acc += (-1) ** (j - 1) * e[i - j] * t[j - 1]
        acc += (-1) ** (i - 1) * t[i - 1]
        e.append(acc / i)
    a = [Fraction(0)] * (2 * g + 1)
    a[0] = Fraction(1)
    for i in range(1, g + 1):
        a[i] = (-1) ** i * e[i]
    for i in range(g + 1, 2 * g + 1):
        a[i] = a[2 * g - i] * p ** (i - g)
    coeffs = []
    for i in range(2 * g, -1, -1):
        if a[i].denominator != 1:
            raise WeilViolation(f"non-integral charpoly coefficient {a[i]}")
        coeffs.append(a[i].numerator)  # low-to-high: coeff of t^j is a_{2g-j}
    pi = UniPoly(ZZ, coeffs)
    _check_weil(pi, p, g)
    return pi


def _check_weil(pi: UniPoly, p: int, g: int):
    # functional equation: coeff of t^i equals p^(g-i) * coeff of t^(2g-i)
    for i in range(g + 1):
        if pi[i] != pi[2 * g - i] * p ** (g - i):
            raise WeilViolation("functional equation fails")
    # roots on |t| = sqrt(p), numerically
    import numpy as np

    coeffs = [float(pi[i]) for i in range(2 * g, -1, -1)]
    rts = np.roots(coeffs)
    target = math.sqrt(p)
    for r in rts:
        if abs(abs(r) - target) > 1e-6 * target:
            raise WeilViolation(f"root off the Weil circle: {r}")


def verify_weil_count_bound(counts: list[int], p: int, g: int) -> bool:
    return all(
        abs(counts[k - 1] - p**k - 1) <= 2 * g * math.isqrt(p**k) + 2 * g
        for k in range(1, len(counts) + 1)
    )


def trace_charpoly(pi: UniPoly, p: int) -> UniPoly:
    """Characteristic polynomial of t + p/t: Res_t(pi(t), rt - t^2 - p), made monic.

    The resultant equals p^g h(r)^2 with h monic of degree g; h is returned.
    """
    twog = pi.degree
    if twog % 2:
        raise FunctionalEquationViolation("odd degree")
    g = twog // 2
    for i in range(g + 1):
        if pi[i] != pi[2 * g - i] * p ** (g - i):
            raise FunctionalEquationViolation("functional equation fails")
    V = ("t", "r")
    tv = MultiPoly.var(ZZ, V, "t")
    rv = MultiPoly.var(ZZ, V, "r")
    pim = MultiPoly.zero(ZZ, V)
    for i in range(twog + 1):
        if pi[i]:
            pim = pim + pi[i] * tv**i
    R = resultant(pim, rv * tv - tv * tv - p, "t")
    coeffs = [R.coeff_of("r", j) for j in range(R.degree_in("r") + 1)]
    ints = []
    for c in coeffs:
        if c.is_zero():
            ints.append(0)
        else:
            ints.append(c.terms[(0, 0)])
    Rq = UniPoly(QQ, [Fraction(c, p**g) for c in ints])
    h = poly_nth_root(Rq.monic(), 2)
    if h is None or Rq.lc() != 1:
        raise FunctionalEquationViolation("resultant is not p^g times a square")
    out = []
    for i in range(h.degree + 1):
        c = h[i]
        if c.denominator != 1:
            raise FunctionalEquationViolation("non-integral trace polynomial")
        out.append(c.numerator)
    return UniPoly(ZZ, out)


def extension_charpoly(pi: UniPoly, k: int) -> UniPoly:
    """Frobenius charpoly over F_{p^k}: Res_x(pi(x), z - x^k), normalized monic."""
    if k == 1:
        return pi
    V = ("x", "z")
    xv = MultiPoly.var(ZZ, V, "x")
    zv = MultiPoly.var(ZZ, V, "z")
    pim = MultiPoly.zero(ZZ, V)
    for i in range(pi.degree + 1):
        if pi[i]:
            pim = pim + pi[i] * xv**i
    R = resultant(pim, zv - xv**k, "x")
    coeffs = []
    for j in range(R.degree_in("z") + 1):
        c = R.coeff_of("z", j)
        coeffs.append(0 if c.is_zero() else c.terms[(0, 0)])
    out = UniPoly(ZZ, coeffs)
    if out.lc() == -1:
        out = -out
    return out


def supersingular_split(pi: UniPoly, k: int):
    """Detect pi's extension charpoly being a g-th power of a quadratic.

    Returns (quadratic, g) or None.  The quadratic z^2 - beta z + p^k is the
    charpoly of one elliptic factor; the Jacobian is then isogenous to its
    g-th power over F_{p^k}.
    """
    g = pi.degree // 2
    ext = extension_charpoly(pi, k)
    extq = ext.map_coeffs(lambda c: Fraction(c), QQ)
    root = poly_nth_root(extq, g) if g > 1 else extq
    if root is None or root.degree != 2:
        return None
    out = []
    for i in range(3):
        c = root[i]
        if isinstance(c, Fraction):
            if c.denominator != 1:
                return None
            out.append(c.numerator)
        else:
            out.append(int(c))
    quad = UniPoly(ZZ, out)
    # norm check: constant term must be p^k; recover p from pi's constant term
    pk = _int_nth_root(pi[0], g)
    if pk is None or quad[0] != pk**k:
        return None
    return quad, g


def _int_nth_root(n: int, g: int):
    if n < 0:
        return None
    r = round(n ** (1.0 / g))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**g == n:
            return cand
    return None


# -- orchestration -------------------------------------------------------------------


def zeta_data_hyper(f_int: list[int], p: int) -> ZetaData:
    """Full zeta data for a genus-2 hyperelliptic y^2 = f(x), deg f in {5, 6}."""
    g = 2
    counts = [count_points_hyper(f_int, p, k) for k in range(1, g + 1)]
    if not verify_weil_count_bound(counts, p, g):
        raise WeilViolation(f"counts {counts} outside Weil bounds")
    pi = frobenius_charpoly(counts, p, g)
    h = trace_charpoly(pi, p)
    zd = ZetaData(p, g, counts, pi, h)
    zd.jac_order = int(pi(1))
    return zd


def zeta_data_elliptic(f_int: list[int], p: int) -> ZetaData:
    g = 1
    counts = [count_points_hyper(f_int, p, 1)]
    pi = frobenius_charpoly(counts, p, g)
    h = trace_charpoly(pi, p)
    zd = ZetaData(p, g, counts, pi, h)
    zd.jac_order = int(pi(1))
    return zd


def zeta_data_plane(terms: dict, p: int, assume_smooth: bool = False) -> ZetaData:
    """Full zeta data for a smooth plane curve of total degree <= 6 over F_p."""
    deg = max(i + j for (i, j) in terms)
    g = (deg - 1) * (deg - 2) // 2
    if g > 3:
        raise GenusTooLarge(f"plane degree {deg} has genus {g} > 3")
    if not assume_smooth:
        rep = check_smooth(terms, p)
        if not rep:
            raise SingularModel(f"singular model: {rep.singular_points}")
    counts = [count_points_plane(terms, p, k) for k in range(1, g + 1)]
    if not verify_weil_count_bound(counts, p, g):
        raise WeilViolation(f"counts {counts} outside Weil bounds")
    pi = frobenius_charpoly(counts, p, g)
    h = trace_charpoly(pi, p)
    zd = ZetaData(p, g, counts, pi, h)
    zd.jac_order = int(pi(1))
    return zd
