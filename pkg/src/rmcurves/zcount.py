"""Point-counting kernels over F_{p^s}, s <= 3.

Elements of F_{p^s} are encoded as integer indices c0 + c1*p + c2*p^2 in
the power basis of the modulus.  The numba kernels keep everything in
scalar int64 registers; they are only used for p < 2^20, far above every
desk-scale target, so intermediate products cannot overflow.  Each kernel
has a pure-Python twin used for small inputs and as a test oracle.
"""

from __future__ import annotations

import numpy as np

from .fields import FieldCtx
from .poly import UniPoly, count_roots

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap if not (args and callable(args[0])) else args[0]


NUMBA_THRESHOLD = 3_000  # use the jit kernels above this field size


# -- index-encoded F_{p^s} scalar helpers (shared by the jit kernels) -----------


@njit(cache=True)
def _gf_mul(a, b, p, s, r0, r1, r2):
    if s == 1:
        return (a * b) % p
    a0 = a % p
    a1 = (a // p) % p
    b0 = b % p
    b1 = (b // p) % p
    if s == 2:
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a1 * b1
        # x^2 = r0 + r1 x
        d0 = (c0 + c2 % p * r0) % p
        d1 = (c1 + c2 % p * r1) % p
        return d0 + d1 * p
    a2 = a // (p * p)
    b2 = b // (p * p)
    c0 = a0 * b0 % p
    c1 = (a0 * b1 + a1 * b0) % p
    c2 = (a0 * b2 + a1 * b1 + a2 * b0) % p
    c3 = (a1 * b2 + a2 * b1) % p
    c4 = a2 * b2 % p
    # x^3 = r0 + r1 x + r2 x^2 ; fold x^4 then x^3
    c1 = (c1 + c4 * r0) % p
    c2 = (c2 + c4 * r1) % p
    c3 = (c3 + c4 * r2) % p
    c0 = (c0 + c3 * r0) % p
    c1 = (c1 + c3 * r1) % p
    c2 = (c2 + c3 * r2) % p
    return c0 + c1 * p + c2 * p * p


@njit(cache=True)
def _gf_add(a, b, p, s):
    if s == 1:
        return (a + b) % p
    a0 = a % p
    b0 = b % p
    a1 = (a // p) % p
    b1 = (b // p) % p
    if s == 2:
        return (a0 + b0) % p + ((a1 + b1) % p) * p
    a2 = a // (p * p)
    b2 = b // (p * p)
    return (a0 + b0) % p + ((a1 + b1) % p) * p + ((a2 + b2) % p) * p * p


@njit(cache=True)
def _gf_sub(a, b, p, s):
    if s == 1:
        return (a - b) % p
    a0 = a % p
    b0 = b % p
    a1 = (a // p) % p
    b1 = (b // p) % p
    if s == 2:
        return (a0 - b0) % p + ((a1 - b1) % p) * p
    a2 = a // (p * p)
    b2 = b // (p * p)
    return (a0 - b0) % p + ((a1 - b1) % p) * p + ((a2 - b2) % p) * p * p


@njit(cache=True)
def _gf_pow(a, e, p, s, r0, r1, r2):
    result = 1
    base = a
    while e:
        if e & 1:
            result = _gf_mul(result, base, p, s, r0, r1, r2)
        base = _gf_mul(base, base, p, s, r0, r1, r2)
        e >>= 1
    return result


@njit(cache=True)
def _gf_inv(a, q, p, s, r0, r1, r2):
    return _gf_pow(a, q - 2, p, s, r0, r1, r2)


# -- hyperelliptic affine count ----------------------------------------------------


@njit(cache=True)
def _hyper_affine_jit(fidx, p, s, r0, r1, r2, q):
    sq = np.zeros(q, dtype=np.uint8)
    for t in range(q):
        sq[_gf_mul(t, t, p, s, r0, r1, r2)] = 1
    total = 0
    deg = fidx.shape[0] - 1
    for x in range(q):
        v = fidx[deg]
        for i in range(deg - 1, -1, -1):
            v = _gf_add(_gf_mul(v, x, p, s, r0, r1, r2), fidx[i], p, s)
        if v == 0:
            total += 1
        elif sq[v] == 1:
            total += 2
    return total


def hyper_affine_count(f: UniPoly, ctx: FieldCtx) -> int:
    """#{(x, y) in F_q^2 : y^2 = f(x)} for f over the index-encoded field ctx."""
    fidx = [_elem_index(c, ctx) for c in f.coeffs]
    if not fidx:
        fidx = [0]
    q = ctx.q
    if HAVE_NUMBA and q >= NUMBA_THRESHOLD and ctx.p < (1 << 20):
        r = _red_coeffs(ctx)
        return int(
            _hyper_affine_jit(
                np.array(fidx, dtype=np.int64), ctx.p, ctx.k, r[0], r[1], r[2], q
            )
        )
    return _hyper_affine_py(f, ctx)


def _hyper_affine_py(f: UniPoly, ctx: FieldCtx) -> int:
    total = 0
    half = (ctx.q - 1) // 2
    one = ctx.one
    for idx in range(ctx.q):
        x = ctx.element_by_index(idx)
        v = f(x)
        if not v:
            total += 1
        elif v**half == one:
            total += 2
    return total


# -- plane-curve affine count -------------------------------------------------------


@njit(cache=True)
def _plane_affine_jit(cmat, p, s, r0, r1, r2, q, qbits):
    # cmat[i, j]: coefficient of u^i v^j (index-encoded, prime-subfield values)
    du = cmat.shape[0] - 1
    dv = cmat.shape[1] - 1
    total = 0
    b = np.zeros(dv + 1, dtype=np.int64)
    h = np.zeros(16, dtype=np.int64)
    tmp = np.zeros(16, dtype=np.int64)
    g1 = np.zeros(16, dtype=np.int64)
    g2 = np.zeros(16, dtype=np.int64)
    for u in range(q):
        # b_j(u) by Horner in u
        for j in range(dv + 1):
            acc = cmat[du, j]
            for i in range(du - 1, -1, -1):
                acc = _gf_add(_gf_mul(acc, u, p, s, r0, r1, r2), cmat[i, j], p, s)
            b[j] = acc
        d = dv
        while d > 0 and b[d] == 0:
            d -= 1
        if d == 0:
            if b[0] == 0:
                total += q
            continue
        if d == 1:
            total += 1
            continue
        binv = _gf_inv(b[d], q, p, s, r0, r1, r2)
        # h = v^q mod b  (square and multiply over F_q[v])
        for i in range(16):
            h[i] = 0
        h[1] = 1
        hd = 1
        for bit in range(qbits - 2, -1, -1):
            # h = h^2 mod b
            for i in range(16):
                tmp[i] = 0
            for i in range(hd + 1):
                if h[i] != 0:
                    for j in range(hd + 1):
                        if h[j] != 0:
                            tmp[i + j] = _gf_add(
                                tmp[i + j], _gf_mul(h[i], h[j], p, s, r0, r1, r2), p, s
                            )
            for i in range(2 * hd, d - 1, -1):
                c = tmp[i]
                if c != 0:
                    c = _gf_mul(c, binv, p, s, r0, r1, r2)
                    tmp[i] = 0
                    for j in range(d):
                        tmp[i - d + j] = _gf_sub(
                            tmp[i - d + j], _gf_mul(c, b[j], p, s, r0, r1, r2), p, s
                        )
            for i in range(16):
                h[i] = tmp[i]
            hd = d - 1
            while hd > 0 and h[hd] == 0:
                hd -= 1
            if (q >> bit) & 1:
                # h = h * v mod b
                for i in range(hd + 1, 0, -1):
                    h[i] = h[i - 1]
                h[0] = 0
                hd += 1
                if hd >= d:
                    c = h[d]
                    if c != 0:
                        c = _gf_mul(c, binv, p, s, r0, r1, r2)
                        h[d] = 0
                        for j in range(d):
                            h[j] = _gf_sub(
                                h[j], _gf_mul(c, b[j], p, s, r0, r1, r2), p, s
                            )
                    hd = d - 1
                    while hd > 0 and h[hd] == 0:
                        hd -= 1
        # gcd(h - v, b): number of distinct roots is its degree
        for i in range(16):
            g1[i] = h[i]
            g2[i] = 0
        g1[1] = _gf_sub(g1[1], 1, p, s)
        d1 = d - 1
        while d1 > 0 and g1[d1] == 0:
            d1 -= 1
        if d1 == 0 and g1[0] == 0:
            # v^q == v mod b: b splits into d distinct linear factors
            total += d
            continue
        for i in range(d + 1):
            g2[i] = b[i]
        d2 = d
        while True:
            if d1 == 0:
                if g1[0] == 0:
                    total += d2
                break
            # g2 = g2 mod g1
            inv1 = _gf_inv(g1[d1], q, p, s, r0, r1, r2)
            for i in range(d2, d1 - 1, -1):
                c = g2[i]
                if c != 0:
                    c = _gf_mul(c, inv1, p, s, r0, r1, r2)
                    g2[i] = 0
                    for j in range(d1):
                        g2[i - d1 + j] = _gf_sub(
                            g2[i - d1 + j], _gf_mul(c, g1[j], p, s, r0, r1, r2), p, s
                        )
            d2n = d1 - 1
            while d2n > 0 and g2[d2n] == 0:
                d2n -= 1
            for i in range(16):
                t = g1[i]
                g1[i] = g2[i]
                g2[i] = t
            t = d1
            d1 = d2n
            d2 = t
    return total


def plane_affine_count(F_terms: dict, du: int, dv: int, ctx: FieldCtx) -> int:
    """#{(u, v) in F_q^2 : F(u, v) = 0} for F with prime-subfield coefficients."""
    q = ctx.q
    if HAVE_NUMBA and q >= NUMBA_THRESHOLD and ctx.p < (1 << 20):
        cmat = np.zeros((du + 1, dv + 1), dtype=np.int64)
        for (i, j), c in F_terms.items():
            cmat[i, j] = c % ctx.p
        r = _red_coeffs(ctx)
        qbits = q.bit_length()
        return int(_plane_affine_jit(cmat, ctx.p, ctx.k, r[0], r[1], r[2], q, qbits))
    return _plane_affine_py(F_terms, du, dv, ctx)


def _plane_affine_py(F_terms: dict, du: int, dv: int, ctx: FieldCtx) -> int:
    total = 0
    cols: list[list] = [[ctx.zero] * (du + 1) for _ in range(dv + 1)]
    for (i, j), c in F_terms.items():
        cols[j][i] = ctx.from_int(c % ctx.p)
    col_polys = [UniPoly(ctx, col) for col in cols]
    for idx in range(ctx.q):
        u = ctx.element_by_index(idx)
        coeffs = [cp(u) for cp in col_polys]
        f = UniPoly(ctx, coeffs)
        if f.is_zero():
            total += ctx.q
        elif f.degree == 0:
            continue
        else:
            total += count_roots(f)
    return total


# -- helpers -------------------------------------------------------------------------


def _elem_index(c, ctx: FieldCtx) -> int:
    n = 0
    for x in reversed(c.coeffs):
        n = n * ctx.p + x
    return n


def _red_coeffs(ctx: FieldCtx):
    """x^s = r0 + r1 x + r2 x^2 from the context modulus (padded to 3)."""
    r = list(ctx._red) + [0, 0, 0]
    return r[0], r[1], r[2]
