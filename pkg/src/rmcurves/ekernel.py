"""Batched kernels for the quotient engine over F_{p^s}, s <= 3.

Field elements ride as integer indices (zcount encoding).  The two hot
loops of the quotient computation - evaluating the symmetric functions of
the trace invariant at thousands of curve points, and Newton interpolation
through those values - run jitted; everything else stays exact Python.
"""

from __future__ import annotations

import numpy as np

from .zcount import HAVE_NUMBA, _gf_add, _gf_inv, _gf_mul, _gf_pow, _gf_sub, njit


@njit(cache=True)
def _horner_idx(coeffs, x0, p, s, r0, r1, r2):
    acc = 0
    for i in range(coeffs.shape[0] - 1, -1, -1):
        acc = _gf_add(_gf_mul(acc, x0, p, s, r0, r1, r2), coeffs[i], p, s)
    return acc


@njit(cache=True)
def ek_values(
    xs, ys, exps, A, B, D, dega, degb, degd,
    PA, PB, PD, DenC, p, s, r0, r1, r2, q, l,
):
    """E_k(point) = e_k * Den^k for k = 1..l at each (x, y).

    A/B/D: (n_terms, max_len) coefficient rows for numerator a, numerator b
    and denominator of each z_t coefficient; PA/PB/PD the same for the
    Kummer function; DenC the cleared common denominator.  Returns an
    (npts, l) matrix and a validity mask.
    """
    npts = xs.shape[0]
    nt = exps.shape[0]
    out = np.zeros((npts, l), dtype=np.int64)
    ok = np.zeros(npts, dtype=np.uint8)
    zbar = np.zeros(l, dtype=np.int64)
    cur = np.zeros(l, dtype=np.int64)
    nxt = np.zeros(l, dtype=np.int64)
    ps_ = np.zeros(l + 1, dtype=np.int64)
    es = np.zeros(l + 1, dtype=np.int64)
    for i in range(npts):
        x0 = xs[i]
        y0 = ys[i]
        denv = _horner_idx(DenC, x0, p, s, r0, r1, r2)
        if denv == 0:
            continue
        pd = _horner_idx(PD, x0, p, s, r0, r1, r2)
        if pd == 0:
            continue
        pn = _horner_idx(PA, x0, p, s, r0, r1, r2)
        pb = _horner_idx(PB, x0, p, s, r0, r1, r2)
        phi = _gf_add(pn, _gf_mul(y0, pb, p, s, r0, r1, r2), p, s)
        phi = _gf_mul(phi, _gf_inv(pd, q, p, s, r0, r1, r2), p, s, r0, r1, r2)
        if phi == 0:
            continue
        bad = False
        for t in range(l):
            zbar[t] = 0
        for t in range(nt):
            dv = _horner_idx(D[t, : degd[t] + 1], x0, p, s, r0, r1, r2)
            if dv == 0:
                bad = True
                break
            nv = _horner_idx(A[t, : dega[t] + 1], x0, p, s, r0, r1, r2)
            if degb[t] >= 0:
                bv = _horner_idx(B[t, : degb[t] + 1], x0, p, s, r0, r1, r2)
                nv = _gf_add(nv, _gf_mul(y0, bv, p, s, r0, r1, r2), p, s)
            val = _gf_mul(nv, _gf_pow(dv, q - 2, p, s, r0, r1, r2), p, s, r0, r1, r2)
            e = exps[t] % l
            zbar[e] = _gf_add(zbar[e], val, p, s)
        if bad:
            continue
        # power sums p_k = l [t^0] zbar^k in F_q[t]/(t^l - phi)
        for t in range(l):
            cur[t] = zbar[t]
        lmod = l % p
        ps_[1] = _gf_mul(lmod, cur[0], p, s, r0, r1, r2)
        for k in range(2, l + 1):
            for t in range(l):
                nxt[t] = 0
            for e1 in range(l):
                v1 = zbar[e1]
                if v1 != 0:
                    for e2 in range(l):
                        v2 = cur[e2]
                        if v2 != 0:
                            E = e1 + e2
                            prod = _gf_mul(v1, v2, p, s, r0, r1, r2)
                            if E >= l:
                                nxt[E - l] = _gf_add(
                                    nxt[E - l], _gf_mul(prod, phi, p, s, r0, r1, r2), p, s
                                )
                            else:
                                nxt[E] = _gf_add(nxt[E], prod, p, s)
            for t in range(l):
                cur[t] = nxt[t]
            ps_[k] = _gf_mul(lmod, cur[0], p, s, r0, r1, r2)
        # Newton's identities
        es[0] = 1
        for k in range(1, l + 1):
            acc = 0
            for j in range(1, k + 1):
                term = _gf_mul(es[k - j], ps_[j], p, s, r0, r1, r2)
                if j % 2 == 1:
                    acc = _gf_add(acc, term, p, s)
                else:
                    acc = _gf_sub(acc, term, p, s)
            kinv = _gf_pow(k % p, q - 2, p, s, r0, r1, r2)
            es[k] = _gf_mul(acc, kinv, p, s, r0, r1, r2)
        dpow = 1
        for k in range(1, l + 1):
            dpow = _gf_mul(dpow, denv, p, s, r0, r1, r2)
            out[i, k - 1] = _gf_mul(es[k], dpow, p, s, r0, r1, r2)
        ok[i] = 1
    return out, ok


@njit(cache=True)
def newton_interp_batch(keys, vals, p, s, r0, r1, r2, q):
    """Power-basis coefficients of the interpolants through (keys, vals[:, k]).

    Returns an (N, L) matrix whose column k holds the coefficients (low to
    high) of the polynomial interpolating vals[:, k] at the N distinct keys.
    """
    N = keys.shape[0]
    L = vals.shape[1]
    table = vals.copy()
    scratch = np.zeros(N, dtype=np.int64)
    pref = np.zeros(N, dtype=np.int64)
    for j in range(1, N):
        m = N - j
        # batch inversion of dx_i = keys[i] - keys[i-j] (Montgomery trick)
        acc = 1
        for t in range(m):
            i = j + t
            dx = _gf_sub(keys[i], keys[i - j], p, s)
            scratch[t] = dx
            pref[t] = acc
            acc = _gf_mul(acc, dx, p, s, r0, r1, r2)
        inv_all = _gf_pow(acc, q - 2, p, s, r0, r1, r2)
        for t in range(m - 1, -1, -1):
            inv_t = _gf_mul(inv_all, pref[t], p, s, r0, r1, r2)
            inv_all = _gf_mul(inv_all, scratch[t], p, s, r0, r1, r2)
            scratch[t] = inv_t
        for i in range(N - 1, j - 1, -1):
            invdx = scratch[i - j]
            for kk in range(L):
                diff = _gf_sub(table[i, kk], table[i - 1, kk], p, s)
                table[i, kk] = _gf_mul(diff, invdx, p, s, r0, r1, r2)
    # Newton form -> power basis, per column
    out = np.zeros((N, L), dtype=np.int64)
    poly = np.zeros(N + 1, dtype=np.int64)
    for kk in range(L):
        for t in range(N):
            poly[t] = 0
        deg = -1
        for i in range(N - 1, -1, -1):
            # poly = poly * (x - keys[i]) + table[i, kk]
            for t in range(deg, -1, -1):
                poly[t + 1] = _gf_add(poly[t + 1], poly[t], p, s)
                poly[t] = _gf_mul(poly[t], _gf_sub(0, keys[i], p, s), p, s, r0, r1, r2)
            if deg >= 0:
                deg += 1
            poly[0] = _gf_add(poly[0], table[i, kk], p, s)
            if deg < 0:
                deg = 0
            while deg > 0 and poly[deg] == 0:
                deg -= 1
        for t in range(N):
            out[t, kk] = poly[t]
    return out


@njit(cache=True)
def horner_eval_batch(coeffs, xs, p, s, r0, r1, r2):
    n = xs.shape[0]
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        out[i] = _horner_idx(coeffs, xs[i], p, s, r0, r1, r2)
    return out
