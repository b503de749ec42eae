"""Gaussian periods, their minimal polynomials, and trace-field identification.

All computations are exact over the integers.  Arithmetic with l-th roots
of unity happens in Z[x]/(Phi_l) with Phi_l = 1 + x + ... + x^(l-1); the
minimal polynomial of a period is found by exact rational linear algebra
on its powers.

Field identification (rm_field_check) is a splitting-pattern census: for a
degree-(l-1)/n polynomial f, the field Q[r]/(f) equals the index-n subfield
of the l-th cyclotomic field exactly when primes split completely in it iff
their residue mod l lies in the order-n subgroup of (Z/lZ)*.  The census is
bounded, so a clean sweep plus an irreducibility witness reports Pass, a
violation reports Fail with the witness prime, and a sweep without any
irreducibility witness reports Inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import GF, is_prime
from .poly import UniPoly, count_roots, is_irreducible_poly, poly_gcd, resultant_univ
from .rings import QQ, ZZ


class DegreeMismatch(ValueError):
    """Trace polynomial degree does not match (l-1)/n."""


def primitive_root(l: int) -> int:
    """Smallest primitive root mod an odd prime l."""
    phi = l - 1
    factors = []
    n = phi
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for g in range(2, l):
        if all(pow(g, phi // f, l) != 1 for f in factors):
            return g
    raise ValueError(f"{l} has no primitive root (not prime?)")


def order_mod(a: int, l: int) -> int:
    a %= l
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    o, x = 1, a
    while x != 1:
        x = x * a % l
        o += 1
    return o


def subgroup_of_order_n(l: int, n: int) -> set[int]:
    """The unique subgroup of (Z/lZ)* of order n (n | l-1)."""
    if (l - 1) % n:
        raise ValueError(f"{n} does not divide {l - 1}")
    g = primitive_root(l)
    k = pow(g, (l - 1) // n, l)
    out, x = set(), 1
    for _ in range(n):
        out.add(x)
        x = x * k % l
    return out


def canonical_order_n_element(l: int, n: int) -> int:
    """Smallest element of (Z/lZ)* of multiplicative order exactly n."""
    if (l - 1) % n:
        raise ValueError(f"{n} does not divide {l - 1}")
    for a in range(1, l):
        if order_mod(a, l) == n:
            return a
    raise ValueError("unreachable")


# -- arithmetic in Z[x]/(Phi_l) -------------------------------------------------


def _cyc_reduce(vec: list[Fraction], l: int) -> list[Fraction]:
    """Reduce a coefficient list of zeta-powers to the basis 1..zeta^(l-2)."""
    out = list(vec[: l - 1]) + [Fraction(0)] * max(0, l - 1 - len(vec))
    for i in range(l - 1, len(vec)):
        e = i % l
        c = vec[i]
        if not c:
            continue
        if e == l - 1:
            for j in range(l - 1):
                out[j] -= c
        else:
            out[e] += c
    return out


def _cyc_mul(a: list[Fraction], b: list[Fraction], l: int) -> list[Fraction]:
    prod = [Fraction(0)] * (2 * l)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[(i + j) % l] += x * y
    return _cyc_reduce(prod, l)


@dataclass(frozen=True)
class PeriodField:
    """The degree-(l-1)/n field generated by an n-term Gaussian period."""

    l: int
    n: int
    k: int
    min_poly: UniPoly  # over ZZ, monic, degree (l-1)/n


def period_vector(l: int, n: int) -> list[Fraction]:
    """The period sum_{i<n} zeta^(k^i) in the power basis of Z[x]/(Phi_l)."""
    k = canonical_order_n_element(l, n)
    vec = [Fraction(0)] * l
    e = 1
    for _ in range(n):
        vec[e] += 1
        e = e * k % l
    return _cyc_reduce(vec, l)


def period_min_poly(l: int, n: int) -> PeriodField:
    """Minimal polynomial of the n-term period, by linear-dependency search."""
    if not is_prime(l) or l == 2:
        raise ValueError("l must be an odd prime")
    if (l - 1) % n:
        raise ValueError(f"{n} does not divide {l - 1}")
    k = canonical_order_n_element(l, n)
    d = (l - 1) // n
    eta = period_vector(l, n)
    powers = [[Fraction(1)] + [Fraction(0)] * (l - 2)]
    for _ in range(d):
        powers.append(_cyc_mul(powers[-1], eta, l))
    # solve powers[d] = -sum_{j<d} c_j powers[j]
    rows = l - 1
    mat = [[powers[j][i] for j in range(d)] + [-powers[d][i]] for i in range(rows)]
    sol = _solve_exact(mat, d)
    if sol is None:
        raise ArithmeticError("period powers unexpectedly independent")
    coeffs = []
    for c in sol:
        if c.denominator != 1:
            raise ArithmeticError("period minimal polynomial not integral")
        coeffs.append(c.numerator)
    coeffs.append(1)
    return PeriodField(l, n, k, UniPoly(ZZ, coeffs))


def _solve_exact(mat: list[list[Fraction]], ncols: int):
    """Solve an overdetermined consistent system by Gaussian elimination."""
    rows = [list(r) for r in mat]
    nrows = len(rows)
    piv = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            return None
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == ncols:
            break
    if r < ncols:
        return None
    for i in range(r, nrows):
        if rows[i][ncols]:
            return None  # inconsistent
    return [rows[i][ncols] for i in range(ncols)]


def g_poly(l: int) -> UniPoly:
    """Monic integer minimal polynomial of -zeta_l - zeta_l^(-1)."""
    if l == 3:
        return UniPoly(ZZ, [-1, 1])  # w - 1
    pf = period_min_poly(l, 2)
    d = (l - 1) // 2
    # g(w) = (-1)^d * P(-w)
    coeffs = [(-1) ** (d + i) * pf.min_poly[i] for i in range(d + 1)]
    return UniPoly(ZZ, coeffs)


def check_g_identity(l: int) -> bool:
    """z^(2l) + 1 == z^l (z + 1/z) g_l(z^2 + 1/z^2), exactly as Laurent polynomials."""
    g = g_poly(l)
    # Laurent polynomials as {exponent: int}
    def lmul(a, b):
        out: dict[int, int] = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return {k: v for k, v in out.items() if v}

    u = {2: 1, -2: 1}  # z^2 + z^-2
    acc = {0: 1}
    rhs: dict[int, int] = {}
    gc = [g[i] for i in range(g.degree + 1)]
    for i, c in enumerate(gc):
        if c:
            for e, v in acc.items():
                rhs[e] = rhs.get(e, 0) + c * v
        if i < len(gc) - 1:
            acc = lmul(acc, u)
    rhs = lmul(rhs, {1: 1, -1: 1})
    rhs = lmul(rhs, {l: 1})
    rhs = {k: v for k, v in rhs.items() if v}
    return rhs == {2 * l: 1, 0: 1}


# -- trace-field identification ----------------------------------------------------


@dataclass(frozen=True)
class RMCheckResult:
    status: str  # "Pass" | "Fail" | "Inconclusive"
    witness: int | None = None  # failing prime, or the irreducibility witness
    checked: int = 0

    def __bool__(self):
        return self.status == "Pass"


def rm_field_check(f: UniPoly, l: int, n: int, q_bound: int = 500) -> RMCheckResult:
    """Census check that Q[r]/(f) is the index-n subfield of Q(zeta_l).

    f must be monic with integer coefficients, squarefree, of degree (l-1)/n.
    """
    d = (l - 1) // n
    if f.degree != d:
        raise DegreeMismatch(f"degree {f.degree}, expected {d}")
    fq = f.map_coeffs(lambda c: Fraction(c), QQ)
    if poly_gcd(fq, fq.derivative()).degree > 0:
        raise ValueError("f is not squarefree")
    disc = resultant_univ(fq, fq.derivative())
    disc_num = abs(disc.numerator)
    subgroup = subgroup_of_order_n(l, n)
    witness = None
    checked = 0
    for q in range(2, q_bound + 1):
        if not is_prime(q):
            continue
        if q == l or disc_num % q == 0:
            continue
        ctx = GF(q)
        fbar = f.map_coeffs(lambda c: ctx.from_int(c % q), ctx)
        checked += 1
        nroots = count_roots(fbar)
        splits = nroots == d
        in_subgroup = (q % l) in subgroup
        if splits != in_subgroup:
            return RMCheckResult("Fail", witness=q, checked=checked)
        if witness is None and is_irreducible_poly(fbar):
            witness = q
    if witness is None:
        return RMCheckResult("Inconclusive", checked=checked)
    return RMCheckResult("Pass", witness=witness, checked=checked)
