"""Arithmetic in F_p and F_{p^k} = F_p[x]/(m(x)), p < 2^31, k <= 12.

A FieldCtx is immutable and shareable; FieldElem instances are immutable
coefficient vectors in the power basis.  Extension arithmetic is dense
polynomial reduction, which is plenty at these sizes.  Canonical choices
(square roots, roots of unity) are made deterministic by the lexicographic
order on coefficient vectors.
"""

from __future__ import annotations

from .rng import SplitMix64


class ContextMismatch(TypeError):
    """Operands belong to different field contexts."""


class NoSuchRoot(ValueError):
    """Requested root of unity does not exist in the field."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FieldElem:
    """Element of a FieldCtx: tuple of k residues mod p (power basis)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: "FieldCtx", coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise ContextMismatch("elements from different field contexts")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.raw_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.raw_neg(self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.raw_sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.raw_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

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

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.raw_inv(self.coeffs))

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one
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
        return self.coeffs == o.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def to_int(self) -> int:
        """Integer encoding: sum coeffs[i] * p^i (inverse of from_int for k=1)."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.ctx.p + c
        return n

    def __repr__(self):
        if self.ctx.k == 1:
            return f"{self.coeffs[0]}"
        return f"{list(self.coeffs)}"


class FieldCtx:
    """Context for F_{p^k} with modulus m(x), monic irreducible of degree k."""

    is_field = True

    def __init__(self, p: int, k: int = 1, modulus=None, check: bool = True):
        if check and not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 1 << 31:
            raise ValueError("p must be below 2^31")
        if not 1 <= k <= 12:
            raise ValueError("extension degree must be in [1, 12]")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = find_irreducible(p, k, seed=0)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if check and k > 1 and not _is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.modulus = modulus
        # x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        self._red = tuple((-c) % p for c in modulus[:-1])
        self.zero = FieldElem(self, (0,) * k)
        self.one = FieldElem(self, (1,) + (0,) * (k - 1))
        self.gen = (
            FieldElem(self, (0, 1) + (0,) * (k - 2)) if k >= 2 else self.one
        )
        self.name = f"GF({p})" if k == 1 else f"GF({p}^{k})"

    # -- raw tuple arithmetic ------------------------------------------------

    def raw_add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def raw_sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def raw_neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def raw_mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        red = self._red
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                base = i - k
                for j, rj in enumerate(red):
                    if rj:
                        prod[base + j] += c * rj
        return tuple(c % p for c in prod[:k])

    def raw_inv(self, a):
        p, k = self.p, self.k
        if not any(a):
            raise ZeroDivisionError("division by zero field element")
        if k == 1:
            return (pow(a[0], p - 2, p),)
        # extended Euclid in F_p[x] on (a, modulus)
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [0], [1]
        while True:
            r1 = _trim(r1)
            if len(r1) == 1 and r1[0] != 0:
                c = pow(r1[0], p - 2, p)
                res = [(x * c) % p for x in s1]
                res += [0] * (k - len(res))
                return tuple(res[:k])
            if not any(r1):
                raise ZeroDivisionError("non-invertible element (bad modulus?)")
            q, r = _poly_divmod_modp(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_mul_modp(s0, q, s1, p)

    def raw_pow(self, a, n: int):
        if n < 0:
            return self.raw_pow(self.raw_inv(a), -n)
        result = self.one.coeffs
        base = a
        while n:
            if n & 1:
                result = self.raw_mul(result, base)
            base = self.raw_mul(base, base)
            n >>= 1
        return result

    # -- element construction -------------------------------------------------

    def from_int(self, n: int) -> FieldElem:
        return FieldElem(self, (n % self.p,) + (0,) * (self.k - 1))

    def from_coeffs(self, coeffs) -> FieldElem:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.k - len(coeffs))
        return FieldElem(self, tuple(c % self.p for c in coeffs))

    def coerce(self, x) -> FieldElem:
        if isinstance(x, FieldElem):
            if x.ctx is not self:
                raise ContextMismatch("foreign field element")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def exact_div(self, a, b):
        return self.coerce(a) / self.coerce(b)

    def element_by_index(self, n: int) -> FieldElem:
        """n-th element in base-p little-endian order, n in [0, q)."""
        coeffs = []
        for _ in range(self.k):
            coeffs.append(n % self.p)
            n //= self.p
        return FieldElem(self, tuple(coeffs))

    def elements(self):
        for n in range(self.q):
            yield self.element_by_index(n)

    # -- canonical special elements -------------------------------------------

    def nth_root_of_unity(self, n: int) -> FieldElem:
        """Primitive n-th root of unity; deterministic (first in index order)."""
        if n < 1:
            raise ValueError("n must be positive")
        if (self.q - 1) % n != 0:
            raise NoSuchRoot(f"{n} does not divide q-1 = {self.q - 1}")
        if n == 1:
            return self.one
        exp = (self.q - 1) // n
        prime_divs = list(_factor_int(n))
        for idx in range(2, self.q):
            g = self.element_by_index(idx)
            z = g**exp
            if z == self.one:
                continue
            if all(z ** (n // r) != self.one for r in prime_divs):
                return z
        raise NoSuchRoot("no primitive root found (unreachable for a field)")

    def sqrt(self, a: FieldElem):
        """Square root with deterministic sign, or None when a is a non-residue."""
        a = self.coerce(a)
        if not a:
            return self.zero
        q = self.q
        if self.p == 2:
            return a ** (q // 2)
        if a ** ((q - 1) // 2) != self.one:
            return None
        # Tonelli-Shanks over F_q
        s, e = q - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        if e == 1:
            r = a ** ((q + 1) // 4)
        else:
            # deterministic non-residue
            nr = None
            for idx in range(2, q):
                c = self.element_by_index(idx)
                if c and c ** ((q - 1) // 2) != self.one:
                    nr = c
                    break
            z = nr**s
            m, c, t, r = e, z, a**s, a ** ((s + 1) // 2)
            while t != self.one:
                t2 = t
                i = 0
                while t2 != self.one:
                    t2 = t2 * t2
                    i += 1
                b = c ** (1 << (m - i - 1))
                m, c = i, b * b
                t = t * c
                r = r * b
        neg = -r
        return r if r.coeffs <= neg.coeffs else neg

    def legendre(self, a: FieldElem) -> int:
        """1 for nonzero squares, -1 for non-squares, 0 for zero."""
        a = self.coerce(a)
        if not a:
            return 0
        return 1 if a ** ((self.q - 1) // 2) == self.one else -1

    def __repr__(self):
        return self.name


# -- helpers on raw coefficient lists over F_p --------------------------------


def _trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod_modp(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    _trim(a)
    _trim(b)
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(1, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        d = len(a) - len(b)
        c = a[-1] * inv_lead % p
        q[d] = c
        for i, bc in enumerate(b):
            a[d + i] = (a[d + i] - c * bc) % p
        _trim(a)
    return _trim(q), a


def _poly_sub_mul_modp(s0, q, s1, p):
    # s0 - q*s1 mod p
    prod = [0] * (len(q) + len(s1) - 1)
    for i, qi in enumerate(q):
        if qi:
            for j, sj in enumerate(s1):
                prod[i + j] = (prod[i + j] + qi * sj) % p
    out = [0] * max(len(s0), len(prod))
    for i, c in enumerate(s0):
        out[i] = c
    for i, c in enumerate(prod):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _powmod_x(e: int, m, p):
    """x^e mod m over F_p, m monic list."""
    k = len(m) - 1
    result = [1]
    base = [0, 1] if k > 1 else [_neg_const(m, p)]
    while e:
        if e & 1:
            result = _polmulmod(result, base, m, p)
        base = _polmulmod(base, base, m, p)
        e >>= 1
    return result


def _neg_const(m, p):
    return (-m[0]) % p


def _polmulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    _, r = _poly_divmod_modp(prod, list(m), p)
    return r


def _poly_gcd_modp(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while any(b):
        _, r = _poly_divmod_modp(a, b, p)
        a, b = b, r
    if any(a):
        c = pow(a[-1], p - 2, p)
        a = [x * c % p for x in a]
    return a


def _is_irreducible(m, p) -> bool:
    """m monic of degree k >= 1 over F_p."""
    k = len(m) - 1
    if k == 1:
        return True
    xq = _powmod_x(p**k, m, p)
    # x^(p^k) == x mod m
    xqx = list(xq)
    while len(xqx) < 2:
        xqx.append(0)
    xqx[1] = (xqx[1] - 1) % p
    if any(xqx):
        return False
    for r in _factor_int(k):
        xe = _powmod_x(p ** (k // r), m, p)
        xe = list(xe)
        while len(xe) < 2:
            xe.append(0)
        xe[1] = (xe[1] - 1) % p
        g = _poly_gcd_modp(xe, list(m), p)
        if len(_trim(g)) > 1:
            return False
    return True


def find_irreducible(p: int, k: int, seed: int = 0) -> tuple:
    """Monic irreducible of degree k over F_p; deterministic in the seed.

    Returned as a coefficient tuple (constant first, length k+1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return (0, 1)
    rng = SplitMix64(seed)
    while True:
        coeffs = [rng.below(p) for _ in range(k)] + [1]
        if _is_irreducible(tuple(coeffs), p):
            return tuple(coeffs)


_ctx_cache: dict[tuple, FieldCtx] = {}


def GF(p: int, k: int = 1, seed: int = 0) -> FieldCtx:
    """Cached field context with the deterministic modulus for (p, k, seed)."""
    key = (p, k, seed)
    if key not in _ctx_cache:
        _ctx_cache[key] = FieldCtx(p, k, find_irreducible(p, k, seed))
    return _ctx_cache[key]
