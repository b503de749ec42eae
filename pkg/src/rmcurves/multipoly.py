"""Sparse multivariate polynomials and exact elimination.

MultiPoly maps exponent tuples to nonzero coefficients over any of the
package's exact rings.  Resultants are fraction-free Sylvester determinants
(Bareiss), which stay exact over non-field coefficient rings like ZZ;
reduce_mod is successive euclidean remainder in a chosen variable against
relations that are monic (up to a unit) in that variable.
"""

from __future__ import annotations


class ZeroPolynomial(ArithmeticError):
    """Resultant input is zero in the elimination variable."""


class NonMonicRelation(ArithmeticError):
    """reduce_mod relation is not monic (up to a unit) in its variable."""


class MultiPoly:
    """Sparse polynomial in named variables over an exact ring."""

    __slots__ = ("ring", "vars", "terms")

    def __init__(self, ring, variables, terms=None):
        self.ring = ring
        self.vars = tuple(variables)
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = ring.coerce(c)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(ring, variables) -> "MultiPoly":
        return MultiPoly(ring, variables)

    @staticmethod
    def const(ring, variables, c) -> "MultiPoly":
        return MultiPoly(ring, variables, {(0,) * len(variables): c})

    @staticmethod
    def var(ring, variables, name) -> "MultiPoly":
        i = tuple(variables).index(name)
        exp = [0] * len(variables)
        exp[i] = 1
        return MultiPoly(ring, variables, {tuple(exp): ring.one})

    def _vi(self, name: str) -> int:
        return self.vars.index(name)

    # -- structure ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self._vi(name)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coeff_of(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of name^power, as a MultiPoly with that exponent zeroed."""
        i = self._vi(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MultiPoly(self.ring, self.vars, out)

    def as_univariate_in(self, name: str) -> list["MultiPoly"]:
        """Coefficient list (low to high) as a polynomial in one variable."""
        d = self.degree_in(name)
        return [self.coeff_of(name, j) for j in range(d + 1)]

    def uses_var(self, name: str) -> bool:
        i = self._vi(name)
        return any(e[i] for e in self.terms)

    # -- arithmetic ----------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("mixed variable sets")
            return other
        try:
            return MultiPoly.const(self.ring, self.vars, self.ring.coerce(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, self.ring.zero) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.ring, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, self.vars, {e: -c for e, c in self.terms.items()})

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
        out: dict = {}
        zero = self.ring.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, zero) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.ring, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.ring, self.vars, self.ring.one)
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
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- monomial-order division (for Bareiss) ----------------------------------------

    def _leading(self):
        e = max(self.terms)  # lex on exponent tuples
        return e, self.terms[e]

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact division; raises ArithmeticError if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        ring = self.ring
        rem = dict(self.terms)
        out: dict = {}
        le, lc = other._leading()
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, le))
            if any(x < 0 for x in qe):
                raise ArithmeticError("inexact multivariate division")
            qc = ring.exact_div(c, lc)
            out[qe] = out.get(qe, ring.zero) + qc
            for oe, oc in other.terms.items():
                t = tuple(a + b for a, b in zip(qe, oe))
                s = rem.get(t, ring.zero) - qc * oc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return MultiPoly(ring, self.vars, out)

    # -- substitution -------------------------------------------------------------------

    def subst(self, name: str, value) -> "MultiPoly":
        """Substitute a MultiPoly (or constant) for a variable."""
        i = self._vi(name)
        if not isinstance(value, MultiPoly):
            value = MultiPoly.const(self.ring, self.vars, value)
        out = MultiPoly.zero(self.ring, self.vars)
        powers = {0: MultiPoly.const(self.ring, self.vars, self.ring.one)}

        def power(n):
            if n not in powers:
                powers[n] = power(n - 1) * value
            return powers[n]

        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            term = MultiPoly(self.ring, self.vars, {tuple(e2): c})
            out = out + term * power(k)
        return out

    def replace_power(self, name: str, m: int, newname: str) -> "MultiPoly":
        """Rewrite name^(m*j) as newname^j; fails if an exponent is not a multiple."""
        i = self._vi(name)
        j = self._vi(newname)
        out = {}
        for e, c in self.terms.items():
            if e[i] % m:
                raise ArithmeticError(f"exponent of {name} not a multiple of {m}")
            e2 = list(e)
            e2[j] += e2[i] // m
            e2[i] = 0
            out[tuple(e2)] = c
        return MultiPoly(self.ring, self.vars, out)

    def evaluate(self, assignment: dict):
        """Full evaluation from a {var: ring element} map."""
        total = self.ring.zero
        vals = [assignment[v] for v in self.vars]
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def map_coeffs(self, func, new_ring) -> "MultiPoly":
        return MultiPoly(new_ring, self.vars, {e: func(c) for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "MP(0)"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return "MP(" + " + ".join(parts) + ")"


# -- elimination -----------------------------------------------------------------------


def resultant(f: MultiPoly, g: MultiPoly, name: str) -> MultiPoly:
    """Res in the given variable: Sylvester determinant by fraction-free Bareiss."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of zero polynomial")
    m = f.degree_in(name)
    n = g.degree_in(name)
    if m < 1 and n < 1:
        return MultiPoly.const(f.ring, f.vars, f.ring.one)
    fc = f.as_univariate_in(name)
    gc = g.as_univariate_in(name)
    size = m + n
    ring = f.ring
    zero = MultiPoly.zero(ring, f.vars)
    mat = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        mat.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        mat.append(row)
    return _bareiss_det(mat, ring, f.vars)


def _bareiss_det(mat, ring, variables) -> MultiPoly:
    n = len(mat)
    if n == 0:
        return MultiPoly.const(ring, variables, ring.one)
    sign = 1
    prev = MultiPoly.const(ring, variables, ring.one)
    for k in range(n - 1):
        if mat[k][k].is_zero():
            pivot_row = None
            for i in range(k + 1, n):
                if not mat[i][k].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return MultiPoly.zero(ring, variables)
            mat[k], mat[pivot_row] = mat[pivot_row], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = num.exact_div(prev)
            mat[i][k] = MultiPoly.zero(ring, variables)
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    return -det if sign < 0 else det


def reduce_mod(f: MultiPoly, relations) -> MultiPoly:
    """Successive euclidean remainder by (relation, variable) pairs.

    Each relation must be monic up to a unit constant in its variable.
    """
    for rel, name in relations:
        f = _euclid_rem(f, rel, name)
    return f


def _euclid_rem(f: MultiPoly, rel: MultiPoly, name: str) -> MultiPoly:
    d = rel.degree_in(name)
    if d < 1:
        raise NonMonicRelation("relation constant in its variable")
    lead = rel.coeff_of(name, d)
    if lead.total_degree() != 0:
        raise NonMonicRelation("relation leading coefficient is not a unit")
    lc = lead.terms[(0,) * len(f.vars)]
    ring = f.ring
    try:
        lc_inv = ring.exact_div(ring.one, lc)
    except ArithmeticError as exc:
        raise NonMonicRelation("leading coefficient not invertible") from exc
    i = f._vi(name)
    while True:
        df = f.degree_in(name)
        if df < d:
            return f
        top = f.coeff_of(name, df)
        if top.is_zero():
            return f
        shift = [0] * len(f.vars)
        shift[i] = df - d
        factor = MultiPoly(ring, f.vars, {tuple(shift): lc_inv}) * top
        f = f - factor * rel
