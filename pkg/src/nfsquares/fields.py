"""Exact arithmetic in a number field K = Q[x]/(f).

Elements are stored by their coordinates in the power basis 1, theta, ...,
theta^(n-1), each coordinate a Fraction in lowest terms, so equality is
plain coefficient comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction

import mpmath
import sympy

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonMonic,
    ParseError,
    ReduciblePolynomial,
    ZeroInput,
)

_X = sympy.Symbol("x")


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists in ascending order)

def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_mod(a, f):
    # f monic; reduce a modulo f
    a = list(a)
    n = len(f) - 1
    while len(a) > n:
        c = a[-1]
        if c:
            d = len(a) - 1 - n
            for i in range(n):
                a[d + i] -= c * f[i]
        a.pop()
    return _poly_trim(a)


def _poly_divmod(a, b):
    # b nonzero, exact division with remainder over Q
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i in range(len(b)):
            a[d + i] -= c * b[i]
        a.pop()
    return q, _poly_trim(a)


def _poly_ext_gcd_inverse(a, f):
    # inverse of a modulo f (f irreducible, a not divisible by f)
    r0, r1 = list(f), list(a)
    s0, s1 = [], [Fraction(1)]
    while True:
        r1 = _poly_trim(r1)
        if len(r1) == 1:
            c = r1[0]
            return [x / c for x in s1]
        q, r = _poly_divmod(r0, r1)
        s = _poly_sub(s0, _poly_mul(q, s1))
        r0, s0 = r1, s1
        r1, s1 = r, s


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


# ---------------------------------------------------------------------------


class NumberField:
    """K = Q[x]/(f) for a monic irreducible integer polynomial f."""

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        coeffs = _poly_trim(coeffs)
        if len(coeffs) < 2:
            raise ParseError("defining polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise NonMonic(f"defining polynomial is not monic: {coeffs}")
        self.poly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        spoly = sympy.Poly(list(reversed(coeffs)), _X, domain="QQ")
        if self.degree > 1 and not spoly.is_irreducible:
            raise ReduciblePolynomial(f"{spoly.as_expr()} factors over Q")
        self.discriminant = int(sympy.discriminant(spoly.as_expr(), _X))
        self._spoly = spoly
        # caches populated lazily by other modules
        self._embeddings = {}
        self._real_places = None
        self._finite_places = {}
        self._unit_data = None
        self._class_group = None
        self._sing_cache = {}
        self._symbol_cache = {}
        self._dyadic_ctx = {}
        self._level = None

    @property
    def defining_polynomial(self):
        return self.poly

    # -- constructors -------------------------------------------------------

    def element(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        cs = _poly_mod(cs, [Fraction(c) for c in self.poly])
        cs = cs + [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self):
        return self.element([0])

    def one(self):
        return self.element([1])

    def gen(self):
        return self.element([0, 1])

    def from_rational(self, q):
        return self.element([Fraction(q)])

    # -- misc ---------------------------------------------------------------

    def embeddings(self, dps):
        """All complex roots of f at the given working precision.

        Returns (roots, conj) where conj[i] is the index of the complex
        conjugate root (i itself for real roots).
        """
        if dps in self._embeddings:
            return self._embeddings[dps]
        with mpmath.workdps(dps):
            roots = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(self.poly)],
                maxsteps=200, extraprec=80,
            )
            tol = mpmath.mpf(10) ** (-dps // 2)
            cleaned = []
            for r in roots:
                if abs(mpmath.im(r)) < tol:
                    cleaned.append(mpmath.mpf(mpmath.re(r)))
                else:
                    cleaned.append(r)
            conj = list(range(len(cleaned)))
            for i, r in enumerate(cleaned):
                if mpmath.im(r) > 0:
                    for j, s in enumerate(cleaned):
                        if mpmath.im(s) < 0 and abs(mpmath.conj(r) - s) < tol:
                            conj[i], conj[j] = j, i
        self._embeddings[dps] = (cleaned, conj)
        return self._embeddings[dps]

    def __repr__(self):
        return f"NumberField({format_polynomial(self.poly)})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)


class FieldElement:
    """An element of a NumberField, in canonical (reduced) form."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self):
        assert self.is_rational()
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.parent.from_rational(other)
        if not isinstance(other, FieldElement) or other.parent != self.parent:
            raise FieldMismatch("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(
            self.parent,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(
            self.parent,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        return FieldElement(self.parent, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        return self.parent.element(_poly_mul(list(self.coeffs), list(other.coeffs)))

    def __truediv__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def __rtruediv__(self, other):
        return self.parent.from_rational(other) / self

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        f = [Fraction(c) for c in self.parent.poly]
        inv = _poly_ext_gcd_inverse(list(self.coeffs), f)
        return self.parent.element(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.parent.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.parent.from_rational(other)
        return (
            isinstance(other, FieldElement)
            and other.parent == self.parent
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.parent.poly, self.coeffs))

    # -- invariants ---------------------------------------------------------

    def norm(self):
        """Field norm N(a) as an exact rational (det of mult-by-a matrix)."""
        n = self.parent.degree
        cols = []
        theta = self.parent.gen()
        cur = self
        for j in range(n):
            cols.append(list(cur.coeffs))
            cur = cur * theta
        # det of n x n matrix with columns cols
        m = [[cols[j][i] for j in range(n)] for i in range(n)]
        return _det_fractions(m)

    def denominator_lcm(self):
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def numeric(self, dps=30):
        """Images of the element under all complex embeddings."""
        roots, _ = self.parent.embeddings(dps)
        with mpmath.workdps(dps):
            return [_eval_poly(self.coeffs, r) for r in roots]

    def __repr__(self):
        return format_element(self)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _det_fractions(m):
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def _eval_poly(coeffs, x):
    out = mpmath.mpf(0)
    for c in reversed(coeffs):
        out = out * x + mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
    return out


# ---------------------------------------------------------------------------
# spec-level operations


def field_create(coeffs):
    """Create a number field from the ascending coefficient list of f."""
    return NumberField(coeffs)


def elem_arith(a, b, op):
    """Functional arithmetic entry point: op in {add, sub, mul, div}."""
    return {
        "add": a.__add__,
        "sub": a.__sub__,
        "mul": a.__mul__,
        "div": a.__truediv__,
    }[op](b)


def _rational_sqrt(q):
    if q < 0:
        return None
    num = sympy.integer_nthroot(q.numerator, 2)
    den = sympy.integer_nthroot(q.denominator, 2)
    if num[1] and den[1]:
        return Fraction(num[0], den[0])
    return None


def is_square(a, max_dps=300):
    """Square root of a in K if one exists, else None.

    Candidate roots are reconstructed from complex embeddings (one sign
    choice per real root / conjugate pair) and certified by exact squaring,
    so precision only affects completeness, never soundness.  The returned
    root has its first nonzero coordinate positive.
    """
    if a.is_zero():
        raise ZeroInput("is_square requires a nonzero element")
    K = a.parent
    if a.is_rational():
        r = _rational_sqrt(a.as_rational())
        if r is not None:
            return K.from_rational(r)
        if K.degree == 1:
            return None
    dps = 60
    while dps <= max_dps:
        r = _sqrt_by_embeddings(a, dps)
        if r is not None:
            return r
        dps *= 2
    return None


def _sqrt_by_embeddings(a, dps):
    K = a.parent
    n = K.degree
    roots, conj = K.embeddings(dps)
    with mpmath.workdps(dps):
        vals = [_eval_poly(a.coeffs, r) for r in roots]
        base = [mpmath.sqrt(v) for v in vals]
        # orbits: one free sign per real root or conjugate pair
        orbits = []
        seen = set()
        for i in range(n):
            if i in seen:
                continue
            seen.add(i)
            if conj[i] != i:
                seen.add(conj[i])
            orbits.append(i)
        V = mpmath.matrix(n, n)
        for i in range(n):
            p = mpmath.mpf(1)
            for k in range(n):
                V[i, k] = p
                p = p * roots[i]
        den_bound = 10 ** max(6, dps // 3)
        for mask in range(1 << len(orbits)):
            s = [None] * n
            for bit, i in enumerate(orbits):
                v = base[i] if not (mask >> bit) & 1 else -base[i]
                s[i] = v
                if conj[i] != i:
                    s[conj[i]] = mpmath.conj(v)
            try:
                c = mpmath.lu_solve(V, mpmath.matrix(s))
            except ZeroDivisionError:
                return None
            coeffs = []
            ok = True
            tol = mpmath.mpf(10) ** (-dps // 3)
            for k in range(n):
                x = c[k]
                if abs(mpmath.im(x)) > tol:
                    ok = False
                    break
                coeffs.append(_rationalize(mpmath.re(x), dps, den_bound))
            if not ok:
                continue
            cand = K.element(coeffs)
            if cand * cand == a:
                return _canonical_root(cand)
    return None


def _rationalize(x, dps, den_bound):
    scale = 10 ** (dps - 10)
    num = int(mpmath.nint(x * scale))
    return Fraction(num, scale).limit_denominator(den_bound)


def _canonical_root(r):
    for c in r.coeffs:
        if c != 0:
            return -r if c < 0 else r
    return r


def integral_scale(a):
    """Minimal positive integer m with m^2 * a integral, and that product.

    Only even valuation changes are introduced, so the square class and
    all valuation parities of a are preserved.
    """
    if a.is_zero():
        raise ZeroInput("integral_scale requires a nonzero element")
    d = a.denominator_lcm()
    m = 1
    for p, e in sympy.factorint(d).items():
        m *= int(p) ** ((e + 1) // 2)
    return m, a * (m * m)


# ---------------------------------------------------------------------------
# shared text syntax: polynomials in x with rational coefficients

_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)(?:\*?(?P<var1>x)(?:\^(?P<exp1>\d+))?)?"
    r"|(?P<var2>x)(?:\^(?P<exp2>\d+))?)$"
)


def parse_polynomial(text):
    """Parse `3/2*x^2 - x + 5` into an ascending Fraction coefficient list."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    # split into signed terms
    terms = []
    sign = 1
    buf = ""
    for ch in s:
        if ch in "+-" and buf:
            terms.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf:
            if ch == "-":
                sign = -sign
        else:
            buf += ch
    if not buf:
        raise ParseError(f"trailing operator in {text!r}")
    terms.append((sign, buf))
    coeffs = {}
    for sign, term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"bad term {term!r} in {text!r}")
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            if m.group("var1"):
                exp = int(m.group("exp1") or 1)
            else:
                exp = 0
        else:
            coef = Fraction(1)
            exp = int(m.group("exp2") or 1)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    deg = max(coeffs)
    return [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]


def parse_field(text):
    cs = parse_polynomial(text)
    for c in cs:
        if c.denominator != 1:
            raise ParseError("defining polynomial must have integer coefficients")
    return NumberField([int(c) for c in cs])


def parse_element(K, text):
    return K.element(parse_polynomial(text))


def _fmt_coef(c):
    return str(c) if c.denominator != 1 else str(c.numerator)


def format_polynomial(coeffs):
    coeffs = [Fraction(c) for c in coeffs]
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_coef(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{_fmt_coef(mag)}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def format_element(elem):
    return format_polynomial(elem.coeffs)
