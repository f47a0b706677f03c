"""Places of a number field: real embeddings and finite primes.

Finite primes come from Kummer-Dedekind factorization of f mod p, certified
by Dedekind's criterion; fields whose equation order fails the criterion at
a touched prime are out of scope and raise NonMaximalOrderAtP.

Valuations use the classical valuation-element trick: beta generates
p * P^(-1) locally, so v_P(a) counts how often a * beta / p stays
p-integral.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .errors import NonMaximalOrderAtP, ZeroInput
from .fields import NumberField, integral_scale

_X = sympy.Symbol("x")


# ---------------------------------------------------------------------------
# integer lattices (column-style HNF, lower triangular)


def hnf_lattice(cols, n):
    """Lower-triangular lattice basis from generating columns (full rank)."""
    cols = [list(c) for c in cols if any(c)]
    basis = []
    for i in range(n):
        active = [c for c in cols if c[i] != 0]
        rest = [c for c in cols if c[i] == 0]
        assert active, "lattice not of full rank"
        while len(active) > 1:
            active.sort(key=lambda c: abs(c[i]))
            a, b = active[0], active[1]
            q = b[i] // a[i]
            for k in range(n):
                b[k] -= q * a[k]
            if b[i] == 0:
                rest.append(b)
                active = [active[0]] + active[2:]
        piv = active[0]
        if piv[i] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        cols = rest
    return basis


def lattice_reduce(basis, vec):
    """Canonical representative of vec modulo the lattice (entries in [0, d_i))."""
    v = list(vec)
    n = len(v)
    for i in range(n):
        q = v[i] // basis[i][i]
        if q:
            for k in range(i, n):
                v[k] -= q * basis[i][k]
    return tuple(v)


def lattice_contains(basis, vec):
    return all(x == 0 for x in lattice_reduce(basis, vec))


def lattice_index(basis):
    out = 1
    for i, b in enumerate(basis):
        out *= b[i]
    return out


def lattice_cosets(basis):
    """All coset representatives of Z^n modulo the lattice."""
    n = len(basis)
    reps = [tuple([0] * n)]
    for i in range(n):
        d = basis[i][i]
        reps = [
            tuple(r[k] + (c if k == i else 0) for k in range(n))
            for r in reps
            for c in range(d)
        ]
    return reps


def ideal_lattice(K, gens):
    """Z-lattice of the ideal generated by field elements with int coords."""
    n = K.degree
    theta = K.gen()
    cols = []
    for g in gens:
        cur = g
        for _ in range(n):
            cols.append([int(c) for c in cur.coeffs])
            cur = cur * theta
    return hnf_lattice(cols, n)


def lattice_multiply(K, lat1, lat2):
    n = K.degree
    els1 = [K.element(b) for b in lat1]
    els2 = [K.element(b) for b in lat2]
    cols = [[int(c) for c in (a * b).coeffs] for a in els1 for b in els2]
    return hnf_lattice(cols, n)


def lattice_power(K, lat, k):
    assert k >= 0
    n = K.degree
    result = hnf_lattice([[1 if i == j else 0 for i in range(n)] for j in range(n)], n)
    base = lat
    while k:
        if k & 1:
            result = lattice_multiply(K, result, base)
        base = lattice_multiply(K, base, base)
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# real places via Sturm sequences


def _sturm_chain(coeffs):
    f = [Fraction(c) for c in coeffs]
    df = [Fraction(i * c) for i, c in enumerate(coeffs)][1:]
    chain = [f, df]
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _poly_rem(a, b):
    a = list(a)
    inv = Fraction(1) / b[-1]
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv
        d = len(a) - len(b)
        for i in range(len(b)):
            a[d + i] -= c * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _eval_frac(coeffs, x):
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _sign_changes(chain, x):
    signs = []
    for poly in chain:
        v = _eval_frac(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class RealPlace:
    """A real embedding of K, identified by an isolating interval of a root."""

    kind = "real"

    def __init__(self, field, index, lo, hi):
        self.field = field
        self.index = index
        self.lo = lo
        self.hi = hi
        self._chain = None

    def refine(self):
        """Halve the isolating interval, keeping the root inside."""
        f = [Fraction(c) for c in self.field.poly]
        mid = (self.lo + self.hi) / 2
        if _eval_frac(f, mid) == 0:
            mid = self.lo + (self.hi - self.lo) * Fraction(1, 3)
        flo = _eval_frac(f, self.lo)
        fmid = _eval_frac(f, mid)
        if (flo > 0) != (fmid > 0):
            self.hi = mid
        else:
            self.lo = mid

    def __repr__(self):
        return f"RealPlace({self.index}: ({self.lo}, {self.hi}))"

    def __eq__(self, other):
        return (
            isinstance(other, RealPlace)
            and other.field == self.field
            and other.index == self.index
        )

    def __hash__(self):
        return hash((self.field.poly, "real", self.index))

    def to_json(self):
        return {
            "kind": "real",
            "index": self.index,
            "interval": [str(self.lo), str(self.hi)],
        }


def real_places(K):
    """All real places of K, roots isolated by Sturm-sequence bisection."""
    if K._real_places is not None:
        return list(K._real_places)
    coeffs = [Fraction(c) for c in K.poly]
    chain = _sturm_chain(K.poly)
    bound = Fraction(1) + max(abs(c) for c in coeffs[:-1]) / abs(coeffs[-1])
    intervals = []

    def count(lo, hi):
        return _sign_changes(chain, lo) - _sign_changes(chain, hi)

    def isolate(lo, hi):
        k = count(lo, hi)
        if k == 0:
            return
        if k == 1:
            intervals.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if _eval_frac(coeffs, mid) == 0:
            mid = lo + (hi - lo) * Fraction(1, 3)
        isolate(lo, mid)
        isolate(mid, hi)

    isolate(-bound, bound)
    intervals.sort()
    places = [RealPlace(K, i, lo, hi) for i, (lo, hi) in enumerate(intervals)]
    K._real_places = places
    return list(places)


# ---------------------------------------------------------------------------
# finite places


class FinitePlace:
    """A prime of K above p, given by its two-element form (p, g(theta))."""

    kind = "finite"

    def __init__(self, field, p, gpoly, e, f_deg):
        self.field = field
        self.p = p
        self.gpoly = tuple(gpoly)  # monic integer lift, ascending coefficients
        self.e = e
        self.f_deg = f_deg
        self._lattice = None
        self._beta = None
        self._pi = None
        self._powers = {}

    @property
    def dyadic(self):
        return self.p == 2

    def generator_element(self):
        return self.field.element(self.gpoly)

    def lattice(self):
        if self._lattice is None:
            K = self.field
            self._lattice = ideal_lattice(
                K, [K.from_rational(self.p), self.generator_element()]
            )
        return self._lattice

    def power_lattice(self, k):
        if k not in self._powers:
            self._powers[k] = lattice_power(self.field, self.lattice(), k)
        return self._powers[k]

    def beta(self):
        """Valuation element: generates p * P^(-1) up to p-units."""
        if self._beta is None:
            K = self.field
            n = K.degree
            lat = None
            for Q in decompose_prime(K, self.p):
                k = Q.e - 1 if Q == self else Q.e
                if k == 0:
                    continue
                qlat = Q.power_lattice(k)
                lat = qlat if lat is None else lattice_multiply(K, lat, qlat)
            if lat is None:
                self._beta = K.one()
            else:
                col = next(
                    b for b in lat if any(x % self.p for x in b)
                )
                self._beta = K.element(col)
        return self._beta

    def uniformizer(self):
        """Element with valuation 1 here and 0 at the other primes above p."""
        if self._pi is not None:
            return self._pi
        K = self.field
        p = K.from_rational(self.p)
        g = self.generator_element()
        siblings = [Q for Q in decompose_prime(K, self.p) if Q != self]
        candidates = [g, g + p, g - p, p]
        theta = K.gen()
        for c0 in range(0, 3):
            for c1 in range(0, 3):
                candidates.append(g + p * (K.from_rational(c0) + theta * c1))
        for cand in candidates:
            if cand.is_zero():
                continue
            if self._val_integral(cand) != 1:
                continue
            if all(Q._val_integral(cand) == 0 for Q in siblings):
                self._pi = cand
                return cand
        raise AssertionError(f"no uniformizer found for {self}")

    # -- valuation ----------------------------------------------------------

    def _p_integral(self, elem):
        return all(c.denominator % self.p for c in elem.coeffs)

    def _val_integral(self, elem):
        """v_P for a p-integral element (denominators coprime to p)."""
        beta = self.beta()
        pinv = Fraction(1, self.p)
        cur = elem
        k = 0
        while True:
            nxt = (cur * beta) * pinv
            if not self._p_integral(nxt):
                return k
            cur = nxt
            k += 1

    def valuation(self, a):
        if a.is_zero():
            raise ZeroInput("valuation of zero")
        d = a.denominator_lcm()
        t = 0
        while d % self.p == 0:
            d //= self.p
            t += 1
        scaled = a * (self.p ** t) * d  # p-integral now
        return self._val_integral(scaled) - self.e * t

    # -- plumbing -----------------------------------------------------------

    def __repr__(self):
        from .fields import format_polynomial

        return f"FinitePlace(p={self.p}, g={format_polynomial(self.gpoly)}, e={self.e}, f={self.f_deg})"

    def __eq__(self, other):
        return (
            isinstance(other, FinitePlace)
            and other.field == self.field
            and other.p == self.p
            and other.gpoly == self.gpoly
        )

    def __hash__(self):
        return hash((self.field.poly, self.p, self.gpoly))

    def to_json(self):
        from .fields import format_element

        return {
            "kind": "finite",
            "p": self.p,
            "e": self.e,
            "f": self.f_deg,
            "pi": format_element(self.uniformizer()),
        }


def _monic_lift(spoly_factor, p):
    """Lift a GF(p) factor to Z[x] with coefficients in [0, p)."""
    cs = [int(c) % p for c in reversed(spoly_factor.all_coeffs())]
    cs[-1] = 1
    return cs


def _dedekind_check(K, p, factors):
    """Dedekind's criterion: is Z[theta] maximal at p?"""
    fx = sympy.Poly(list(reversed(K.poly)), _X)
    g = sympy.Poly(1, _X)
    h = sympy.Poly(1, _X)
    for lift, e in factors:
        gi = sympy.Poly(list(reversed(lift)), _X)
        g = g * gi
        h = h * gi ** (e - 1)
    T = (g * h - fx).quo(sympy.Poly(p, _X))
    gp = sympy.Poly(g, _X, modulus=p)
    hp = sympy.Poly(h, _X, modulus=p)
    Tp = sympy.Poly(T, _X, modulus=p)
    d = sympy.gcd(sympy.gcd(Tp, gp), hp)
    return d.total_degree() == 0


def decompose_prime(K, p):
    """Primes of K above p by Kummer-Dedekind, certified index-free."""
    p = int(p)
    if p in K._finite_places:
        return list(K._finite_places[p])
    fp = sympy.Poly(list(reversed(K.poly)), _X, modulus=p)
    factors = []
    for fac, e in sorted(
        fp.factor_list()[1], key=lambda t: (t[0].degree(), t[0].all_coeffs())
    ):
        factors.append((_monic_lift(fac, p), e))
    if any(e > 1 for _, e in factors):
        if not _dedekind_check(K, p, factors):
            raise NonMaximalOrderAtP(p)
    places = [
        FinitePlace(K, p, lift, e, len(lift) - 1) for lift, e in factors
    ]
    assert sum(P.e * P.f_deg for P in places) == K.degree
    K._finite_places[p] = places
    return list(places)


def dyadic_places(K):
    return PlaceSet(decompose_prime(K, 2))


def valuation(a, P):
    return P.valuation(a)


class PlaceSet:
    """Ordered duplicate-free list of finite places (the set S)."""

    def __init__(self, places=()):
        self.places = []
        for P in places:
            self.add(P)

    def add(self, P):
        if P not in self.places:
            self.places.append(P)

    def __contains__(self, P):
        return P in self.places

    def __iter__(self):
        return iter(self.places)

    def __len__(self):
        return len(self.places)

    def __getitem__(self, i):
        return self.places[i]

    def union(self, other):
        out = PlaceSet(self.places)
        for P in other:
            out.add(P)
        return out

    def __repr__(self):
        return f"PlaceSet({self.places})"


def odd_support(a):
    """Finite primes where a has odd valuation."""
    if a.is_zero():
        raise ZeroInput("odd_support of zero")
    K = a.parent
    d = a.denominator_lcm()
    _, b = integral_scale(a)
    nrm = b.norm()
    primes = set(sympy.factorint(abs(nrm.numerator)).keys())
    primes |= set(sympy.factorint(d).keys())
    out = PlaceSet()
    for p in sorted(int(q) for q in primes):
        for P in decompose_prime(K, p):
            if P.valuation(a) % 2:
                out.add(P)
    return out
