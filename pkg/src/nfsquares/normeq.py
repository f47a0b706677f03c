"""Norm equations d1^2 - delta*d2^2 = b over quadratic extensions K(sqrt(delta)).

Solver layout: degenerate linear path when delta is a square; a local
solvability filter (Hilbert symbols at the relevant places plus real sign
conditions); a graded height-ball search that returns the minimal-height
solution; and, over Q, a ternary-quadratic fallback for instances whose
smallest solution lies beyond the graded search.
"""

from __future__ import annotations

from fractions import Fraction

import sympy
from sympy.abc import x as _sx, y as _sy, z as _sz
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from .errors import NotANorm, SearchBoundExceeded, ZeroInput
from .fields import is_square
from .places import dyadic_places, odd_support, real_places
from .localsym import hilbert_symbol, sign_at


class QuadraticExtension:
    """L = K(sqrt(delta)) over the base field K."""

    def __init__(self, base, delta):
        if delta.is_zero():
            raise ZeroInput("delta must be nonzero")
        self.base = base
        self.delta = delta

    def norm(self, d_first, d_second):
        return d_first * d_first - self.delta * d_second * d_second

    def __repr__(self):
        return f"QuadraticExtension(delta={self.delta})"


class NormSolution:
    def __init__(self, extension, d_first, d_second, b):
        assert extension.norm(d_first, d_second) == b
        self.extension = extension
        self.d_first = d_first
        self.d_second = d_second
        self.b = b

    def __iter__(self):
        yield self.d_first
        yield self.d_second

    def __repr__(self):
        return f"NormSolution({self.d_first}, {self.d_second})"


def _local_obstruction(E, b):
    """A place witnessing non-solvability, or None."""
    K = E.base
    delta = E.delta
    for r in real_places(K):
        if sign_at(delta, r) < 0 and sign_at(b, r) < 0:
            return r
    places = odd_support(delta)
    places = places.union(odd_support(b))
    for P in dyadic_places(K):
        places.add(P)
    for P in places:
        if hilbert_symbol(delta, b, P) != 1:
            return P
    return None


def norm_locally_solvable(E, b):
    """Cheap local filter: can b be a norm from K(sqrt(delta))?"""
    if b.is_zero():
        raise ZeroInput("b must be nonzero")
    if is_square(E.delta) is not None:
        return True
    return _local_obstruction(E, b) is None


def _canonical_pair(E, d1, d2, b):
    # signs of d1, d2 are free; fix first nonzero coordinate positive
    def fix(v):
        for c in v.coeffs:
            if c:
                return -v if c < 0 else v
        return v

    return NormSolution(E, fix(d1), fix(d2), b)


def _height_fractions(H):
    """All reduced fractions p/q with |p| <= H, 1 <= q <= H, sorted."""
    out = {Fraction(0)}
    for q in range(1, H + 1):
        for p in range(-H, H + 1):
            out.add(Fraction(p, q))
    return sorted(out)


def _candidate_elements(K, H):
    """Field elements with every coordinate of height <= H, sorted by
    (max coordinate height, coordinates) so smaller candidates come first."""
    fracs = _height_fractions(H)
    n = K.degree

    def rec(i):
        if i == n:
            yield ()
            return
        for f in fracs:
            for rest in rec(i + 1):
                yield (f,) + rest

    def hkey(t):
        return (
            max(max(abs(f.numerator), f.denominator) for f in t),
            tuple(t),
        )

    for coords in sorted(rec(0), key=hkey):
        yield K.element(list(coords))


def _norm_is_rational_square(t):
    nm = t.norm()
    if nm < 0:
        return False
    num, den = nm.numerator, nm.denominator
    return sympy.integer_nthroot(num, 2)[1] and sympy.integer_nthroot(den, 2)[1]


def _search_shells(E, b, heights):
    K = E.base
    delta = E.delta
    seen = 0
    for H in heights:
        for yv in _candidate_elements(K, H):
            t = b + delta * yv * yv
            if t.is_zero():
                return _canonical_pair(E, K.zero(), yv, b)
            if not _norm_is_rational_square(t):
                continue
            r = is_square(t)
            if r is not None:
                return _canonical_pair(E, r, yv, b)
        seen = H
    return None


def _solve_rational_ternary(E, b):
    """Over Q: isotropic vector of <1, -delta, -b> via descent."""
    K = E.base
    delta = E.delta.coeffs[0]
    bq = b.coeffs[0]
    dp = delta.numerator * delta.denominator
    bp = bq.numerator * bq.denominator
    sol = diop_ternary_quadratic(_sx ** 2 - dp * _sy ** 2 - bp * _sz ** 2)
    if not sol or sol[2] == 0:
        return None
    X, Y, Z = (int(v) for v in sol)
    u = Fraction(X, Z)
    v = Fraction(Y, Z)
    # u^2 - delta*den(delta)^2*v^2 = b*den(b)^2
    d1 = K.from_rational(u / bq.denominator)
    d2 = K.from_rational(v * delta.denominator / bq.denominator)
    return _canonical_pair(E, d1, d2, b)


def solve_norm(E, b, height_ceiling=64):
    """Exact solution of d1^2 - delta*d2^2 = b, minimal-height first."""
    if b.is_zero():
        raise ZeroInput("b must be nonzero")
    K = E.base
    s = is_square(E.delta)
    if s is not None:
        if s.is_zero():
            raise ZeroInput("delta must be nonzero")
        half = Fraction(1, 2)
        d1 = (b + 1) * half
        d2 = (b - 1) * half * s.inverse()
        return NormSolution(E, d1, d2, b)
    r = is_square(b)
    if r is not None:
        return _canonical_pair(E, r, K.zero(), b)
    w = _local_obstruction(E, b)
    if w is not None:
        raise NotANorm(w)
    small = [1, 2, 3, 4, 5, 6, 8]
    got = _search_shells(E, b, small)
    if got is not None:
        return got
    if K.degree == 1:
        got = _solve_rational_ternary(E, b)
        if got is not None:
            return got
    heights = []
    H = 12
    while H <= height_ceiling:
        heights.append(H)
        H *= 2
    got = _search_shells(E, b, heights)
    if got is not None:
        return got
    raise SearchBoundExceeded(
        f"no solution of height <= {height_ceiling} for b = {b} "
        f"over K(sqrt({E.delta}))"
    )
