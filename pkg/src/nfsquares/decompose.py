"""Length computation and sums-of-squares decompositions.

The dispatcher computes the length l(a) from local criteria, then produces
an explicit decomposition a = c_1^2 + ... + c_l^2:

* l = 1: exact square root.
* l = 2: closed formula when -1 is a square, else a norm equation over
  K(sqrt(-1)).
* l = 3 over level-2 fields: closed formula from a solution of
  d1^2 + d2^2 = -1.
* l = 3 in general: the singular-class loop — build the F2 system whose
  solution is a totally negative S-singular b with <1,1,b> and <1,-a,-b>
  isotropic, adjoining fresh primes to S until the system becomes solvable,
  then two norm equations stitch the summands together.
* l = 4: same loop shape with the dyadic obstruction rows (pairs (g, h)
  at the dyadic primes with e and f both odd), recursing into the
  three-square routine for -b.

Every decomposition is re-summed exactly before being returned.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import sympy

from .errors import (
    LengthMismatch,
    LevelMismatch,
    NotASumOfSquares,
    PrimeSearchExhausted,
    SearchBoundExceeded,
    ZeroInput,
)
from .f2linear import F2Matrix, solve_f2
from .fields import is_square
from .localsym import (
    DiagonalForm,
    hilbert_symbol,
    local_isotropic,
    local_square,
    sign_at,
)
from .normeq import QuadraticExtension, solve_norm
from .places import PlaceSet, decompose_prime, dyadic_places, odd_support, real_places
from .singular import extend_basis, singular_basis

INFINITY = math.inf


class PrimeSearchStrategy:
    """How the S-enlarging loops pick fresh primes."""

    def __init__(self, mode="deterministic", seed=None, ceiling=10000,
                 height_ceiling=64):
        assert mode in ("deterministic", "random")
        self.mode = mode
        self.seed = seed
        self.ceiling = ceiling
        self.height_ceiling = height_ceiling


class _PrimeSearch:
    """Stateful enumerator of candidate primes of K outside S."""

    def __init__(self, K, strategy):
        self.K = K
        self.strategy = strategy
        self.tried = 0
        if strategy.mode == "deterministic":
            self._rational = self._det_rationals()
        else:
            self._rational = self._random_rationals()
        self._pending = []

    def _det_rationals(self):
        p = 3
        while p <= self.strategy.ceiling:
            yield p
            p = int(sympy.nextprime(p))

    def _random_rationals(self):
        rng = random.Random(self.strategy.seed)
        seen = set()
        budget = 10 * self.strategy.ceiling
        for _ in range(budget):
            p = int(sympy.randprime(3, self.strategy.ceiling + 1))
            if p not in seen:
                seen.add(p)
                yield p

    def next_outside(self, S):
        while True:
            while self._pending:
                q = self._pending.pop(0)
                if q not in S:
                    self.tried += 1
                    return q
            p = next(self._rational, None)
            if p is None:
                raise PrimeSearchExhausted(
                    f"no suitable prime below {self.strategy.ceiling}"
                )
            self._pending = list(decompose_prime(self.K, p))


def next_candidate_prime(search, S):
    """Next prime of K outside S under the search's strategy."""
    return search.next_outside(S)


class LengthReport:
    def __init__(self, length, level, obstruction_places, totally_positive):
        self.length = length
        self.level = level
        self.obstruction_places = obstruction_places
        self.totally_positive = totally_positive

    def __repr__(self):
        return (
            f"LengthReport(length={self.length}, level={self.level}, "
            f"totally_positive={self.totally_positive})"
        )


class Decomposition:
    def __init__(self, element, summands, report, primes_tried=0):
        total = element.parent.zero()
        for c in summands:
            assert not c.is_zero(), "zero summand"
            total = total + c * c
        assert total == element, "re-summation failed"
        self.element = element
        self.summands = summands
        self.report = report
        self.primes_tried = primes_tried
        self.verified = True

    def __repr__(self):
        return f"Decomposition({self.element} = sum of {len(self.summands)} squares)"


class DyadicObstructionData:
    def __init__(self, place, g, h, a):
        assert hilbert_symbol(a, g, place) == 1
        assert hilbert_symbol(g, h, place) == -1
        self.place = place
        self.g = g
        self.h = h


def field_level(K):
    """Level s(K): the length of -1 (1, 2, 4, or infinity)."""
    if K._level is not None:
        return K._level
    m1 = K.from_rational(-1)
    if is_square(m1) is not None:
        lvl = 1
    elif real_places(K):
        lvl = INFINITY
    elif all(hilbert_symbol(m1, m1, P) == 1 for P in dyadic_places(K)):
        lvl = 2
    else:
        lvl = 4
    K._level = lvl
    return lvl


def _dyadic_obstruction_set(K):
    """Dyadic primes with e and f both odd (local level 4)."""
    return [d for d in dyadic_places(K) if d.e % 2 == 1 and d.f_deg % 2 == 1]


def compute_length(a):
    """Length report for a nonzero element, from local criteria."""
    if a.is_zero():
        raise ZeroInput("length of zero is undefined")
    K = a.parent
    lvl = field_level(K)
    if is_square(a) is not None:
        return LengthReport(1, lvl, [], all(s > 0 for s in _signs(a)))
    sgns = _signs(a)
    if any(s < 0 for s in sgns):
        return LengthReport(INFINITY, lvl, [], False)
    if lvl == 1:
        return LengthReport(2, lvl, [], True)
    m1 = K.from_rational(-1)
    places = odd_support(a)
    for P in dyadic_places(K):
        places.add(P)
    if all(hilbert_symbol(m1, a, P) == 1 for P in places):
        return LengthReport(2, lvl, [], True)
    obstruction = [
        d for d in _dyadic_obstruction_set(K) if local_square(-a, d)
    ]
    if obstruction:
        return LengthReport(4, lvl, obstruction, True)
    return LengthReport(3, lvl, [], True)


def _signs(a):
    return [sign_at(a, r) for r in real_places(a.parent)]


def decompose(a, strategy=None):
    """Certified minimal decomposition of a into squares."""
    if strategy is None:
        strategy = PrimeSearchStrategy()
    report = compute_length(a)
    if report.length == INFINITY:
        K = a.parent
        witness = next(r for r in real_places(K) if sign_at(a, r) < 0)
        raise NotASumOfSquares(witness)
    if report.length == 1:
        return Decomposition(a, [is_square(a)], report)
    if report.length == 2:
        return decompose_len2(a)
    if report.length == 3:
        if report.level == 2:
            return decompose_len3_level2(a)
        return decompose_len3_general(a, strategy)
    return decompose_len4(a, strategy)


def _pythagorean_split(s):
    """s^2 as a sum of two nonzero squares (rational point on the circle)."""
    K = s.parent
    return [s * Fraction(3, 5), s * Fraction(4, 5)]


def decompose_len2(a):
    K = a.parent
    report = compute_length(a)
    if report.length != 2:
        raise LengthMismatch(f"length is {report.length}, not 2")
    i = is_square(K.from_rational(-1))
    half = Fraction(1, 2)
    if i is not None:
        c1 = (a + 1) * half
        c2 = (a - 1) * half * i
        return Decomposition(a, [c1, c2], report)
    E = QuadraticExtension(K, K.from_rational(-1))
    sol = solve_norm(E, a)
    c1, c2 = sol.d_first, sol.d_second
    if c1.is_zero():
        # a = -(c2)^2; split a nonzero two-square representation of -1
        m = solve_norm(E, K.from_rational(-1))
        c1, c2 = c2 * m.d_first, c2 * m.d_second
    return Decomposition(a, [c1, c2], report)


def decompose_len3_level2(a):
    K = a.parent
    report = compute_length(a)
    if report.level != 2:
        raise LevelMismatch(f"level is {report.level}, not 2")
    if report.length != 3:
        raise LengthMismatch(f"length is {report.length}, not 3")
    E = QuadraticExtension(K, K.from_rational(-1))
    sol = solve_norm(E, K.from_rational(-1))
    d1, d2 = sol.d_first, sol.d_second
    half = Fraction(1, 2)
    c1 = (a + 1) * half
    c2 = (a - 1) * half * d1
    c3 = (a - 1) * half * d2
    return Decomposition(a, [c1, c2, c3], report)


def _initial_s(a):
    K = a.parent
    S = PlaceSet()
    for d in dyadic_places(K):
        S.add(d)
    S = S.union(odd_support(a))
    return S


def _symbol_row(left, basis, P):
    return [1 if hilbert_symbol(left, k, P) == -1 else 0 for k in basis]


def _sign_rows(basis, reals):
    return [
        [1 if sign_at(k, r) == -1 else 0 for k in basis] for r in reals
    ]


def _product_for(K, basis, xs):
    b = K.one()
    for k, x in zip(basis, xs):
        if x:
            b = b * k
    return b


def _certify_isotropy(forms, places):
    for q in forms:
        for pl in places:
            if not local_isotropic(q, pl):
                raise AssertionError(
                    f"form {q} not locally isotropic at {pl}"
                )


def decompose_len3_general(a, strategy=None, _report=None):
    if strategy is None:
        strategy = PrimeSearchStrategy()
    K = a.parent
    report = _report if _report is not None else compute_length(a)
    if report.level in (1, 2):
        raise LevelMismatch(f"level is {report.level}")
    if report.length != 3:
        raise LengthMismatch(f"length is {report.length}, not 3")
    m1 = K.from_rational(-1)
    reals = real_places(K)
    S = _initial_s(a)
    B = singular_basis(K, S)
    search = _PrimeSearch(K, strategy)
    while True:
        basis = B.basis
        rows = _sign_rows(basis, reals)
        rhs = [1] * len(reals)
        for P in S:
            rows.append(_symbol_row(m1, basis, P))
            rhs.append(1 if hilbert_symbol(m1, m1, P) == -1 else 0)
        for P in S:
            rows.append(_symbol_row(a, basis, P))
            rhs.append(0)
        xi = solve_f2(F2Matrix.from_lists(rows), rhs)
        if xi is not None:
            break
        q = next_candidate_prime(search, S)
        S.add(q)
        B = extend_basis(B, q)
    b = _product_for(K, basis, xi)
    assert all(sign_at(b, r) < 0 for r in reals), "b not totally negative"
    q1 = DiagonalForm([K.one(), K.one(), b])
    q2 = DiagonalForm([K.one(), -a, -b])
    _certify_isotropy([q1, q2], list(reals) + list(S))
    E = QuadraticExtension(K, m1)
    sol1 = solve_norm(E, -b, height_ceiling=strategy.height_ceiling)
    d1, d2 = sol1.d_first, sol1.d_second
    if d1.is_zero() or d2.is_zero():
        s = d1 + d2  # the nonzero one; -b = s^2
        d1, d2 = _pythagorean_split(s)
    M = QuadraticExtension(K, a)
    sol2 = solve_norm(M, b, height_ceiling=strategy.height_ceiling)
    d3, d4 = sol2.d_first, sol2.d_second
    assert not d3.is_zero() and not d4.is_zero()
    out = [d1 / d4, d2 / d4, d3 / d4]
    return Decomposition(a, out, report, primes_tried=search.tried)


def find_dyadic_pair(a, d, seed=None):
    """(g, h) with (a, g)_d = +1 and (g, h)_d = -1, by seeded sampling."""
    K = a.parent
    rng = random.Random(0 if seed is None else seed)
    n = K.degree
    for height in (2, 4, 8, 16):
        for _ in range(400):
            g = K.element([rng.randint(-height, height) for _ in range(n)])
            if g.is_zero() or local_square(g, d):
                continue
            if hilbert_symbol(a, g, d) != 1:
                continue
            for _ in range(200):
                h = K.element(
                    [rng.randint(-height, height) for _ in range(n)]
                )
                if h.is_zero():
                    continue
                if hilbert_symbol(g, h, d) == -1:
                    return DyadicObstructionData(d, g, h, a)
    raise SearchBoundExceeded(f"no dyadic pair found at {d}")


def decompose_len4(a, strategy=None):
    if strategy is None:
        strategy = PrimeSearchStrategy()
    K = a.parent
    report = compute_length(a)
    if report.length != 4:
        raise LengthMismatch(f"length is {report.length}, not 4")
    m1 = K.from_rational(-1)
    reals = real_places(K)
    D = _dyadic_obstruction_set(K)
    pairs = [find_dyadic_pair(a, d, seed=strategy.seed) for d in D]
    S = _initial_s(a)
    B = singular_basis(K, S)
    search = _PrimeSearch(K, strategy)
    while True:
        basis = B.basis
        rows = _sign_rows(basis, reals)
        rhs = [1] * len(reals)
        for pair in pairs:
            rows.append(_symbol_row(pair.h, basis, pair.place))
            rhs.append(1)
        for P in S:
            rows.append(_symbol_row(a, basis, P))
            rhs.append(0)
        xi = solve_f2(F2Matrix.from_lists(rows), rhs)
        if xi is not None:
            break
        q = next_candidate_prime(search, S)
        S.add(q)
        B = extend_basis(B, q)
    b = _product_for(K, basis, xi)
    q1 = DiagonalForm([K.one(), K.one(), K.one(), b])
    q2 = DiagonalForm([K.one(), -a, -b])
    _certify_isotropy([q1, q2], list(reals) + list(S))
    minus_b = -b
    inner_report = compute_length(minus_b)
    assert inner_report.length == 3, f"l(-b) = {inner_report.length}"
    inner = decompose_len3_general(minus_b, strategy, _report=inner_report)
    d1, d2, d3 = inner.summands
    L = QuadraticExtension(K, a)
    sol = solve_norm(L, b, height_ceiling=strategy.height_ceiling)
    d4, d5 = sol.d_first, sol.d_second
    assert not d4.is_zero() and not d5.is_zero()
    out = [d1 / d5, d2 / d5, d3 / d5, d4 / d5]
    return Decomposition(
        a, out, report, primes_tried=search.tried + inner.primes_tried
    )
