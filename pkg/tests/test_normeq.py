"""Norm equations over quadratic extensions."""

import random
from fractions import Fraction

import pytest

from nfsquares import (
    QuadraticExtension,
    hilbert_symbol,
    norm_locally_solvable,
    parse_field,
    sign_at,
    solve_norm,
)
from nfsquares.errors import NotANorm, ZeroInput
from nfsquares.places import FinitePlace, RealPlace


Q = parse_field("x")
K2 = parse_field("x^2 - 2")
KM2 = parse_field("x^2 + 2")


def test_locally_solvable_examples():
    E = QuadraticExtension(Q, Q.from_rational(-1))
    # [TRIVIAL: sums of two squares are positive]
    assert not norm_locally_solvable(E, Q.from_rational(-1))
    # [DERIVED: 5 = 1 mod 4 splits in Q(i)]
    assert norm_locally_solvable(E, Q.from_rational(5))
    # [DERIVED: (-1,3)_3 = -1]
    assert not norm_locally_solvable(E, Q.from_rational(3))
    with pytest.raises(ZeroInput):
        norm_locally_solvable(E, Q.zero())


def test_solve_examples():
    E = QuadraticExtension(Q, Q.from_rational(-1))
    sol = solve_norm(E, Q.from_rational(5))
    # minimal-height normalization: (2, 1)  [DERIVED: brute force]
    assert (sol.d_first, sol.d_second) == (Q.from_rational(2), Q.from_rational(1))
    sol = solve_norm(E, Q.one())
    assert (sol.d_first, sol.d_second) == (Q.one(), Q.zero())
    E2 = QuadraticExtension(Q, Q.from_rational(2))
    sol = solve_norm(E2, Q.from_rational(-1))
    # [DERIVED: 1^2 - 2*1^2 = -1]
    assert (sol.d_first, sol.d_second) == (Q.one(), Q.one())


def test_degenerate_square_delta():
    E = QuadraticExtension(Q, Q.from_rational(9))
    b = Q.from_rational(7)
    sol = solve_norm(E, b)
    assert sol.d_first ** 2 - Q.from_rational(9) * sol.d_second ** 2 == b


def test_not_a_norm_witness_is_confirmed():
    E = QuadraticExtension(Q, Q.from_rational(-1))
    with pytest.raises(NotANorm) as exc:
        solve_norm(E, Q.from_rational(3))
    w = exc.value.place
    assert isinstance(w, FinitePlace)
    assert hilbert_symbol(Q.from_rational(-1), Q.from_rational(3), w) == -1
    # real witness: delta and b both negative
    with pytest.raises(NotANorm) as exc:
        solve_norm(E, Q.from_rational(-2))
    w = exc.value.place
    assert isinstance(w, RealPlace)
    assert sign_at(Q.from_rational(-2), w) == -1


def test_roundtrip_rational():
    rng = random.Random(2)
    E = QuadraticExtension(Q, Q.from_rational(-1))
    for _ in range(30):
        x = Q.from_rational(Fraction(rng.randint(-20, 20), rng.randint(1, 5)))
        y = Q.from_rational(Fraction(rng.randint(-20, 20), rng.randint(1, 5)))
        b = x * x + y * y
        if b.is_zero():
            continue
        sol = solve_norm(E, b)
        assert sol.d_first ** 2 + sol.d_second ** 2 == b


def test_roundtrip_quadratic_field():
    rng = random.Random(3)
    for K, delta in ((K2, -1), (KM2, -1), (K2, 3)):
        E = QuadraticExtension(K, K.from_rational(delta))
        done = 0
        while done < 8:
            x = K.element([rng.randint(-4, 4), rng.randint(-4, 4)])
            y = K.element([rng.randint(-4, 4), rng.randint(-4, 4)])
            b = x * x - K.from_rational(delta) * y * y
            if b.is_zero():
                continue
            sol = solve_norm(E, b)
            assert sol.d_first ** 2 - K.from_rational(delta) * sol.d_second ** 2 == b
            done += 1


def test_extension_norm_multiplicative():
    # N(x*y) = N(x)N(y) where (a+b sqrt(d))(c+e sqrt(d)) has coordinates
    # (ac + bed, ae + bc)
    rng = random.Random(9)
    d = K2.from_rational(-1)
    E = QuadraticExtension(K2, d)
    for _ in range(20):
        a, b, c, e = (
            K2.element([rng.randint(-5, 5), rng.randint(-5, 5)])
            for _ in range(4)
        )
        prod1 = a * c + b * e * d
        prod2 = a * e + b * c
        assert E.norm(prod1, prod2) == E.norm(a, b) * E.norm(c, e)
