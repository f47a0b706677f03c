"""Field arithmetic, parsing, square testing."""

import random
from fractions import Fraction

import pytest

from nfsquares import (
    elem_arith,
    format_element,
    integral_scale,
    is_square,
    parse_element,
    parse_field,
)
from nfsquares.errors import (
    DivisionByZero,
    NonMonic,
    ParseError,
    ReduciblePolynomial,
)


Q = parse_field("x")
QI = parse_field("x^2 + 1")
K2 = parse_field("x^2 - 2")
K32 = parse_field("x^3 - 2")


def test_parse_rejects_nonmonic():
    with pytest.raises(NonMonic):
        parse_field("2*x^2 + 1")


def test_parse_rejects_reducible():
    with pytest.raises(ReduciblePolynomial):
        parse_field("x^2 - 4")


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_field("x^2 + y")


def test_element_roundtrip():
    a = parse_element(K2, "1/2*x + 3")
    assert format_element(a) == "1/2*x + 3"
    assert a.coeffs == (Fraction(3), Fraction(1, 2))


def test_reduction_mod_f():
    # x^2 == 2 in Q(sqrt2)
    th = K2.gen()
    assert th * th == K2.from_rational(2)


def test_inverse_and_division():
    a = parse_element(K2, "x + 1")  # (1+sqrt2), inverse is sqrt2 - 1
    assert a * a.inverse() == K2.one()
    assert format_element(a.inverse()) == "x - 1"
    with pytest.raises(DivisionByZero):
        K2.zero().inverse()


def test_norm_multiplicative():
    rng = random.Random(11)
    for _ in range(25):
        a = K32.element([rng.randint(-9, 9) for _ in range(3)])
        b = K32.element([rng.randint(-9, 9) for _ in range(3)])
        assert (a * b).norm() == a.norm() * b.norm()


def test_elem_arith_dispatch():
    a = Q.from_rational(6)
    b = Q.from_rational(4)
    assert elem_arith(a, b, "add") == Q.from_rational(10)
    assert elem_arith(a, b, "div") == Q.from_rational(Fraction(3, 2))


def test_is_square_rational():
    # [TRIVIAL]
    assert is_square(Q.from_rational(Fraction(9, 4))) == Q.from_rational(
        Fraction(3, 2)
    )
    assert is_square(Q.from_rational(7)) is None


def test_is_square_field_elements():
    # [DERIVED: (1 + sqrt2)^2 = 3 + 2*sqrt2]
    a = parse_element(K2, "2*x + 3")
    r = is_square(a)
    assert r is not None and r * r == a
    assert is_square(parse_element(K2, "x")) is None
    # -1 is a square exactly in Q(i)
    assert is_square(QI.from_rational(-1)) is not None
    assert is_square(K2.from_rational(-1)) is None


def test_is_square_randomized():
    rng = random.Random(23)
    for K in (QI, K2, K32):
        for _ in range(10):
            x = K.element(
                [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                 for _ in range(K.degree)]
            )
            if x.is_zero():
                continue
            r = is_square(x * x)
            assert r is not None and r * r == x * x


def test_integral_scale():
    a = Q.from_rational(Fraction(3, 4))
    m, b = integral_scale(a)
    assert m == 2 and b == Q.from_rational(3)
    a = parse_element(K2, "1/6*x + 1/4")
    m, b = integral_scale(a)
    assert (b.coeffs[0].denominator, b.coeffs[1].denominator) == (1, 1)
    assert b == a * Fraction(m * m)
