"""Class groups, units, and S-singular square-class bases."""

from nfsquares import (
    PlaceSet,
    class_group_small,
    decompose_prime,
    extend_basis,
    format_element,
    is_square,
    parse_element,
    parse_field,
    singular_basis,
    unit_group,
    real_places,
)


Q = parse_field("x")
QI = parse_field("x^2 + 1")
K2 = parse_field("x^2 - 2")
GOLD = parse_field("x^2 - x - 1")
KM5 = parse_field("x^2 + 5")


def _S(K, primes):
    S = PlaceSet()
    for p in primes:
        for P in decompose_prime(K, p):
            S.add(P)
    return S


def test_class_numbers():
    # [DERIVED: h(Q) = h(Q(i)) = h(Q(sqrt2)) = 1, h(Q(sqrt-5)) = 2]
    assert class_group_small(Q).h == 1
    assert class_group_small(QI).h == 1
    assert class_group_small(K2).h == 1
    assert class_group_small(KM5).h == 2


def test_units():
    # [DERIVED: Z* = {±1}; Z[i]* = <i>; fundamental unit of Z[sqrt2] is 1+sqrt2]
    t, fund = unit_group(Q)
    assert t == Q.from_rational(-1) and fund == []
    t, fund = unit_group(QI)
    assert t * t == QI.from_rational(-1) and fund == []
    t, fund = unit_group(K2)
    assert len(fund) == 1
    u = fund[0]
    assert abs(u.norm()) == 1
    # 1 + sqrt2 up to sign/inverse/conjugate
    assert u in (
        parse_element(K2, "x + 1"),
        parse_element(K2, "x - 1"),
        parse_element(K2, "-x + 1"),
        parse_element(K2, "-x - 1"),
    )


def test_basis_over_q():
    assert [format_element(k) for k in singular_basis(Q, _S(Q, [])).basis] == ["-1"]
    assert [format_element(k) for k in singular_basis(Q, _S(Q, [2])).basis] == [
        "-1",
        "2",
    ]
    assert [
        format_element(k) for k in singular_basis(Q, _S(Q, [2, 3])).basis
    ] == ["-1", "2", "3"]


def test_basis_dimension_formula():
    # dim Sing{S} = r1 + r2 + #S when the class number is odd
    for K, primes in ((QI, [2, 5]), (K2, [2, 7]), (GOLD, [5, 11])):
        S = _S(K, primes)
        B = singular_basis(K, S)
        r1 = len(real_places(K))
        r2 = (K.degree - r1) // 2
        assert len(B.basis) == r1 + r2 + len(S)


def test_basis_elements_are_singular():
    K, primes = K2, [2, 7]
    S = _S(K, primes)
    B = singular_basis(K, S)
    # even valuation at primes outside S: spot-check a few
    for p in (3, 5, 11):
        for P in decompose_prime(K, p):
            for kappa in B.basis:
                assert P.valuation(kappa) % 2 == 0


def test_basis_independent():
    # no nonempty subproduct is a square
    B = singular_basis(QI, _S(QI, [2, 5]))
    k = len(B.basis)
    for mask in range(1, 1 << k):
        prod = QI.one()
        for j in range(k):
            if (mask >> j) & 1:
                prod = prod * B.basis[j]
        assert is_square(prod) is None


def test_extend_basis_prefix():
    B = singular_basis(Q, _S(Q, [2, 3]))
    P5 = decompose_prime(Q, 5)[0]
    B2 = extend_basis(B, P5)
    assert B2.basis[: len(B.basis)] == B.basis
    assert len(B2.basis) == len(B.basis) + 1
    assert P5.valuation(B2.basis[-1]) % 2 == 1


def test_even_class_number_field():
    # Q(sqrt-5): Sing{} is spanned by -1 and 2 (2 generates the square of
    # the nonprincipal dyadic prime)
    B = singular_basis(KM5, PlaceSet())
    got = sorted(format_element(k) for k in B.basis)
    assert got == ["-1", "2"]
