#!/usr/bin/env python3
"""S-singular square classes and norm equations.

Sing{S} is the F2-vector space of square classes with even valuation at
every prime outside S. Its basis (torsion unit, fundamental units, and
one generator per prime of S) powers the three- and four-square
algorithms. Norm equations d1^2 - delta*d2^2 = b are the other engine.
"""

from nfsquares import (
    PlaceSet,
    QuadraticExtension,
    decompose_prime,
    format_element,
    hilbert_symbol,
    parse_field,
    singular_basis,
    solve_norm,
    unit_group,
)
from nfsquares.errors import NotANorm

for field, primes in (("x", [2, 3]), ("x^2 + 1", [2, 5]), ("x^2 - 2", [2, 7])):
    K = parse_field(field)
    S = PlaceSet()
    for p in primes:
        for P in decompose_prime(K, p):
            S.add(P)
    B = singular_basis(K, S)
    print(f"K = Q[x]/({field}), S over {primes}: "
          f"Sing{{S}} basis {{{', '.join(format_element(k) for k in B.basis)}}}")
print()

t, fund = unit_group(parse_field("x^2 - 2"))
print(f"Unit group of Z[sqrt2]: torsion {format_element(t)}, "
      f"fundamental unit {format_element(fund[0])}")
print()

Q = parse_field("x")
E = QuadraticExtension(Q, Q.from_rational(-1))
print("Norm equations x^2 + y^2 = b over Q:")
for b in (5, 13, 100049, 3):
    try:
        sol = solve_norm(E, Q.from_rational(b))
        print(f"  b = {b}: ({format_element(sol.d_first)}, "
              f"{format_element(sol.d_second)})")
    except NotANorm as exc:
        w = exc.place
        print(f"  b = {b}: no solution — witnessed at p={w.p}, "
              f"(-1,{b})_{w.p} = {hilbert_symbol(E.delta, Q.from_rational(b), w)}")
