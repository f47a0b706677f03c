#!/usr/bin/env python3
"""Places of a number field and Hilbert symbols.

Finite places come from factoring rational primes into prime ideals
(certified maximal at each prime we touch); real places from exact root
isolation. Hilbert symbols are computed exactly, including at dyadic
places, and satisfy the reciprocity law — the product over all places
of (a,b)_v is +1.
"""

import random

from nfsquares import (
    decompose_prime,
    dyadic_places,
    hilbert_symbol,
    odd_support,
    parse_field,
    real_places,
    sign_at,
    valuation,
)

QI = parse_field("x^2 + 1")
print("Splitting of small primes in Q(i):")
for p in (2, 3, 5, 7, 13):
    places = decompose_prime(QI, p)
    kinds = {1: "split" if len(places) == 2 else "ramified", 2: "inert"}
    kind = kinds[places[0].f_deg] if places[0].e == 1 else "ramified"
    print(f"  {p}: {len(places)} place(s), e={places[0].e}, "
          f"f={places[0].f_deg}  ({kind})")
print()

P = decompose_prime(QI, 2)[0]
print(f"v_P(2) at the dyadic place of Q(i): {valuation(QI.from_rational(2), P)}"
      "   (2 = -i (1+i)^2)")
print()

K = parse_field("x^2 - 2")
print("Hilbert reciprocity in Q(sqrt2), random pairs:")
rng = random.Random(1)
for _ in range(5):
    a = K.element([rng.randint(-9, 9), rng.randint(-9, 9)])
    b = K.element([rng.randint(-9, 9), rng.randint(-9, 9)])
    if a.is_zero() or b.is_zero():
        continue
    places = odd_support(a).union(odd_support(b))
    for d in dyadic_places(K):
        places.add(d)
    prod = 1
    shown = []
    for pl in places:
        s = hilbert_symbol(a, b, pl)
        shown.append(f"({pl.p}:{s:+d})")
        prod *= s
    for r in real_places(K):
        if sign_at(a, r) < 0 and sign_at(b, r) < 0:
            prod *= -1
            shown.append("(real:-1)")
    print(f"  a={a.coeffs}, b={b.coeffs}: {' '.join(shown)}  product={prod:+d}")
