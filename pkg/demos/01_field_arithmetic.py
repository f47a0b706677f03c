#!/usr/bin/env python3
"""Exact arithmetic in a number field K = Q[x]/(f).

Elements are polynomials in the generator theta with rational coefficients,
always reduced mod f. Everything is exact — no floats in results.
"""

from fractions import Fraction

from nfsquares import format_element, is_square, parse_element, parse_field

K = parse_field("x^2 - 2")  # Q(sqrt2)
theta = K.gen()

print("K = Q[x]/(x^2 - 2), theta = sqrt2")
print()

a = parse_element(K, "1/2*x + 3")
b = theta - 1
print(f"a          = {format_element(a)}")
print(f"b          = {format_element(b)}")
print(f"a * b      = {format_element(a * b)}")
print(f"a / b      = {format_element(a / b)}")
print(f"b^(-1)     = {format_element(b.inverse())}   (since (sqrt2-1)(sqrt2+1) = 1)")
print(f"N(a)       = {a.norm()}")
print()

# square testing is exact and returns a certified root
c = (theta + 1) ** 2
r = is_square(c)
print(f"{format_element(c)} is a square: root {format_element(r)}")
print(f"sqrt2 is a square in K: {is_square(theta) is not None}")
print(f"-1   is a square in K: {is_square(K.from_rational(-1)) is not None}")

# in Q(i) it is, of course
QI = parse_field("x^2 + 1")
print(f"-1   is a square in Q(i): "
      f"{format_element(is_square(QI.from_rational(-1)))}^2 = -1")
