#!/usr/bin/env python3
"""Minimal sums-of-squares decompositions.

The length l(a) is the minimal number of squares of field elements
summing to a: 1 for squares, infinity when some real embedding is
negative, otherwise 2, 3 or 4 depending on local conditions (the
classical 4^k(8m+7) criterion over Q is the special case). Each result
is re-summed exactly before being reported.
"""

from nfsquares import (
    INFINITY,
    compute_length,
    decompose,
    field_level,
    format_element,
    parse_element,
    parse_field,
)
from nfsquares.errors import NotASumOfSquares


def show(K, text):
    a = parse_element(K, text)
    try:
        dec = decompose(a)
    except NotASumOfSquares:
        print(f"  {text}: length infinity (negative at a real place)")
        return
    terms = " + ".join(f"({format_element(c)})^2" for c in dec.summands)
    print(f"  {text}: length {len(dec.summands)},  {text} = {terms}")


print("Over Q (level infinity):")
Q = parse_field("x")
for t in ("9/4", "2", "3", "7", "7/9", "-3"):
    show(Q, t)
print()

print("Over Q(i) (level 1 — everything is a sum of two squares):")
QI = parse_field("x^2 + 1")
for t in ("5", "x + 3", "-7"):
    show(QI, t)
print()

print("Over Q(sqrt-2) (level 2):")
KM2 = parse_field("x^2 + 2")
for t in ("-1", "x + 3", "-x"):
    show(KM2, t)
print()

print("Over Q(sqrt2) (formally real):")
K2 = parse_field("x^2 - 2")
for t in ("7", "3", "2*x + 3", "x"):
    show(K2, t)
print()

KM7 = parse_field("x^2 + x + 2")  # Q(sqrt-7): 2 splits with e = f = 1
print(f"Q(sqrt-7) has level {field_level(KM7)}; even -1 needs four squares:")
show(KM7, "-1")
print()
print("The same functionality is available from the shell:")
print('  nfsquares --field "x" --element "7" --json')
