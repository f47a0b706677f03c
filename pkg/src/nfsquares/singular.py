"""S-singular square classes: class group, units, and F2-bases of Sing{S}.

Strategy: enlarge S to S' whose S'-class number is odd (adjoining small
prime ideals that generate the 2-part of the class group); then Sing{S'}
is spanned by the torsion unit, the fundamental units, and one generator
per prime of S' (a generator of P^k for the order k of the ideal class).
Sing{S} is recovered as the kernel of the valuation-parity map on the
adjoined primes.

Everything here is desk-scale: class groups come from Minkowski-bound
enumeration with complete generator searches (complete thanks to unit
normalization of the search box), and independence of the produced basis
is certified exhaustively through exact square testing.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import sympy

from .errors import DiscriminantTooLarge
from .fields import integral_scale, is_square
from .places import (
    PlaceSet,
    decompose_prime,
    ideal_lattice,
    lattice_contains,
    lattice_index,
    lattice_multiply,
    lattice_power,
    real_places,
)
from .localsym import sign_at

_DISC_BOUND = 10 ** 8


# ---------------------------------------------------------------------------
# units


def _log_embedding(u, dps=40):
    vals = u.numeric(dps)
    return [float(mpmath.log(abs(v))) for v in vals]


def _unit_height(u):
    return max(abs(x) for x in _log_embedding(u))


def _search_box(K, radius):
    """Coordinate bounds so the box covers all integral elements whose
    embeddings are at most `radius` in absolute value."""
    n = K.degree
    roots, _ = K.embeddings(40)
    with mpmath.workdps(40):
        V = mpmath.matrix(n, n)
        for i in range(n):
            p = mpmath.mpf(1)
            for k in range(n):
                V[i, k] = p
                p = p * roots[i]
        Vinv = V ** -1
        bounds = []
        for k in range(n):
            s = sum(abs(Vinv[k, i]) for i in range(n))
            bounds.append(int(mpmath.ceil(s * radius * mpmath.mpf("1.01"))) + 1)
    return bounds


def _iter_box(bounds):
    def rec(i, prefix):
        if i == len(bounds):
            yield prefix
            return
        for c in range(-bounds[i], bounds[i] + 1):
            yield from rec(i + 1, prefix + (c,))

    yield from rec(0, ())


def unit_group(K):
    """(torsion generator, fundamental units) of the ring of integers."""
    if K._unit_data is not None:
        return K._unit_data
    n = K.degree
    r1 = len(real_places(K))
    r2 = (n - r1) // 2
    rank = r1 + r2 - 1
    # torsion: search a small box for roots of unity, keep a max-order one
    torsion = K.from_rational(-1)
    torsion_order = 2
    for coords in _iter_box([2] * n):
        u = K.element(coords)
        if u.is_zero() or abs(u.norm()) != 1:
            continue
        if _unit_height(u) > 1e-9:
            continue
        order = _mult_order(u, 16)
        if order and order > torsion_order:
            torsion, torsion_order = u, order
    fundamental = []
    if rank > 0:
        fundamental = _fundamental_units(K, rank)
    K._unit_data = (torsion, fundamental)
    return K._unit_data


def _mult_order(u, limit):
    cur = u
    for k in range(1, limit + 1):
        if cur == 1:
            return k
        cur = cur * u
    return None


def _fundamental_units(K, rank):
    n = K.degree
    H = 2
    found = []
    while True:
        for coords in _iter_box([H] * n):
            u = K.element(coords)
            if u.is_zero() or abs(u.norm()) != 1:
                continue
            if _unit_height(u) > 1e-9:
                found.append(u)
        if found and _log_rank(found) >= rank:
            break
        H *= 2
        if H > 2 ** 12:
            raise DiscriminantTooLarge("fundamental unit search exceeded bounds")
    if rank == 1:
        best = min(found, key=_unit_height)
        # re-enumerate a box provably covering every unit at least as small
        radius = math.exp(_unit_height(best)) * 1.01
        bounds = _search_box(K, radius)
        units = [
            u
            for coords in _iter_box(bounds)
            if not (u := K.element(coords)).is_zero()
            and abs(u.norm()) == 1
            and _unit_height(u) > 1e-9
        ]
        best = min(units, key=_unit_height)
        if sign_at(best, real_places(K)[0]) < 0 if real_places(K) else False:
            best = -best
        return [best]
    # rank >= 2: greedy height reduction of the found set
    gens = _greedy_reduce(found, rank)
    return gens


def _log_rank(units, tol=1e-6):
    vecs = [_log_embedding(u) for u in units]
    m = mpmath.matrix(vecs)
    try:
        sv = mpmath.svd_r(m, compute_uv=False)
    except Exception:
        return 0
    return sum(1 for s in sv if abs(s) > tol)


def _greedy_reduce(units, rank):
    units = sorted(set(units), key=_unit_height)
    gens = []
    for u in units:
        if _log_rank(gens + [u]) > _log_rank(gens):
            gens.append(u)
        if len(gens) == rank:
            break
    improved = True
    while improved:
        improved = False
        for i in range(len(gens)):
            for j in range(len(gens)):
                if i == j:
                    continue
                for cand in (gens[i] * gens[j], gens[i] * gens[j].inverse()):
                    if _unit_height(cand) + 1e-9 < _unit_height(gens[i]):
                        gens[i] = cand
                        improved = True
    return gens


# ---------------------------------------------------------------------------
# class group


class ClassGroup:
    def __init__(self, K, h, gen_places, orders):
        self.field = K
        self.h = h
        self.gen_places = gen_places
        self.orders = orders

    def __repr__(self):
        return f"ClassGroup(h={self.h})"


def principal_generator(K, lat):
    """A generator of the ideal lattice if principal, else None (complete
    search: the box covers one unit-translate of any generator)."""
    N = lattice_index(lat)
    _, fundamental = unit_group(K)
    n = K.degree
    slack = 1.0
    for u in fundamental:
        slack += _unit_height(u) / 2
    radius = (float(N) ** (1.0 / n)) * math.exp(slack - 1.0) * 1.05
    bounds = _search_box(K, radius)
    for coords in _iter_box(bounds):
        if not any(coords):
            continue
        if not lattice_contains(lat, list(coords)):
            continue
        g = K.element(coords)
        if abs(g.norm()) == N:
            return g
    return None


def ideal_class_order(K, P, max_order=12):
    """Order of [P] in the class group, with a generator of P^order."""
    if getattr(P, "_class_data", None) is not None:
        return P._class_data
    for k in range(1, max_order + 1):
        g = principal_generator(K, P.power_lattice(k))
        if g is not None:
            P._class_data = (k, g)
            return P._class_data
    raise DiscriminantTooLarge(f"ideal class order exceeds {max_order}")


def class_group_small(K, disc_bound=_DISC_BOUND):
    """Class group by Minkowski-bound enumeration (desk-scale fields only)."""
    if K._class_group is not None:
        return K._class_group
    if abs(K.discriminant) > disc_bound:
        raise DiscriminantTooLarge(
            f"|disc| = {abs(K.discriminant)} exceeds {disc_bound}"
        )
    n = K.degree
    r1 = len(real_places(K))
    r2 = (n - r1) // 2
    mb = (
        math.factorial(n)
        / n ** n
        * (4 / math.pi) ** r2
        * math.sqrt(abs(K.discriminant))
    )
    gen_places = []
    orders = []
    p = 2
    while p <= mb:
        for P in decompose_prime(K, p):
            if P.p ** P.f_deg <= mb:
                k, _ = ideal_class_order(K, P)
                if k > 1:
                    gen_places.append(P)
                    orders.append(k)
        p = int(sympy.nextprime(p))
    h = _subgroup_order(K, gen_places, orders)
    K._class_group = ClassGroup(K, h, gen_places, orders)
    return K._class_group


def _subgroup_order(K, places, orders):
    if not places:
        return 1
    # count relations among exponent vectors below the per-generator orders
    vectors = [()]
    for o in orders:
        vectors = [v + (a,) for v in vectors for a in range(o)]
    relations = 0
    for v in vectors:
        lat = None
        for P, a in zip(places, v):
            if a == 0:
                continue
            pl = P.power_lattice(a)
            lat = pl if lat is None else lattice_multiply(K, lat, pl)
        if lat is None or principal_generator(K, lat) is not None:
            relations += 1
    total = 1
    for o in orders:
        total *= o
    return total // relations


# ---------------------------------------------------------------------------
# singular bases


class SingularBasis:
    """F2-basis of Sing{S} with bookkeeping for incremental extension."""

    def __init__(self, field, S, basis, provenance, sprime):
        self.field = field
        self.S = S
        self.basis = basis
        self.provenance = provenance
        self.sprime = sprime  # the odd-class-number superset actually used

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"SingularBasis(S={list(self.S)}, basis={self.basis})"


def _strip_square_content(a, canonical_sign=True):
    """Replace a by its integral scaling with square integer content removed."""
    _, b = integral_scale(a)
    nums = [c.numerator for c in b.coeffs]
    content = 0
    for x in nums:
        content = math.gcd(content, x)
    if content > 1:
        sq = 1
        for q, e in sympy.factorint(content).items():
            sq *= int(q) ** (e // 2)
        if sq > 1:
            b = b * Fraction(1, sq * sq)
    if canonical_sign:
        for c in b.coeffs:
            if c:
                if c < 0:
                    b = -b
                break
    return b


def _prime_singular_generator(K, P):
    k, g = ideal_class_order(K, P)
    return _strip_square_content(g)


def _enlarge_to_odd(K, S):
    """S' >= S whose classes exhaust the 2-part of the class group."""
    cg = class_group_small(K)
    sprime = PlaceSet(S)
    if cg.h % 2 == 1 and all(o % 2 for o in cg.orders):
        return sprime
    for P, o in zip(cg.gen_places, cg.orders):
        if o % 2 == 0 and P not in sprime:
            sprime.add(P)
    return sprime


def _verify_independent(K, basis):
    """Certify F2-independence: no nonempty subproduct is a square."""
    k = len(basis)
    assert k <= 14, "basis too large for exhaustive independence check"
    for mask in range(1, 1 << k):
        prod = K.one()
        for j in range(k):
            if (mask >> j) & 1:
                prod = prod * basis[j]
        if is_square(prod) is not None:
            raise AssertionError(f"dependent subset mask={mask:b} in {basis}")


def singular_basis(K, S, verify=True):
    """F2-basis of the group of S-singular square classes."""
    key = tuple(sorted((P.p, P.gpoly) for P in S))
    if key in K._sing_cache:
        return K._sing_cache[key]
    sprime = _enlarge_to_odd(K, S)
    torsion, fundamental = unit_group(K)
    basis = []
    provenance = []
    if is_square(torsion) is None:
        t = torsion
        if t != K.from_rational(-1):
            # sign flip stays in the same square class for higher torsion
            for c in t.coeffs:
                if c:
                    if c < 0:
                        t = -t
                    break
        basis.append(t)
        provenance.append("torsion")
    for u in fundamental:
        basis.append(_strip_square_content(u))
        provenance.append("unit")
    for P in sprime:
        basis.append(_prime_singular_generator(K, P))
        provenance.append(("prime", P))
    if len(sprime) > len(S):
        basis, provenance = _cut_to_subset(K, S, sprime, basis, provenance)
    if verify:
        _verify_independent(K, basis)
    out = SingularBasis(K, PlaceSet(S), basis, provenance, sprime)
    K._sing_cache[key] = out
    return out


def _cut_to_subset(K, S, sprime, basis, provenance):
    """Kernel of the valuation-parity map at the primes of S' \\ S."""
    extra = [P for P in sprime if P not in S]
    k = len(basis)
    rows = []
    for P in extra:
        rows.append([P.valuation(b) % 2 for b in basis])
    masks = _f2_kernel(rows, k)
    new_basis = []
    new_prov = []
    for m in masks:
        prod = K.one()
        tags = []
        for j in range(k):
            if (m >> j) & 1:
                prod = prod * basis[j]
                tags.append(provenance[j])
        new_basis.append(_strip_square_content(prod, canonical_sign=False))
        new_prov.append(tuple(tags))
    return new_basis, new_prov


def _f2_kernel(rows, cols):
    """Masks of a basis of the kernel of the 0/1 matrix `rows`."""
    bits = []
    for row in rows:
        m = 0
        for j, v in enumerate(row):
            if v & 1:
                m |= 1 << j
        bits.append(m)
    pivots = {}
    reduced = []
    for m in bits:
        for c, pm in pivots.items():
            if (m >> c) & 1:
                m ^= pm
        if m:
            c = (m & -m).bit_length() - 1
            pivots[c] = m
    free_cols = [c for c in range(cols) if c not in pivots]
    kernel = []
    for fc in free_cols:
        vec = 1 << fc
        # back-substitute pivot columns
        changed = True
        while changed:
            changed = False
            for c, pm in pivots.items():
                # parity of row pm applied to vec
                if bin(pm & vec).count("1") % 2:
                    vec ^= 1 << c
                    changed = True
        kernel.append(vec)
    # verify
    for v in kernel:
        for m in bits:
            assert bin(m & v).count("1") % 2 == 0
    return kernel


def extend_basis(B, q):
    """Basis of Sing{S + {q}} with the old basis as a prefix."""
    K = B.field
    assert q not in B.S
    gamma = _prime_singular_generator(K, q)
    k, _ = ideal_class_order(K, q)
    new_basis = B.basis + [gamma]
    new_prov = B.provenance + [("prime", q)]
    if k % 2 == 0:
        # no automatic parity signature at q; re-certify independence
        _verify_independent(K, new_basis)
    newS = PlaceSet(B.S)
    newS.add(q)
    out = SingularBasis(K, newS, new_basis, new_prov, B.sprime.union(PlaceSet([q])))
    return out
