"""Local computations: signs, local squares, Hilbert symbols, isotropy.

Non-dyadic symbols use the tame formula through the residue-field quadratic
character.  Dyadic symbols are decided by solvability of z^2 = a x^2 + b y^2
over the finite quotient O/P^(2e+3): a solution found there always satisfies
the Hensel lifting bound for the coordinate scaled to 1 (its partial
derivative has valuation at most e + 1), and conversely an exact solution
reduces to one of the three scaled searches, so the finite test is an exact
certificate in both directions.
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.galoistools import gf_gcdex, gf_pow_mod, gf_rem
from sympy import ZZ

from .errors import DimensionTooSmall, ZeroInput
from .fields import integral_scale
from .places import FinitePlace, RealPlace, lattice_cosets, lattice_reduce


# ---------------------------------------------------------------------------
# real places


def _interval_eval(coeffs, lo, hi):
    vlo = Fraction(0)
    vhi = Fraction(0)
    for c in reversed(coeffs):
        prods = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(prods) + c, max(prods) + c
    return vlo, vhi


def sign_at(a, r):
    """Sign of a under the real embedding r, by interval refinement."""
    if a.is_zero():
        raise ZeroInput("sign of zero")
    if a.is_rational():
        return 1 if a.as_rational() > 0 else -1
    while True:
        lo, hi = _interval_eval(a.coeffs, r.lo, r.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        r.refine()


def signs(a):
    from .places import real_places

    return [sign_at(a, r) for r in real_places(a.parent)]


# ---------------------------------------------------------------------------
# residue-field quadratic character (non-dyadic primes)


def _residue_poly(elem, P):
    """Descending GF(p) coefficient list of elem mod P (elem p-integral)."""
    p = P.p
    out = []
    for c in reversed(elem.coeffs):
        inv = pow(c.denominator % p, -1, p)
        out.append((c.numerator % p) * inv % p)
    g = [c % p for c in reversed(P.gpoly)]
    return gf_rem(out, g, p, ZZ)


def _residue_character(elem, P):
    """Quadratic character of a p-unit in the residue field of P (non-dyadic)."""
    p, f = P.p, P.f_deg
    g = [c % p for c in reversed(P.gpoly)]
    r = _residue_poly(elem, P)
    q = p ** f
    val = gf_pow_mod(r, (q - 1) // 2, g, p, ZZ)
    assert val in ([1], [p - 1]), "character of non-unit"
    return 1 if val == [1] else -1


# ---------------------------------------------------------------------------
# dyadic quotient rings


def _dyadic_ctx(P, M):
    """Coset reps of O/P^M and the canonical residues of their squares."""
    key = (P, M)
    K = P.field
    if key in K._dyadic_ctx:
        return K._dyadic_ctx[key]
    lat = P.power_lattice(M)
    reps = lattice_cosets(lat)
    elems = [P.field.element(r) for r in reps]
    squares = {}
    for w in elems:
        squares.setdefault(_canon(w * w, P, M, lat), w)
    ctx = (lat, elems, squares)
    K._dyadic_ctx[key] = ctx
    return ctx


def _canon(elem, P, M, lat):
    """Canonical representative of a p-integral element in O/P^M."""
    d = elem.denominator_lcm()
    assert d % P.p, "element not p-integral"
    w = pow(d, -1, P.p ** M)
    vec = [int(c * d) * w for c in elem.coeffs]
    return lattice_reduce(lat, vec)


def _normalize_for_symbol(a, P):
    """Square-class representative with valuation 0 or 1, p-integral."""
    _, b = integral_scale(a)
    v = P.valuation(b)
    if v >= 2:
        b = b * P.uniformizer() ** (-2 * (v // 2))
    return b, v % 2


def local_square(a, P, _prec_bump=0):
    """Is a a square in the completion K_P?"""
    if a.is_zero():
        raise ZeroInput("local_square of zero")
    v = P.valuation(a)
    if v % 2:
        return False
    u, _ = _normalize_for_symbol(a, P)
    if not P.dyadic:
        return _residue_character(u, P) == 1
    M = 1 + 2 * P.e + _prec_bump
    lat, _, squares = _dyadic_ctx(P, M)
    return _canon(u, P, M, lat) in squares


def _dyadic_symbol(a, b, P):
    a, _ = _normalize_for_symbol(a, P)
    b, _ = _normalize_for_symbol(b, P)
    if local_square(a, P):
        return 1
    if local_square(b, P):
        return 1
    M = 2 * P.e + 3
    lat, elems, squares = _dyadic_ctx(P, M)
    sq_set = set(squares)
    one = P.field.one()
    # z = 1: 1 - a x^2 - b y^2 = 0
    bys = {_canon(b * y * y, P, M, lat) for y in elems}
    for x in elems:
        if _canon(one - a * x * x, P, M, lat) in bys:
            return 1
    # x = 1: z^2 = a + b y^2
    for y in elems:
        if _canon(a + b * y * y, P, M, lat) in sq_set:
            return 1
    # y = 1: z^2 = a x^2 + b
    for x in elems:
        if _canon(a * x * x + b, P, M, lat) in sq_set:
            return 1
    return -1


def hilbert_symbol(a, b, P):
    """Hilbert symbol (a, b)_P at a finite prime."""
    if a.is_zero() or b.is_zero():
        raise ZeroInput("Hilbert symbol of zero")
    K = a.parent
    key = (P, a.coeffs, b.coeffs)
    alt = (P, b.coeffs, a.coeffs)
    cache = K._symbol_cache
    if key in cache:
        return cache[key]
    if alt in cache:
        return cache[alt]
    if P.dyadic:
        out = _dyadic_symbol(a, b, P)
    else:
        ea, pa = _normalize_for_symbol(a, P)
        eb, pb = _normalize_for_symbol(b, P)
        pi = P.uniformizer()
        ua = ea * pi ** (-1) if pa else ea
        ub = eb * pi ** (-1) if pb else eb
        out = 1
        if pa and pb and (P.p ** P.f_deg - 1) // 2 % 2:
            out = -out
        if pb:
            out *= _residue_character(ua, P)
        if pa:
            out *= _residue_character(ub, P)
    cache[key] = out
    return out


def hasse_invariant(q, P):
    """Product of pairwise Hilbert symbols of a diagonal form at P."""
    cs = q.coefficients
    out = 1
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            out *= hilbert_symbol(cs[i], cs[j], P)
    return out


class DiagonalForm:
    """Diagonal quadratic form <a_1, ..., a_n> with nonzero entries."""

    def __init__(self, coefficients):
        coefficients = list(coefficients)
        if any(c.is_zero() for c in coefficients):
            raise ZeroInput("diagonal form with zero entry")
        self.coefficients = coefficients

    @property
    def dimension(self):
        return len(self.coefficients)

    def determinant(self):
        out = self.coefficients[0]
        for c in self.coefficients[1:]:
            out = out * c
        return out

    def __repr__(self):
        return f"DiagonalForm({self.coefficients})"


def local_isotropic(q, place):
    """Does the form have a nontrivial zero over the completion at place?"""
    if q.dimension < 2:
        raise DimensionTooSmall("isotropy needs dimension >= 2")
    cs = q.coefficients
    if isinstance(place, RealPlace):
        sgns = {sign_at(c, place) for c in cs}
        return len(sgns) == 2
    assert isinstance(place, FinitePlace)
    if q.dimension >= 5:
        return True
    if q.dimension == 2:
        return local_square(-cs[0] * cs[1], place)
    if q.dimension == 3:
        return hilbert_symbol(-cs[0] * cs[1], -cs[0] * cs[2], place) == 1
    # dimension 4: unique anisotropic form criterion
    det = q.determinant()
    if not local_square(det, place):
        return True
    s = hasse_invariant(q, place)
    m1 = cs[0].parent.from_rational(-1)
    return s != -hilbert_symbol(m1, m1, place)
