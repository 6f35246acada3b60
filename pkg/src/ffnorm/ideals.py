"""Fractional ideals of the maximal order and their factorisation.

Ideals are ``order.Ideal`` values: an upper triangular HNF over k[x] in
reduced-basis coordinates plus a monic denominator, so equal ideals compare
and hash equal.
"""

from __future__ import annotations

from .arith import Poly, RatFunc, poly_factor
from .linalg import poly_mat_det
from .order import Ideal, Prime

FracIdeal = Ideal
PrimeIdeal = Prime


def unit_ideal(F) -> Ideal:
    return F.O.unit_ideal()


def principal_ideal(a) -> Ideal:
    """a*O_F for a nonzero FieldElement."""
    if a.is_zero():
        raise ValueError("zero element generates no fractional ideal")
    return a.F.O.ideal_from_elements([(list(a.v), a.d)])


def ideal_mul(I: Ideal, J: Ideal) -> Ideal:
    return I.order.ideal_mul(I, J)


def ideal_scale(I: Ideal, a) -> Ideal:
    """The ideal a*I for a FieldElement a."""
    return I.order.ideal_scale(I, list(a.v), a.d)


def ideal_norm(I: Ideal) -> RatFunc:
    return I.order.ideal_norm(I)


def ideal_contains(I: Ideal, a) -> bool:
    return I.order.ideal_contains(I, list(a.v), a.d)


def ideal_val(I: Ideal, P: Prime) -> int:
    return I.order.ideal_valuation(I, P)


def _support_polys(I: Ideal):
    p = I.order.p
    det = Poly.one(p)
    for i, r in enumerate(I.hnf):
        det = det * r[i]
    seen = {}
    for poly in (det, I.den):
        if poly.deg > 0:
            for pp, _ in poly_factor(poly)[1]:
                seen[pp.c] = pp
    return [seen[k] for k in sorted(seen)]


def factor_ideal(I: Ideal) -> list:
    """[(P, v_P(I))] over the primes with nonzero valuation, sorted."""
    O = I.order
    out = []
    for pp in _support_polys(I):
        for P in O.primes_above(pp):
            v = O.ideal_valuation(I, P)
            if v:
                out.append((P, v))
    return out


def ideal_from_factors(F, factors) -> Ideal:
    O = F.O
    I = O.unit_ideal()
    for P, k in factors:
        if k:
            I = O.ideal_mul(I, O.prime_power(P, k))
    return I


def ideal_pow(I: Ideal, k: int) -> Ideal:
    O = I.order
    if k >= 0:
        return O.ideal_pow(I, k)
    inv = O.unit_ideal()
    for P, v in factor_ideal(I):
        inv = O.ideal_mul(inv, O.prime_power(P, -v * -k))
    return inv


def ideal_inverse(I: Ideal) -> Ideal:
    return ideal_pow(I, -1)


def factor_in_OF(F, c: Poly) -> list:
    """Prime ideal factorisation of c*O_F as [(P, exponent)]."""
    if not c.c:
        raise ValueError("cannot factor the zero ideal")
    out = []
    if c.deg == 0:
        return out
    for pp, mult in poly_factor(c)[1]:
        for P in F.O.primes_above(pp):
            out.append((P, P.e * mult))
    return out


def ideal_degree(I: Ideal) -> int:
    """deg div(I) = deg Norm(I)."""
    n = I.order.n
    d = sum(r[i].deg for i, r in enumerate(I.hnf))
    return d - n * (I.den.deg if I.den.c else 0)


def element_support(a) -> list:
    """Finite places at which the nonzero element a may have nonzero value."""
    cache = a.F.cache.setdefault("support", {})
    hit = cache.get(a)
    if hit is None:
        hit = cache[a] = _element_support(a)
    return hit


def _element_support(a) -> list:
    p = a.F.p
    det = poly_mat_det(a.mult_matrix(), p)
    seen = {}
    for poly in (det, a.d):
        if poly.deg > 0:
            for pp, _ in poly_factor(poly)[1]:
                seen[pp.c] = pp
    out = []
    for k in sorted(seen):
        out.extend(a.F.O.primes_above(seen[k]))
    return out
