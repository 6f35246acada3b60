"""Compact representations alpha = mu * prod (1/beta_i)^(2^(l-i)).

Arithmetic works on power products [(element, exponent)], which is what a
compact representation is once unrolled; products and powers of compact
representations stay in that form.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arith import Poly, RatFunc, poly_factor
from .divisors import normalize_element, reduce_min, val_others
from .ideals import element_support
from .lattice import round_half_up
from .linalg import poly_mat_det
from .parse import parse_poly


class NotPrincipalError(ValueError):
    """The ideal handed to comp_rep has no generator with the given values."""


class ExpansionCapError(ValueError):
    """Expanding would produce an element beyond the configured size cap."""


class PowerProduct:
    """prod e^k over a list of (FieldElement, int) terms."""

    __slots__ = ("F", "terms")

    def __init__(self, F, terms):
        self.F = F
        merged = {}
        order = []
        for e, k in terms:
            if e in merged:
                merged[e] += k
            else:
                merged[e] = k
                order.append(e)
        self.terms = [(e, merged[e]) for e in order if merged[e]]

    def as_product(self):
        return self

    def __repr__(self):
        return f"PowerProduct({len(self.terms)} terms)"


class CompactRep:
    __slots__ = ("F", "mu", "betas")

    def __init__(self, F, mu, betas):
        self.F = F
        self.mu = mu
        self.betas = list(betas)

    @property
    def l(self) -> int:
        return len(self.betas)

    def as_product(self) -> PowerProduct:
        l = self.l
        terms = [(self.mu, 1)] + [(b, -(2 ** (l - i))) for i, b in enumerate(self.betas, 1)]
        return PowerProduct(self.F, terms)

    def __repr__(self):
        return f"CompactRep(l={self.l}, mu={self.mu})"

    # -- serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "mu": element_to_strings(self.mu),
            "betas": [element_to_strings(b) for b in self.betas],
            "l": self.l,
        }

    @classmethod
    def from_json(cls, F, data):
        if isinstance(data, str):
            data = json.loads(data)
        mu = element_from_strings(F, data["mu"])
        betas = [element_from_strings(F, b) for b in data["betas"]]
        if len(betas) != data.get("l", len(betas)):
            raise ValueError("length field does not match the number of betas")
        return cls(F, mu, betas)


def element_to_strings(a) -> list:
    """Reduced-basis coordinates as strings "num" or "(num)/(den)"."""
    from .arith import poly_str

    out = []
    for c in a.coords():
        if c.den.is_one():
            out.append(poly_str(c.num))
        else:
            out.append(f"({poly_str(c.num)})/({poly_str(c.den)})")
    return out


def element_from_strings(F, strings):
    coords = []
    for s in strings:
        s = s.strip()
        if s.startswith("(") and ")/(" in s and s.endswith(")"):
            num_s, den_s = s[1:-1].split(")/(", 1)
            coords.append(RatFunc(parse_poly(num_s, F.p), parse_poly(den_s, F.p)))
        else:
            coords.append(RatFunc(parse_poly(s, F.p)))
    return F.from_rat_coords(coords)


# -- construction -------------------------------------------------------------


def log2_round(N: int) -> int:
    """Nearest integer to log2(N) for N >= 1, ties rounded up."""
    k = N.bit_length() - 1
    return k + 1 if N * N >= 2 ** (2 * k + 1) else k


def chain_length(N: int) -> int:
    """Number of squaring steps for a gap N: floor(log2 N) + 1, or 0 when N = 0.

    Rounding log2 N to the nearest integer instead can exceed the length
    bound floor(log2(|val|+g)) + 1 by one; any l with 2^(l-1) <= N gives a
    valid chain.
    """
    return N.bit_length()


def _others_target(F, v):
    r = len(F.infinite_places) - 1
    v = list(v)
    if len(v) == r + 1:
        a0 = F.anchor.index
        v = [x for i, x in enumerate(v) if i != a0]
    if len(v) != r:
        raise ValueError(f"value vector must have length {r} (or {r + 1})")
    return v


def comp_rep(F, A, v, verify: bool = False) -> CompactRep:
    """Compact representation of a generator of A with non-anchor infinite values v.

    v may also be the full vector over all infinite places. With verify=True
    the result is checked against A at every finite place of the support and
    NotPrincipalError is raised on mismatch.
    """
    if F.anchor is None:
        raise ValueError("no infinite place of degree 1")
    v = _others_target(F, v)
    O = F.O
    r = len(v)
    mu = reduce_min(F, A, [0] * r)
    diff = [a - b for a, b in zip(val_others(F, mu), v)]
    N = max((abs(d) for d in diff), default=0)
    l = chain_length(N)
    betas = []
    B = O.unit_ideal()
    prev = None
    vb = [0] * r
    for i in range(1, l + 1):
        t = [round_half_up(Fraction(d, 2 ** (l - i))) for d in diff]
        B = _next_ideal(F, B, prev)
        beta = reduce_min(F, B, [a - 2 * b for a, b in zip(t, vb)])
        betas.append(beta)
        vb = [2 * a + b for a, b in zip(vb, val_others(F, beta))]
        prev = beta
    cr = CompactRep(F, mu, betas)
    if verify:
        check_generates(cr, A, v)
    return cr


def _next_ideal(F, B, prev):
    """beta^-2 * B^2 (memoised; the same chains recur across calls)."""
    cache = F.cache.setdefault("square", {})
    key = (B.key, prev)
    hit = cache.get(key)
    if hit is None:
        O = F.O
        hit = O.ideal_mul(B, B)
        if prev is not None:
            inv2 = (prev * prev).inverse()
            hit = O.ideal_scale(hit, list(inv2.v), inv2.d)
        cache[key] = hit
    return hit


def check_generates(cr, A, v):
    F = cr.F
    a0 = F.anchor.index
    vals = [cr_value(cr, P) for P in F.infinite_places if P.index != a0]
    if vals != list(v):
        raise NotPrincipalError("infinite values do not match the target")
    from .ideals import factor_ideal

    expected = {P.key: k for P, k in factor_ideal(A)}
    for P in support(cr):
        if cr_value(cr, P) != expected.pop(P.key, 0):
            raise NotPrincipalError("ideal is not generated by the represented element")
    if any(expected.values()):
        raise NotPrincipalError("ideal is not generated by the represented element")


# -- evaluation ---------------------------------------------------------------


def _pp(t) -> PowerProduct:
    return t.as_product()


def support(t) -> list:
    """Finite places where some factor of t has nonzero value, sorted."""
    seen = {}
    for e, _ in _pp(t).terms:
        for P in element_support(e):
            seen[P.key] = P
    return [seen[k] for k in sorted(seen)]


def _value(F, e, P):
    cache = F.cache.setdefault("value", {})
    key = (e, P.key)
    v = cache.get(key)
    if v is None:
        v = cache[key] = F.valuation(e, P)
    return v


def cr_value(t, P) -> int:
    pp = _pp(t)
    return sum(k * _value(pp.F, e, P) for e, k in pp.terms)


def cr_val_inf(t) -> tuple:
    pp = _pp(t)
    return tuple(cr_value(pp, P) for P in pp.F.infinite_places)


def _factored_norm(e):
    """(constant, {irreducible coeffs: exponent}) with N(e) = constant * prod."""
    F = e.F
    cache = F.cache.setdefault("fnorm", {})
    hit = cache.get(e)
    if hit is not None:
        return hit
    p = F.p
    det = poly_mat_det(e.mult_matrix(), p)
    lc, facs = poly_factor(det)
    out = {}
    for f, m in facs:
        out[f.c] = out.get(f.c, 0) + m
    if e.d.deg > 0:
        _, dfacs = poly_factor(e.d)
        for f, m in dfacs:
            out[f.c] = out.get(f.c, 0) - m * F.n
    hit = cache[e] = (lc, {k: v for k, v in out.items() if v})
    return hit


def cr_norm_factored(t):
    pp = _pp(t)
    p = pp.F.p
    const = 1
    exps = {}
    for e, k in pp.terms:
        lc, facs = _factored_norm(e)
        const = const * pow(lc, k % (p - 1), p) % p
        for f, m in facs.items():
            exps[f] = exps.get(f, 0) + k * m
    return const, {f: m for f, m in exps.items() if m}


def cr_norm(t) -> RatFunc:
    const, exps = cr_norm_factored(t)
    p = _pp(t).F.p
    num = Poly.const(const, p)
    den = Poly.one(p)
    for f, m in sorted(exps.items()):
        if m > 0:
            num = num * Poly(f, p) ** m
        else:
            den = den * Poly(f, p) ** (-m)
    return RatFunc(num, den)


def cr_is_integral(t) -> bool:
    return all(cr_value(t, P) >= 0 for P in support(t))


def cr_associate(t1, t2) -> bool:
    seen = {}
    for P in support(t1) + support(t2):
        seen[P.key] = P
    return all(cr_value(t1, P) == cr_value(t2, P) for P in seen.values())


def cr_mul(t1, t2) -> PowerProduct:
    return PowerProduct(_pp(t1).F, _pp(t1).terms + _pp(t2).terms)


def cr_pow(t, k: int) -> PowerProduct:
    pp = _pp(t)
    return PowerProduct(pp.F, [(e, m * k) for e, m in pp.terms])


def cr_expand(t, cap: int = 4096):
    """Standard representation of the value of t (refuses beyond ``cap``)."""
    pp = _pp(t)
    F = pp.F
    size = max((abs(v) for v in cr_val_inf(pp)), default=0)
    if size > cap:
        raise ExpansionCapError(f"infinite values up to {size} exceed the cap {cap}")
    if isinstance(t, CompactRep):
        beta = F.one()
        for b in t.betas:
            beta = beta * beta * b
        return t.mu / beta
    num = F.one()
    den = F.one()
    for e, k in pp.terms:
        if k > 0:
            num = num * e ** k
        else:
            den = den * e ** (-k)
    return num / den


def normalize_cr(t) -> CompactRep:
    """Same value, with mu scaled so that the representation is deterministic."""
    return CompactRep(t.F, normalize_element(t.mu), t.betas)
