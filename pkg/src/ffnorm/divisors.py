"""Divisors, Riemann-Roch spaces, minima of ideals and reduced divisors.

Convention: L(D) = {a : div(a) >= -D} together with 0. A divisor is handled
internally in "ideal form" (J, ninf): J is the fractional ideal prod P^(-n_P)
over the finite places and ninf the list of multiplicities at the infinite
places, so that L(D) = {a in J : -v_P(a) <= ninf_P at infinity}.
"""

from __future__ import annotations

from .ideals import element_support, factor_ideal, ideal_degree, ideal_from_factors
from .order import Prime


class Divisor:
    """Finitely supported integer combination of places."""

    __slots__ = ("F", "fin", "inf")

    def __init__(self, F, fin=None, inf=None):
        self.F = F
        self.fin = {P: k for P, k in (fin or {}).items() if k}
        m = len(F.infinite_places)
        self.inf = tuple(inf) if inf is not None else (0,) * m
        if len(self.inf) != m:
            raise ValueError("wrong number of infinite multiplicities")

    @classmethod
    def zero(cls, F):
        return cls(F)

    @classmethod
    def place(cls, F, P: Prime, k: int = 1):
        if P.infinite:
            inf = [0] * len(F.infinite_places)
            inf[P.index] = k
            return cls(F, inf=inf)
        return cls(F, {P: k})

    # -- structure ---------------------------------------------------------
    def items(self):
        out = sorted(self.fin.items(), key=lambda t: t[0].key)
        out += [(P, k) for P, k in zip(self.F.infinite_places, self.inf) if k]
        return out

    def __getitem__(self, P):
        if P.infinite:
            return self.inf[P.index]
        return self.fin.get(P, 0)

    @property
    def degree(self) -> int:
        return sum(k * P.degree for P, k in self.items())

    @property
    def height(self) -> int:
        return sum(abs(k) * P.degree for P, k in self.items())

    def is_effective(self) -> bool:
        return all(k >= 0 for _, k in self.items())

    def __add__(self, other):
        fin = dict(self.fin)
        for P, k in other.fin.items():
            fin[P] = fin.get(P, 0) + k
        return Divisor(self.F, fin, [a + b for a, b in zip(self.inf, other.inf)])

    def __neg__(self):
        return Divisor(self.F, {P: -k for P, k in self.fin.items()}, [-a for a in self.inf])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return Divisor(self.F, {P: k * v for P, v in self.fin.items()}, [k * a for a in self.inf])

    __rmul__ = __mul__

    def __ge__(self, other):
        return (self - other).is_effective()

    def _key(self):
        return (tuple(sorted((P.key, k) for P, k in self.fin.items())), self.inf)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        parts = []
        for P, k in self.items():
            parts.append(f"{k}*{P!r}")
        return "Divisor(" + (" + ".join(parts) or "0") + ")"

    def ideal_form(self):
        J = ideal_from_factors(self.F, [(P, -k) for P, k in self.fin.items()])
        return J, list(self.inf)


def divisor_of_ideal(I) -> Divisor:
    F = I.order.field
    return Divisor(F, dict(factor_ideal(I)))


def divisor_of_element(a) -> Divisor:
    F = a.F
    fin = {}
    for P in element_support(a):
        v = F.valuation(a, P)
        if v:
            fin[P] = v
    return Divisor(F, fin, F.val_inf(a))


# -- Riemann-Roch spaces ----------------------------------------------------


def rr_reduced(F, J, ninf):
    return F.reduce_twisted(J.hnf, J.den, list(ninf))


def rr_dim_form(F, J, ninf) -> int:
    return sum(max(0, 1 - d) for _, d in rr_reduced(F, J, ninf))


def rr_space(F, J, ninf) -> list:
    """k-basis of {a in J : -v_P(a) <= ninf_P at every infinite P}."""
    out = []
    for vec, d in rr_reduced(F, J, ninf):
        for j in range(0, -d + 1):
            out.append(F.element([c.shift(j) for c in vec], J.den))
    return out


def rr_basis(D: Divisor) -> list:
    J, ninf = D.ideal_form()
    return rr_space(D.F, J, ninf)


def rr_dim(D: Divisor) -> int:
    J, ninf = D.ideal_form()
    return rr_dim_form(D.F, J, ninf)


def normalize_element(a):
    """Scale a nonzero element by a constant so its first nonzero coordinate is monic."""
    for c in a.v:
        if c.c:
            lc = c.lc
            if lc != 1:
                return a * pow(lc, a.F.p - 2, a.F.p)
            return a
    raise ValueError("zero element")


def is_principal(D: Divisor):
    """An element a with div(a) = D, or None."""
    if D.degree != 0:
        return None
    basis = rr_basis(D)
    if not basis:
        return None
    # div(g) >= -D and degree 0 force div(g) = -D
    return normalize_element(basis[0]).inverse()


# -- minima ------------------------------------------------------------------


def _anchor_index(F):
    P0 = F.anchor
    if P0 is None:
        raise ValueError("no infinite place of degree 1")
    return P0.index


def _largest(lo, hi, ok):
    """Largest m in [lo, hi] with ok(m), given ok is monotone (true then false)."""
    if not ok(lo):
        return None
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def reduce_min(F, I, v) -> object:
    """A minimum of the ideal I whose non-anchor infinite values are close to v.

    v lists target values at the infinite places other than the degree-1
    anchor, in place order. Returns the unique (up to k^*) element spanning
    {a in I : v_{P_i}(a) >= v_i, v_{P_0}(a) >= m} for the largest m making it
    nonzero.
    """
    a0 = _anchor_index(F)
    others = [P for P in F.infinite_places if P.index != a0]
    v = list(v)
    if len(v) != len(others):
        raise ValueError(f"target vector must have length {len(others)}")
    cache = F.cache.setdefault("reduce", {})
    key = (I.key, tuple(v))
    hit = cache.get(key)
    if hit is not None:
        return hit
    hit = cache[key] = _reduce_min(F, I, v, a0, others)
    return hit


def _reduce_min(F, I, v, a0, others):
    m_max = -ideal_degree(I) - sum(vi * P.degree for vi, P in zip(v, others))

    def ninf(m):
        out = [0] * len(F.infinite_places)
        for vi, P in zip(v, others):
            out[P.index] = -vi
        out[a0] = -m
        return out

    g = F.genus
    m = _largest(m_max - g, m_max, lambda m: rr_dim_form(F, I, ninf(m)) >= 1)
    if m is None:
        raise ArithmeticError("Riemann-Roch space unexpectedly trivial in the reduction window")
    space = rr_space(F, I, ninf(m))
    if len(space) != 1:
        raise ArithmeticError("minimum space is not one-dimensional")
    return normalize_element(space[0])


def val_others(F, a) -> tuple:
    """Values of a at the infinite places other than the anchor."""
    a0 = _anchor_index(F)
    vals = F.val_inf(a)
    return tuple(x for i, x in enumerate(vals) if i != a0)


# -- reduced divisors (canonical class representatives) -----------------------


class ReducedDivisor:
    """Effective E of degree m standing for the degree-0 class of E - m*P0."""

    __slots__ = ("J", "ninf", "m", "key")

    def __init__(self, J, ninf, m):
        self.J = J
        self.ninf = tuple(ninf)
        self.m = m
        self.key = (J.key, self.ninf)


class ClassArithmetic:
    """Canonical forms of degree-0 divisor classes relative to a degree-1 place."""

    def __init__(self, F):
        self.F = F
        P0 = F.anchor
        if P0 is None:
            from .arith import Poly

            for a in range(F.p):
                pp = Poly([a, 1], F.p)
                ones = [P for P in F.O.primes_above(pp) if P.degree == 1]
                if ones:
                    P0 = ones[0]
                    break
        if P0 is None:
            raise ValueError("no place of degree 1 available for class arithmetic")
        self.P0 = P0
        O = F.O
        self.zero = ReducedDivisor(O.unit_ideal(), [0] * len(F.infinite_places), 0)

    def _shift(self, J, ninf, m):
        """Ideal form of D + m*P0."""
        P0 = self.P0
        if P0.infinite:
            ninf = list(ninf)
            ninf[P0.index] += m
            return J, ninf
        if m:
            J = self.F.O.ideal_mul(J, self.F.O.prime_power(P0, -m))
        return J, ninf

    def reduce(self, J, ninf, deg: int) -> ReducedDivisor:
        """Reduced representative of the class of D - deg*P0, D = (J, ninf) of degree deg."""
        F = self.F
        g = F.genus
        # D' = D - deg*P0 has degree 0; find the least m with L(D' + m P0) != 0
        shift = -deg

        def ok(t):
            Jm, nm = self._shift(J, ninf, shift + g - t)
            return rr_dim_form(F, Jm, nm) >= 1

        t = _largest(0, g, ok)
        m = g - t
        Jm, nm = self._shift(J, ninf, shift + m)
        space = rr_space(F, Jm, nm)
        if len(space) != 1:
            raise ArithmeticError("reduced divisor space is not one-dimensional")
        gamma = space[0]
        # E = D' + m P0 + div(gamma): ideal gamma^-1 J, infinite part plus values
        O = F.O
        ginv = gamma.inverse()
        JE = O.ideal_scale(Jm, list(ginv.v), ginv.d)
        vals = F.val_inf(gamma)
        nE = [a + b for a, b in zip(nm, vals)]
        return ReducedDivisor(JE, nE, m)

    def from_divisor(self, D: Divisor) -> ReducedDivisor:
        J, ninf = D.ideal_form()
        return self.reduce(J, ninf, D.degree)

    def add(self, A: ReducedDivisor, B: ReducedDivisor) -> ReducedDivisor:
        O = self.F.O
        J = O.ideal_mul(A.J, B.J)
        ninf = [a + b for a, b in zip(A.ninf, B.ninf)]
        return self.reduce(J, ninf, A.m + B.m)

    def is_zero(self, A: ReducedDivisor) -> bool:
        return A.key == self.zero.key
