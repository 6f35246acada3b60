"""Global function fields F = k(x)[t]/(f) with k = F_q, q prime.

The field keeps two orders. ``O`` is the maximal order over k[x] written in a
reduced basis; ``U`` is an order over k[u], u = 1/x, that is maximal at u and
whose primes above u are the infinite places. An element of F is stored as
polynomial coordinates in the reduced basis over a monic common denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import ceil, floor, lcm

from .arith import Poly, RatFunc, is_prime, poly_factor, poly_gcd, rat_height
from .linalg import (
    poly_mat_det,
    poly_vec_content,
    rank_mod,
    rat_mat_inverse,
    rat_vec_to_poly,
    weak_popov,
)
from .order import Order, Prime


class FieldError(ValueError):
    """Precondition violation while building a field."""


def swap_var(r: RatFunc) -> RatFunc:
    """r(1/z): the same function written in the reciprocal variable."""
    if r.is_zero():
        return r
    num, den = r.num, r.den
    k = den.deg - num.deg
    a, b = num.reverse(), den.reverse()
    if k >= 0:
        return RatFunc(a.shift(k), b)
    return RatFunc(a, b.shift(-k))


def _rat_row_times(row, mat, p):
    zero = RatFunc.from_int(0, p)
    out = [zero] * len(mat[0])
    for i, a in enumerate(row):
        if a.is_zero():
            continue
        for j, b in enumerate(mat[i]):
            if not b.is_zero():
                out[j] = out[j] + a * b
    return out


class FunctionField:
    """F = k(x)[t]/(f) with f monic in t; ``f`` is the list a_0(x), ..., a_n(x)."""

    def __init__(self, q: int, f: list, name: str | None = None):
        if not is_prime(q):
            raise FieldError(f"q = {q} is not prime")
        f = [a if isinstance(a, Poly) else Poly(a, q) for a in f]
        while len(f) > 1 and not f[-1].c:
            f.pop()
        n = len(f) - 1
        if n < 1:
            raise FieldError("f must have positive degree in t")
        if not f[-1].is_one():
            raise FieldError("f must be monic in t")
        if n % q == 0:
            raise FieldError(f"wild ramification excluded: gcd(n, q) = gcd({n}, {q}) != 1")
        self.q = q
        self.p = q
        self.f = f
        self.n = n
        self.name = name
        self.C_f = max([ceil(f[n - i].deg / i) for i in range(1, n + 1) if f[n - i].c] + [0])

        eq = Order.equation_order(q, f, "x")
        disc = eq.discriminant()
        if not disc.c:
            raise FieldError("f is reducible (zero discriminant)")
        self.disc_f = disc
        order = eq
        for pp, mult in poly_factor(disc)[1]:
            if mult >= 2:
                order = order.p_maximal(pp)
        self._max_order = order

        # infinite side: theta = x^C theta'
        C = self.C_f
        g_u = [f[i].reverse(C * (n - i)) if f[i].c else f[i] for i in range(n + 1)]
        self.f_u = g_u
        u = Poly.x(q)
        self.U = Order.equation_order(q, g_u, "u").p_maximal(u)
        places = self.U.primes_above(u)
        places = sorted(places, key=lambda P: (P.degree, P.e, P.index))
        for i, P in enumerate(places):
            P.infinite = True
            P.index = i
            if P.e % q == 0:
                raise FieldError(f"wild ramification at infinity (e = {P.e})")
        self.infinite_places = places
        self._minf_cache = {}
        self.cache = {}

        # first pass with the maximal order basis, then swap in the reduced basis
        self.O = order
        self._set_conversion()
        try:
            self._reduce_basis()
        except ArithmeticError as exc:
            # a reducible f gives a non-domain whose "basis" never fills up
            raise FieldError(f"f is reducible or degenerate: {exc}") from None
        self._set_conversion()
        self.O.field = self
        self._check_genus()
        if self.rr_dimension_zero() != 1:
            raise FieldError("f is reducible or the constant field is larger than F_q")

    # -- construction helpers ---------------------------------------------
    def _set_conversion(self):
        """K: reduced-basis coordinates (after swap_var) -> U coordinates."""
        p, n, C = self.p, self.n, self.C_f
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                w = swap_var(self.O.W[i][j])
                # u^(-C j)
                row.append(w * RatFunc(Poly.one(p), Poly.monomial(C * j, p)))
            rows.append(row)
        K = []
        for row in rows:
            K.append(_rat_row_times(row, self.U.Winv, p))
        self.K = K
        self._minf_cache = {}

    def _inf_matrix(self, ninf):
        """Y with the property: gamma (row of reduced coords) lies in prod P^-n_P
        locally at infinity iff every entry of gamma*Y has degree <= 0 in x."""
        key = tuple(ninf)
        Y = self._minf_cache.get(key)
        if Y is not None:
            return Y
        U, p = self.U, self.p
        ideal = U.unit_ideal()
        for P, k in zip(self.infinite_places, ninf):
            if k:
                ideal = U.ideal_mul(ideal, U.prime_power(P, -k))
        H = [[RatFunc(a, normalized=True) for a in row] for row in ideal.hnf]
        Hinv = rat_mat_inverse(H, p)
        hd = RatFunc(ideal.den, normalized=True)
        Z = [_rat_row_times(row, Hinv, p) for row in self.K]
        Y = [[swap_var(a * hd) for a in row] for row in Z]
        if len(self._minf_cache) > 4096:
            self._minf_cache.clear()
        self._minf_cache[key] = Y
        return Y

    def reduce_twisted(self, hnf, den, ninf):
        """Reduce the lattice hnf/den against the infinite multiplicities ninf.

        Returns [(vec, delta)] where vec/den runs over a k[x]-basis of the lattice
        and sum lambda_i vec_i/den has pole order at most ninf at infinity iff
        deg lambda_i + delta_i <= 0 for all i.
        """
        p = self.p
        Y = self._inf_matrix(ninf)
        T = [_rat_row_times([RatFunc(a, normalized=True) for a in row], Y, p) for row in hnf]
        L = Poly.one(p)
        for row in T:
            for a in row:
                if not a.den.is_one():
                    L = L * (a.den // poly_gcd(L, a.den))
        P = [[a.num * (L // a.den) for a in row] for row in T]
        rows, comp, degs = weak_popov(P, hnf)
        shift = L.deg + den.deg
        return [(c, d - shift) for c, d in zip(comp, degs)]

    def _reduce_basis(self):
        """Successive minima of O_F for the rational max norm."""
        p, n = self.p, self.n
        O = self.O
        E = reduce(lcm, [P.e for P in self.infinite_places], 1)
        unit = O.unit_ideal()
        zero = [0] * len(self.infinite_places)
        first = self.reduce_twisted(unit.hnf, unit.den, zero)
        top = max(d for _, d in first)
        chosen = []      # (vec, Fraction norm)
        for a in range(0, E * top + 1):
            s = Fraction(a, E)
            nvec = [floor(s * P.e) for P in self.infinite_places]
            red = self.reduce_twisted(unit.hnf, unit.den, nvec)
            space = []
            for vec, d in red:
                for j in range(0, -d + 1):
                    space.append([c.shift(j) for c in vec])
            if not space:
                continue
            span = []
            for vec, nm in chosen:
                for j in range(0, floor(s - nm) + 1):
                    span.append([c.shift(j) for c in vec])
            width = 1 + max(c.deg for v in space + span for c in v if c.c)
            flat = lambda v: [c.c[k] if k < len(c.c) else 0 for c in v for k in range(width)]
            rows = [flat(v) for v in span]
            r = rank_mod(rows, p) if rows else 0
            for v in space:
                cand = rows + [flat(v)]
                rc = rank_mod(cand, p)
                if rc > r:
                    if not chosen:
                        v = list(O.one())
                    chosen.append((v, s))
                    rows, r = cand, rc
            if len(chosen) == n:
                break
        if len(chosen) != n:
            raise ArithmeticError("reduced basis computation did not finish")
        det = poly_mat_det([v for v, _ in chosen], p)
        if det.deg != 0:
            raise ArithmeticError("reduced basis does not span the maximal order")
        num = []
        den = None
        for v, _ in chosen:
            pv, d = O.to_power(v, Poly.one(p))
            num.append(pv)
            den = d
        g = poly_gcd(den, poly_vec_content([a for r in num for a in r], p))
        if not g.is_one():
            num = [[a // g for a in r] for r in num]
            den = den // g
        self.O = Order(p, self.f, num, den, "x")
        self.inf_norms = [s for _, s in chosen]

    def _check_genus(self):
        n = self.n
        g = sum(ceil(s) for s in self.inf_norms) - n + 1
        m = 2 * ceil(max(self.inf_norms)) + 2
        for mm in (m, m + 1):
            dim = sum(max(0, floor(mm - s) + 1) for s in self.inf_norms)
            if mm * n + 1 - dim != g:
                raise ArithmeticError("inconsistent genus probes")
        self.genus = g

    def rr_dimension_zero(self) -> int:
        """dim L(0) = number of basis elements of norm 0."""
        return sum(1 for s in self.inf_norms if s == 0)

    # -- basic data -----------------------------------------------------------
    @property
    def g(self) -> int:
        return self.genus

    @property
    def unit_rank(self) -> int:
        return len(self.infinite_places) - 1

    def degree_one_infinite(self):
        """Infinite places of degree 1 (in place order)."""
        return [P for P in self.infinite_places if P.degree == 1]

    @property
    def anchor(self):
        """The degree-1 infinite place used to normalise compact representations."""
        ones = self.degree_one_infinite()
        return ones[0] if ones else None

    def f_str(self) -> str:
        from .arith import poly_str

        parts = []
        for i in range(self.n, -1, -1):
            a = self.f[i]
            if not a.c:
                continue
            mon = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            cs = poly_str(a)
            if not mon:
                parts.append(cs)
            elif a.is_one():
                parts.append(mon)
            elif len([c for c in a.c if c]) == 1:
                parts.append(f"{cs}*{mon}")
            else:
                parts.append(f"({cs})*{mon}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FunctionField(q={self.q}, f={self.f_str()!r})"

    # -- elements -------------------------------------------------------------
    def element(self, vec, den=None) -> FieldElement:
        return FieldElement(self, vec, den)

    def from_rat_coords(self, coords) -> FieldElement:
        num, den = rat_vec_to_poly(coords, self.p)
        return FieldElement(self, num, den)

    def zero(self) -> FieldElement:
        return FieldElement(self, [Poly.zero(self.p)] * self.n)

    def one(self) -> FieldElement:
        return FieldElement(self, self.O.one())

    def base(self, lam) -> FieldElement:
        """Embed an element of k(x) (int, Poly or RatFunc)."""
        p = self.p
        if isinstance(lam, int):
            lam = Poly.const(lam, p)
        if isinstance(lam, Poly):
            lam = RatFunc(lam, normalized=True)
        return FieldElement(self, [c * lam.num for c in self.O.one()], lam.den)

    def x(self) -> FieldElement:
        return self.base(Poly.x(self.p))

    def from_power(self, coeffs) -> FieldElement:
        """Element sum coeffs[j] theta^j with coefficients in k(x)."""
        p = self.p
        rat = [c if isinstance(c, RatFunc) else RatFunc(c if isinstance(c, Poly) else Poly.const(c, p))
               for c in coeffs]
        rat = rat + [RatFunc.from_int(0, p)] * (self.n - len(rat))
        return self.from_rat_coords(self.O.from_power_rat(rat))

    def theta(self) -> FieldElement:
        if self.n == 1:
            return self.base(-self.f[0])
        return self.from_power([Poly.zero(self.p), Poly.one(self.p)])

    def basis(self) -> list:
        p, n = self.p, self.n
        out = []
        for i in range(n):
            v = [Poly.zero(p)] * n
            v[i] = Poly.one(p)
            out.append(FieldElement(self, v))
        return out

    # -- valuations and norms ---------------------------------------------------
    def valuation(self, a: FieldElement, P: Prime) -> int:
        if a.is_zero():
            raise ValueError("valuation of zero")
        if P.infinite:
            c = self.inf_coords(a)
            return self.U.valuation(P, c)
        if P.order is not self.O:
            raise ValueError("place does not belong to this field")
        return self.O.valuation_poly(P, list(a.v), a.d)

    def inf_coords(self, a: FieldElement):
        """Coordinates of a in the order at infinity (rational in u)."""
        p = self.p
        row = [swap_var(RatFunc(c, a.d)) for c in a.v]
        return _rat_row_times(row, self.K, p)

    def val_inf(self, a: FieldElement) -> tuple:
        c = self.inf_coords(a)
        return tuple(self.U.valuation(P, c) for P in self.infinite_places)

    def max_norm(self, a: FieldElement) -> Fraction:
        vals = self.val_inf(a)
        return max(Fraction(-v, P.e) for v, P in zip(vals, self.infinite_places))

    def norm(self, a: FieldElement) -> RatFunc:
        return a.norm()

    def finite_primes(self, pp: Poly):
        """Finite places over the monic irreducible pp."""
        return self.O.primes_above(pp)

    def places_of_degree(self, d: int) -> list:
        """All finite places of degree d (small q and d only)."""
        from .arith import monic_irreducibles

        out = []
        for k in range(1, d + 1):
            if d % k:
                continue
            for pp in monic_irreducibles(self.p, k):
                for P in self.O.primes_above(pp):
                    if P.degree == d:
                        out.append(P)
        return out


class FieldElement:
    """Element sum v_i omega_i / d of F in reduced-basis coordinates."""

    __slots__ = ("F", "v", "d", "_hash")

    def __init__(self, F: FunctionField, vec, den: Poly | None = None):
        p = F.p
        vec = tuple(vec)
        if den is None or den.is_one():
            den = Poly.one(p)
        else:
            if not den.c:
                raise ZeroDivisionError("zero denominator")
            g = poly_gcd(poly_vec_content(vec, p), den) if any(c.c for c in vec) else den
            if not g.is_one():
                vec = tuple(c // g for c in vec)
                den = den // g
            lc = den.lc
            if lc != 1:
                inv = pow(lc, p - 2, p)
                vec = tuple(c * inv for c in vec)
                den = den * inv
        self.F = F
        self.v = vec
        self.d = den
        self._hash = None

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return all(not c.c for c in self.v)

    def is_integral(self) -> bool:
        return self.d.is_one()

    def coords(self) -> list:
        return [RatFunc(c, self.d) for c in self.v]

    def power_coords(self) -> list:
        num, den = self.F.O.to_power(list(self.v), self.d)
        return [RatFunc(c, den) for c in num]

    def height(self) -> int:
        return max((rat_height(c) for c in self.coords()), default=0)

    def is_constant(self):
        """The constant in F_q if self lies in k, else None."""
        one = self.F.O.one()
        if not self.d.is_one():
            return None
        lam = None
        for a, b in zip(self.v, one):
            if not b.c:
                if a.c:
                    return None
                continue
            if a.deg > 0 or (a.c and not b.is_constant()):
                return None
            c = (a.c[0] if a.c else 0) * pow(b.c[0], self.F.p - 2, self.F.p) % self.F.p
            if lam is None:
                lam = c
            elif lam != c:
                return None
        if lam is None:
            return None
        return lam if (self.F.base(lam) == self) else None

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Poly, RatFunc)):
            return self.F.base(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.d == other.d:
            return FieldElement(self.F, [a + b for a, b in zip(self.v, other.v)], self.d)
        g = poly_gcd(self.d, other.d)
        fa, fb = other.d // g, self.d // g
        return FieldElement(self.F, [a * fa + b * fb for a, b in zip(self.v, other.v)], self.d * fa)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.F, [-a for a in self.v], self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            return FieldElement(self.F, [a * other for a in self.v], self.d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.F, self.F.O.mul(self.v, other.v), self.d * other.d)

    __rmul__ = __mul__

    def mult_matrix(self):
        """Polynomial matrix M with self*omega_i = sum_j M_ij omega_j / d."""
        return self.F.O.mult_matrix(list(self.v))

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        F = self.F
        p = F.p
        M = [[RatFunc(a, normalized=True) for a in row] for row in self.mult_matrix()]
        Minv = rat_mat_inverse(M, p)
        one = [RatFunc(c, normalized=True) for c in F.O.one()]
        y = _rat_row_times(one, Minv, p)
        num, den = rat_vec_to_poly(y, p)
        return FieldElement(F, [c * self.d for c in num], den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.F.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Poly, RatFunc)):
            other = self.F.base(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.F is other.F and self.d == other.d and self.v == other.v

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(c.c for c in self.v), self.d.c))
        return self._hash

    def sort_key(self):
        return (self.d.deg, self.d.c, tuple((c.deg if c.c else -1, c.c) for c in self.v))

    # -- norm ---------------------------------------------------------------
    def norm(self) -> RatFunc:
        p = self.F.p
        if self.is_zero():
            return RatFunc.from_int(0, p)
        det = poly_mat_det(self.mult_matrix(), p)
        return RatFunc(det, self.d ** self.F.n)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        from .arith import poly_str

        parts = []
        for i, c in enumerate(self.v):
            if c.c:
                parts.append(f"({poly_str(c)})*w{i + 1}")
        s = " + ".join(parts) or "0"
        if not self.d.is_one():
            s = f"({s})/({poly_str(self.d)})"
        return s
