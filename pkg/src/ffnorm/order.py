"""Orders in F = k(z)[t]/(g) over the polynomial ring k[z].

This module knows nothing about x or infinity: the function field builds one
``Order`` over k[x] for the finite places and another over k[u], u = 1/x, for
the infinite ones. Element vectors are in coordinates of the order's basis.
"""

from __future__ import annotations

import random

from .arith import Poly, RatFunc, poly_gcd, poly_lcm
from .linalg import (
    hnf_contains,
    hnf_poly,
    left_kernel_mod,
    poly_mat_det,
    poly_vec_content,
    rank_mod,
    rat_mat_inverse,
    rat_vec_to_poly,
    rref_mod,
)


class Prime:
    """A prime ideal of an order lying over the irreducible polynomial ``p``."""

    __slots__ = ("order", "p", "hnf", "e", "f", "beta", "beta_mat", "index", "infinite")

    def __init__(self, order, p, hnf, f, beta):
        self.order = order
        self.infinite = False
        self.p = p
        self.hnf = hnf
        self.f = f
        self.beta = beta
        self.beta_mat = order.mult_matrix(beta)
        self.e = None
        self.index = None

    @property
    def degree(self) -> int:
        """Degree of the residue field over k."""
        return self.f * self.p.deg

    @property
    def deg(self) -> int:
        return self.degree

    @property
    def f_res(self) -> int:
        return self.f

    @property
    def key(self):
        """Hashable identifier, stable across runs."""
        if self.infinite:
            return ("inf", self.index)
        return ("fin", self.p.c, self.index)

    def __lt__(self, other):
        return (self.infinite, self.key) < (other.infinite, other.key)

    def __repr__(self):
        if self.infinite:
            return f"InfPlace({self.index}, e={self.e}, deg={self.degree})"
        return f"Prime(p={self.p}, index={self.index}, e={self.e}, f={self.f})"


class Ideal:
    """Fractional ideal: rows of ``hnf`` (order coordinates) divided by ``den``."""

    __slots__ = ("order", "hnf", "den", "_key")

    def __init__(self, order, hnf, den):
        self.order = order
        self.hnf = hnf
        self.den = den
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = (tuple(tuple(a.c for a in r) for r in self.hnf), self.den.c)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def is_integral(self) -> bool:
        return self.den.is_one()

    def __repr__(self):
        return f"Ideal(den={self.den}, diag={[str(r[i]) for i, r in enumerate(self.hnf)]})"


class Order:
    """A k[z]-order with basis rows ``basis_num / basis_den`` in power coordinates."""

    def __init__(self, p: int, g: list, basis_num, basis_den: Poly, var: str = "x"):
        self.p = p
        self.g = g
        self.n = len(g) - 1
        self.field = None
        self.var = var
        self.basis_num = basis_num
        self.basis_den = basis_den
        self.W = [[RatFunc(a, basis_den) for a in row] for row in basis_num]
        self.Winv = rat_mat_inverse(self.W, p)
        self._build_table()
        self._prime_cache = {}
        self._power_cache = {}
        self._one = None

    @classmethod
    def equation_order(cls, p, g, var="x"):
        n = len(g) - 1
        one, zero = Poly.one(p), Poly.zero(p)
        basis = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(p, g, basis, one, var)

    # -- power basis arithmetic ---------------------------------------
    def power_mul(self, a, b):
        """Product of power-coordinate polynomial vectors, reduced mod g."""
        n, p = self.n, self.p
        zero = Poly.zero(p)
        prod = [zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai.c:
                for j, bj in enumerate(b):
                    if bj.c:
                        prod[i + j] = prod[i + j] + ai * bj
        g = self.g
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c.c:
                prod[k] = zero
                for j in range(n):
                    if g[j].c:
                        prod[k - n + j] = prod[k - n + j] - c * g[j]
        return prod[:n]

    def to_power(self, vec, den):
        """Order coordinates (poly vec / den) -> (poly vec, den) in power coordinates."""
        n = self.n
        zero = Poly.zero(self.p)
        out = [zero] * n
        for i, a in enumerate(vec):
            if a.c:
                row = self.basis_num[i]
                for j in range(n):
                    if row[j].c:
                        out[j] = out[j] + a * row[j]
        return out, den * self.basis_den

    def from_power_rat(self, vec):
        """Rational power coordinates -> rational order coordinates."""
        n, p = self.n, self.p
        zero = RatFunc.from_int(0, p)
        out = [zero] * n
        for i, a in enumerate(vec):
            if not a.is_zero():
                row = self.Winv[i]
                for j in range(n):
                    if not row[j].is_zero():
                        out[j] = out[j] + a * row[j]
        return out

    # -- structure constants -----------------------------------------
    def _build_table(self):
        n, p = self.n, self.p
        table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                prod = self.power_mul(self.basis_num[i], self.basis_num[j])
                d2 = self.basis_den * self.basis_den
                rat = [RatFunc(c, d2) for c in prod]
                coords = self.from_power_rat(rat)
                vec = []
                for c in coords:
                    if not c.is_poly():
                        raise ArithmeticError("basis does not span an order (non-integral product)")
                    vec.append(c.num)
                table[i][j] = table[j][i] = vec
        self.table = table

    def mul(self, a, b):
        """Product of polynomial coordinate vectors."""
        n, p = self.n, self.p
        zero = Poly.zero(p)
        out = [zero] * n
        table = self.table
        for i, ai in enumerate(a):
            if not ai.c:
                continue
            for j, bj in enumerate(b):
                if not bj.c:
                    continue
                ab = ai * bj
                tij = table[i][j]
                for m in range(n):
                    if tij[m].c:
                        out[m] = out[m] + ab * tij[m]
        return out

    def mult_matrix(self, a):
        """Rows: coordinates of a * basis_i."""
        n = self.n
        rows = []
        for i in range(n):
            e = [Poly.zero(self.p)] * n
            e[i] = Poly.one(self.p)
            rows.append(self.mul(a, e))
        return rows

    def vec_mat(self, v, m):
        zero = Poly.zero(self.p)
        out = [zero] * self.n
        for i, vi in enumerate(v):
            if vi.c:
                for j, mij in enumerate(m[i]):
                    if mij.c:
                        out[j] = out[j] + vi * mij
        return out

    def one(self):
        """Coordinates of 1."""
        if self._one is None:
            rat = [RatFunc.from_int(1 if i == 0 else 0, self.p) for i in range(self.n)]
            self._one = [c.num for c in self.from_power_rat(rat)]
        return self._one

    def trace(self, a) -> Poly:
        m = self.mult_matrix(a)
        t = Poly.zero(self.p)
        for i in range(self.n):
            t = t + m[i][i]
        return t

    def discriminant(self) -> Poly:
        n = self.n
        traces = [[None] * n for _ in range(n)]
        unit = [[Poly.one(self.p) if i == j else Poly.zero(self.p) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                traces[i][j] = traces[j][i] = self.trace(self.mul(unit[i], unit[j]))
        return poly_mat_det(traces, self.p)

    # -- the algebra O/pO over F_q --------------------------------------
    def _flat(self, vec, d):
        out = []
        for a in vec:
            c = a.c
            out.extend(c[k] if k < len(c) else 0 for k in range(d))
        return out

    def _unflat(self, flat, d):
        return [Poly(flat[i * d:(i + 1) * d], self.p) for i in range(self.n)]

    def _alg_basis(self, d):
        n = self.n
        out = []
        for i in range(n):
            for k in range(d):
                v = [Poly.zero(self.p)] * n
                v[i] = Poly.monomial(k, self.p)
                out.append(v)
        return out

    def _alg_mul(self, a, b, pp):
        return [c % pp for c in self.mul(a, b)]

    def _alg_pow(self, a, e, pp):
        result = [c % pp for c in self.one()]
        base = a
        while e:
            if e & 1:
                result = self._alg_mul(result, base, pp)
            e >>= 1
            if e:
                base = self._alg_mul(base, base, pp)
        return result

    def _radical(self, pp):
        """F_q-basis (flat vectors) of the p-radical modulo pO."""
        d = pp.deg
        N = self.n * d
        q = self.p
        k = 1
        while q ** k < self.n:
            k += 1
        images = [self._flat(self._alg_pow(b, q ** k, pp), d) for b in self._alg_basis(d)]
        # radical = kernel of b -> b^(q^k), images are rows (one per basis vector)
        return left_kernel_mod(images, q) if N else []

    def _lift_module(self, pp, flats):
        """HNF of pO + lifts of the given F_q vectors."""
        n = self.n
        d = pp.deg
        gens = []
        for i in range(n):
            v = [Poly.zero(self.p)] * n
            v[i] = pp
            gens.append(v)
        for fv in flats:
            gens.append(self._unflat(fv, d))
        return hnf_poly(gens, n, self.p)

    def _coords_in(self, hnf, v):
        """Coordinates of v in the triangular basis ``hnf`` (exact)."""
        n = self.n
        v = list(v)
        out = []
        for j in range(n):
            if not v[j].c:
                out.append(Poly.zero(self.p))
                continue
            qt, r = divmod(v[j], hnf[j][j])
            if r.c:
                raise ArithmeticError("vector not in module")
            out.append(qt)
            v = [a - qt * b for a, b in zip(v, hnf[j])]
        return out

    def p_maximal(self, pp, max_rounds: int = 64):
        """Round 2 enlargement at the prime pp; returns a pp-maximal order."""
        order = self
        d = pp.deg
        for _ in range(max_rounds):
            rad = order._radical(pp)
            ip = order._lift_module(pp, rad)
            # multipliers a of I_p with a*I_p in p*I_p, as subspace of O/pO
            rows = []
            for b in order._alg_basis(d):
                row = []
                for h in ip:
                    prod = order.mul(b, h)
                    coords = order._coords_in(ip, prod)
                    row.extend(order._flat([c % pp for c in coords], d))
                rows.append(row)
            ker = left_kernel_mod(rows, self.p)
            if not ker:
                return order
            u = order._lift_module(pp, ker)
            # new basis: u / pp in old order coordinates -> power coordinates
            new_num = []
            for row in u:
                pv, den = order.to_power(row, Poly.one(self.p))
                new_num.append(pv)
            den = order.basis_den * pp
            # normalize the common denominator
            g = poly_gcd(den, poly_vec_content([a for r in new_num for a in r], self.p))
            if not g.is_one():
                new_num = [[a // g for a in r] for r in new_num]
                den = den // g
            order = Order(self.p, self.g, new_num, den, self.var)
        raise RuntimeError(f"p-maximality loop did not terminate at {pp}")

    def primes_above(self, pp) -> list[Prime]:
        """Prime ideals over pp (the order must be pp-maximal)."""
        key = pp.c
        if key in self._prime_cache:
            return self._prime_cache[key]
        q = self.p
        d = pp.deg
        N = self.n * d
        basis = self._alg_basis(d)
        basis_flat = [self._flat(b, d) for b in basis]
        rad = self._radical(pp)
        rad_rows = rref_mod(rad, q)[0] if rad else []

        def combine(coeffs):
            return [sum(c * bf[k] for c, bf in zip(coeffs, basis_flat)) % q for k in range(N)]

        # Berlekamp subalgebra modulo the radical: {a : a^q - a in R}
        frob_rows = []
        for b, bf in zip(basis, basis_flat):
            img = self._flat(self._alg_pow(b, q, pp), d)
            frob_rows.append([(x - y) % q for x, y in zip(img, bf)])
        ker = left_kernel_mod(frob_rows + rad_rows, q)
        berl = [combine(k[:N]) for k in ker]
        berl = rref_mod(berl + rad_rows, q)[0]
        one_flat = self._flat([c % pp for c in self.one()], d)
        rng = random.Random(12345)
        idempotents = self._split_idempotents(one_flat, berl, rad_rows, pp, rng)

        primes = []
        for e in idempotents:
            # P/pO = R + (1 - e) A
            om = self._unflat([(a - b) % q for a, b in zip(one_flat, e)], d)
            gens = list(rad_rows)
            for b in basis:
                gens.append(self._flat(self._alg_mul(om, b, pp), d))
            sub = rref_mod(gens, q)[0]
            f = (N - len(sub)) // d
            hnf = self._lift_module(pp, sub)
            # anti-uniformizer numerator: a nonzero annihilator of P/pO in O/pO
            rows = []
            for b in basis:
                row = []
                for sv in sub:
                    row.extend(self._flat(self._alg_mul(b, self._unflat(sv, d), pp), d))
                rows.append(row)
            beta = None
            for vec in left_kernel_mod(rows, q):
                flat = combine(vec)
                if any(flat):
                    beta = self._unflat(flat, d)
                    break
            if beta is None:
                raise ArithmeticError("no anti-uniformizer found")
            primes.append(Prime(self, pp, hnf, f, beta))
        ppvec = [pp * c for c in self.one()]
        for P in primes:
            P.e = self.valuation_int(P, ppvec)
        primes.sort(key=lambda P: (P.f, P.e, tuple(tuple(a.c for a in r) for r in P.hnf)))
        for i, P in enumerate(primes):
            P.index = i
        if sum(P.e * P.f for P in primes) != self.n:
            raise ArithmeticError(f"fundamental identity fails over {pp}")
        self._prime_cache[key] = primes
        return primes

    def _split_idempotents(self, e, berl, rad_rows, pp, rng):
        """Primitive idempotents (modulo the radical) below the idempotent e."""
        q = self.p
        d = pp.deg
        eu = self._unflat(e, d)
        sub = [self._flat(self._alg_mul(eu, self._unflat(b, d), pp), d) for b in berl]
        rad_dim = len(rad_rows)
        count = rank_mod(sub + rad_rows, q) - rad_dim
        if count <= 1:
            return [e]
        for _ in range(500):
            a = [0] * len(e)
            for s in sub:
                c = rng.randrange(q)
                if c:
                    a = [(x + c * y) % q for x, y in zip(a, s)]
            pieces = []
            for c in range(q):
                diff = self._unflat([(x - c * y) % q for x, y in zip(a, e)], d)
                pw = self._flat(self._alg_pow(diff, q - 1, pp), d)
                ec = [(x - y) % q for x, y in zip(e, pw)]
                if rank_mod(rad_rows + [ec], q) > rad_dim:
                    pieces.append(ec)
            if len(pieces) > 1:
                out = []
                for piece in pieces:
                    out.extend(self._split_idempotents(piece, berl, rad_rows, pp, rng))
                return out
        raise ArithmeticError("failed to split semisimple algebra")

    # -- valuations ----------------------------------------------------
    def valuation_int(self, P: Prime, a) -> int:
        """v_P(a) for a nonzero integral coordinate vector a."""
        pp = P.p
        v = 0
        if P.e is not None:
            while all(not c.c or pp.divides(c) for c in a):
                a = [c // pp for c in a]
                v += P.e
        bm = P.beta_mat
        while True:
            prod = self.vec_mat(a, bm)
            qr = [divmod(c, pp) for c in prod]
            if any(r.c for _, r in qr):
                return v
            a = [qt for qt, _ in qr]
            v += 1

    def valuation(self, P: Prime, vec_rat) -> int:
        """v_P of an element given by rational order coordinates."""
        num, den = rat_vec_to_poly(vec_rat, self.p)
        if all(not a.c for a in num):
            raise ValueError("valuation of zero")
        return self.valuation_poly(P, num, den)

    def valuation_poly(self, P, num, den) -> int:
        vd = 0
        pp = P.p
        while den.c and pp.divides(den):
            den = den // pp
            vd += 1
        return self.valuation_int(P, num) - P.e * vd

    # -- ideals --------------------------------------------------------
    def ideal_from_gens(self, gens, den=None) -> Ideal:
        """Ideal (as k[z]-module) generated by polynomial vectors divided by den."""
        p = self.p
        if den is None:
            den = Poly.one(p)
        h = hnf_poly(gens, self.n, p)
        return self._normalize(h, den)

    def _normalize(self, h, den):
        p = self.p
        content = poly_vec_content([a for r in h for a in r], p)
        g = poly_gcd(content, den) if content.c else den
        if not g.is_one():
            h = [[a // g for a in r] for r in h]
            den = den // g
        den = den.monic()
        return Ideal(self, h, den)

    def ideal_from_elements(self, elems) -> Ideal:
        """O-ideal generated by elements given as (poly vec, den)."""
        p = self.p
        den = Poly.one(p)
        for _, d in elems:
            den = poly_lcm(den, d)
        gens = []
        for v, d in elems:
            f = den // d
            for i in range(self.n):
                e = [Poly.zero(p)] * self.n
                e[i] = Poly.one(p)
                gens.append([c * f for c in self.mul(v, e)])
        return self.ideal_from_gens(gens, den)

    def unit_ideal(self) -> Ideal:
        one = Poly.one(self.p)
        zero = Poly.zero(self.p)
        h = [[one if i == j else zero for j in range(self.n)] for i in range(self.n)]
        return Ideal(self, h, one)

    def prime_ideal(self, P: Prime) -> Ideal:
        return Ideal(self, P.hnf, Poly.one(self.p))

    def prime_inverse(self, P: Prime) -> Ideal:
        # P^-1 = O + (beta / p) O
        n = self.n
        gens = []
        for i in range(n):
            e = [Poly.zero(self.p)] * n
            e[i] = P.p
            gens.append(e)
            e2 = [Poly.zero(self.p)] * n
            e2[i] = Poly.one(self.p)
            gens.append(self.mul(P.beta, e2))
        return self.ideal_from_gens(gens, P.p)

    def ideal_mul(self, a: Ideal, b: Ideal) -> Ideal:
        gens = [self.mul(r, s) for r in a.hnf for s in b.hnf]
        return self.ideal_from_gens(gens, a.den * b.den)

    def ideal_scale(self, a: Ideal, vec, den) -> Ideal:
        """Product of an ideal with the element vec/den."""
        gens = [self.mul(r, vec) for r in a.hnf]
        return self.ideal_from_gens(gens, a.den * den)

    def ideal_pow(self, a: Ideal, k: int) -> Ideal:
        if k < 0:
            raise ValueError("use prime powers with inverses for negative exponents")
        result = self.unit_ideal()
        base = a
        while k:
            if k & 1:
                result = self.ideal_mul(result, base)
            k >>= 1
            if k:
                base = self.ideal_mul(base, base)
        return result

    def prime_power(self, P: Prime, k: int) -> Ideal:
        key = ("pp", P.p.c, P.index, k)
        if key in self._power_cache:
            return self._power_cache[key]
        if k == 0:
            r = self.unit_ideal()
        elif k > 0:
            r = self.ideal_pow(self.prime_ideal(P), k)
        else:
            r = self.ideal_pow(self.prime_inverse(P), -k)
        self._power_cache[key] = r
        return r

    def ideal_norm(self, a: Ideal):
        """Monic norm as a RatFunc: det(hnf) / den^n."""
        det = Poly.one(self.p)
        for i, r in enumerate(a.hnf):
            det = det * r[i]
        return RatFunc(det, a.den ** self.n)

    def ideal_contains(self, a: Ideal, vec, den) -> bool:
        # vec/den in hnf/a.den  <=>  vec * a.den / den in hnf (as polynomials)
        scaled = []
        for c in vec:
            t = c * a.den
            qt, r = divmod(t, den)
            if r.c:
                return False
            scaled.append(qt)
        return hnf_contains(a.hnf, scaled, self.p)

    def ideal_valuation(self, a: Ideal, P: Prime) -> int:
        best = None
        for r in a.hnf:
            if any(c.c for c in r):
                v = self.valuation_int(P, r)
                best = v if best is None else min(best, v)
        vd = 0
        den = a.den
        while P.p.divides(den) and den.deg > 0:
            den = den // P.p
            vd += 1
        return best - P.e * vd
