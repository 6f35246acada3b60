"""Exact arithmetic over a prime field F_q: polynomials, rational functions and
truncated Laurent series in u = 1/x.

Polynomials are immutable coefficient tuples, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple and has degree
``DEG_ZERO`` (minus infinity).
"""

from __future__ import annotations

import random
from functools import lru_cache

DEG_ZERO = float("-inf")


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


class Fq:
    """A residue modulo a prime q. Used at API edges; inner loops work on ints."""

    __slots__ = ("q", "value")

    def __init__(self, value: int, q: int):
        self.q = q
        self.value = value % q

    def _other(self, other):
        if isinstance(other, Fq):
            if other.q != self.q:
                raise ValueError("mixed moduli")
            return other.value
        return other % self.q

    def __add__(self, other):
        return Fq(self.value + self._other(other), self.q)

    __radd__ = __add__

    def __sub__(self, other):
        return Fq(self.value - self._other(other), self.q)

    def __rsub__(self, other):
        return Fq(self._other(other) - self.value, self.q)

    def __mul__(self, other):
        return Fq(self.value * self._other(other), self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return Fq(-self.value, self.q)

    def inverse(self) -> Fq:
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return Fq(pow(self.value, self.q - 2, self.q), self.q)

    def __truediv__(self, other):
        return self * Fq(self._other(other), self.q).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fq(pow(self.value, e, self.q), self.q)

    def __eq__(self, other):
        if isinstance(other, Fq):
            return self.q == other.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.q
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.value))

    def __repr__(self):
        return f"Fq({self.value}, {self.q})"


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Univariate polynomial over F_p, coefficients lowest degree first."""

    __slots__ = ("p", "c")

    def __init__(self, coeffs, p: int, *, normalized: bool = False):
        self.p = p
        if normalized:
            self.c = coeffs
        else:
            self.c = _trim([a % p for a in coeffs])

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, p):
        return cls((), p, normalized=True)

    @classmethod
    def one(cls, p):
        return cls((1,), p, normalized=True)

    @classmethod
    def const(cls, a, p):
        return cls((a,), p)

    @classmethod
    def x(cls, p):
        return cls((0, 1), p, normalized=True)

    @classmethod
    def monomial(cls, k, p, a=1):
        return cls([0] * k + [a], p)

    # -- basic properties --------------------------------------------
    @property
    def deg(self):
        return len(self.c) - 1 if self.c else DEG_ZERO

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c and self.p == other.p
        if isinstance(other, int):
            return self.c == _trim([other % self.p])
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.c))

    def __lt__(self, other):
        # deterministic total order: degree first, then coefficients high to low
        return (len(self.c), self.c[::-1]) < (len(other.c), other.c[::-1])

    # -- ring operations ---------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,), self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, p = self.c, other.c, self.p
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, bi in enumerate(b):
            r[i] = (r[i] + bi) % p
        return Poly(_trim(r), p, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly(tuple((-a) % p for a in self.c), p, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            a = other % self.p
            if a == 0:
                return Poly.zero(self.p)
            return Poly(tuple(c * a % self.p for c in self.c), self.p, normalized=True)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b, p = self.c, other.c, self.p
        if not a or not b:
            return Poly.zero(p)
        r = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    r[i + j] += ai * bj
        return Poly(tuple(v % p for v in r), p, normalized=True)

    __rmul__ = __mul__

    def scale(self, a: int) -> Poly:
        return self * a

    def shift(self, k: int) -> Poly:
        """Multiply by x^k (k >= 0)."""
        if not self.c:
            return self
        return Poly((0,) * k + self.c, self.p, normalized=True)

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        if len(a) - 1 < db:
            return Poly.zero(p), self
        inv = pow(b[-1], p - 2, p)
        qt = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            coef = a[i] * inv % p
            if coef:
                qt[i - db] = coef
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - coef * b[j]) % p
        return Poly(_trim(qt), p, normalized=True), Poly(_trim(a[:db]), p, normalized=True)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        qt, r = divmod(self, other)
        if r.c:
            raise ArithmeticError("inexact polynomial division")
        return qt

    def divides(self, other) -> bool:
        """True when self | other."""
        return not (other % self).c

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, m: Poly) -> Poly:
        result = Poly.one(self.p)
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result

    def monic(self) -> Poly:
        if not self.c or self.c[-1] == 1:
            return self
        return self * pow(self.c[-1], self.p - 2, self.p)

    def derivative(self) -> Poly:
        p = self.p
        return Poly([i * a for i, a in enumerate(self.c)][1:], p)

    def __call__(self, v: int) -> int:
        acc = 0
        for a in reversed(self.c):
            acc = (acc * v + a) % self.p
        return acc

    def reverse(self, d: int | None = None) -> Poly:
        """x^d * self(1/x); d defaults to deg self."""
        if d is None:
            d = len(self.c) - 1
        if not self.c:
            return self
        c = list(self.c) + [0] * (d + 1 - len(self.c))
        return Poly(c[::-1], self.p)

    def val_x(self) -> int:
        """Multiplicity of x as a factor (self != 0)."""
        for i, a in enumerate(self.c):
            if a:
                return i
        raise ValueError("valuation of zero polynomial")

    def __repr__(self):
        return f"Poly({poly_str(self)!r}, p={self.p})"

    def __str__(self):
        return poly_str(self)


def poly_str(f: Poly, var: str = "x") -> str:
    if not f.c:
        return "0"
    terms = []
    for i in range(len(f.c) - 1, -1, -1):
        a = f.c[i]
        if not a:
            continue
        if i == 0:
            terms.append(str(a))
        else:
            mon = var if i == 1 else f"{var}^{i}"
            terms.append(mon if a == 1 else f"{a}*{mon}")
    return " + ".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b.c:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g monic."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Poly.one(p), Poly.zero(p)
    t0, t1 = Poly.zero(p), Poly.one(p)
    while r1.c:
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if not r0.c:
        return r0, s0, t0
    inv = pow(r0.lc, p - 2, p)
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b // poly_gcd(a, b)).monic()


def poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    g, s, _ = poly_xgcd(a, m)
    if not g.is_one():
        raise ZeroDivisionError("polynomial not invertible modulo m")
    return s % m


# ---------------------------------------------------------------------------
# factorization


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic f -> [(g, m)] with f = prod g^m, g squarefree, pairwise coprime."""
    p = f.p
    out = []

    def rec(f, mult):
        if f.deg <= 0:
            return
        df = f.derivative()
        if not df.c:
            # f = g(x^p); over a prime field g(x^p) = (g)^p with the same coefficients
            g = Poly(f.c[::p], p)
            rec(g, mult * p)
            return
        c = poly_gcd(f, df)
        w = f // c
        i = 1
        while w.deg > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.deg > 0:
                out.append((z.monic(), i * mult))
            i += 1
            w = y
            c = c // y
        if c.deg > 0:
            g = Poly(c.c[::p], p)
            rec(g, mult * p)

    rec(f.monic(), 1)
    return out


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree monic f -> [(g_d, d)] where g_d is the product of degree-d factors."""
    p = f.p
    out = []
    x = Poly.x(p)
    h = x
    d = 0
    rest = f
    while rest.deg >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, rest)
        g = poly_gcd(rest, h - x)
        if g.deg > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.deg > 0:
        out.append((rest.monic(), rest.deg))
    return out


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split squarefree monic f whose factors all have degree d."""
    if f.deg == d:
        return [f]
    p = f.p
    n = f.deg
    while True:
        a = Poly([rng.randrange(p) for _ in range(n)], p)
        if a.deg <= 0:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = a
            acc = a
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            g = poly_gcd(f, acc)
        else:
            g = poly_gcd(f, a.powmod((p ** d - 1) // 2, f) - 1)
        if 0 < g.deg < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def poly_factor(f: Poly, seed: int = 0) -> tuple[int, list[tuple[Poly, int]]]:
    """Factor f into (leading coefficient, [(monic irreducible, multiplicity)]).

    Factors are sorted by (degree, coefficients) so output is deterministic.
    """
    if not f.c:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    lc = f.lc
    factors = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                factors.append((irr.monic(), m))
    factors.sort(key=lambda t: (t[0].deg, t[0].c[::-1]))
    return lc, factors


def is_irreducible(f: Poly) -> bool:
    if f.deg <= 0:
        return False
    _, fac = poly_factor(f)
    return len(fac) == 1 and fac[0][1] == 1


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, d: int) -> tuple[Poly, ...]:
    """All monic irreducible polynomials of degree d over F_p, in a fixed order."""
    out = []
    if d == 1:
        return tuple(Poly((a, 1), p) for a in range(p))
    for idx in range(p ** d):
        coeffs = []
        v = idx
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        f = Poly(coeffs + [1], p)
        if f.c[0] == 0:
            continue
        if is_irreducible(f):
            out.append(f)
    return tuple(out)


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """num/den over F_p with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, normalized: bool = False):
        if den is None:
            den = Poly.one(num.p)
        if not normalized:
            if not den.c:
                raise ZeroDivisionError("rational function with zero denominator")
            if not num.c:
                den = Poly.one(num.p)
            elif not den.is_one():
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num // g
                    den = den // g
                lc = den.lc
                if lc != 1:
                    inv = pow(lc, num.p - 2, num.p)
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @property
    def p(self):
        return self.num.p

    @classmethod
    def from_int(cls, a: int, p: int):
        return cls(Poly.const(a, p), normalized=True)

    def is_zero(self):
        return not self.num.c

    def __bool__(self):
        return bool(self.num.c)

    def is_poly(self):
        return self.den.is_one()

    @property
    def deg(self):
        """deg num - deg den (minus the valuation at infinity)."""
        if not self.num.c:
            return DEG_ZERO
        return self.num.deg - self.den.deg

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, normalized=True)
        if isinstance(other, int):
            return RatFunc(Poly.const(other, self.p), normalized=True)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.c or not other.num.c:
            return RatFunc(Poly.zero(self.p), normalized=True)
        # cross-cancel to keep intermediate sizes down
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        lc = den.lc
        if lc != 1:
            inv = pow(lc, self.p - 2, self.p)
            num, den = num * inv, den * inv
        return RatFunc(num, den, normalized=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e, normalized=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.is_one():
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"


def rat_height(lam: RatFunc) -> int:
    """max(deg num, deg den); 0 for the zero function."""
    if lam.is_zero():
        return 0
    return max(lam.num.deg, lam.den.deg)


def poly_height(f: Poly) -> int:
    return 0 if not f.c else f.deg


# ---------------------------------------------------------------------------
# Laurent series in u = 1/x


class LaurentSeries:
    """Truncated series sum_{i} coeffs[i] * u^(lead_exp + i), known through u^prec."""

    __slots__ = ("p", "lead_exp", "coeffs", "prec")

    def __init__(self, p: int, lead_exp: int, coeffs, prec: int):
        coeffs = [a % p for a in coeffs]
        # normalize: drop leading zeros and anything past prec
        coeffs = coeffs[: max(0, prec - lead_exp + 1)]
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        coeffs = coeffs[k:]
        lead_exp += k
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.p = p
        self.lead_exp = lead_exp if coeffs else prec + 1
        self.coeffs = tuple(coeffs)
        self.prec = prec

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self):
        """Exponent of the first nonzero term, or None when zero to precision."""
        return self.lead_exp if self.coeffs else None

    def coeff(self, e: int) -> int:
        if e > self.prec:
            raise ValueError("coefficient beyond precision")
        i = e - self.lead_exp
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict:
        return {self.lead_exp + i: a for i, a in enumerate(self.coeffs) if a}

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        lo = min(self.lead_exp, other.lead_exp)
        c = [0] * max(0, prec - lo + 1)
        for e, a in self.terms().items():
            if e <= prec:
                c[e - lo] += a
        for e, a in other.terms().items():
            if e <= prec:
                c[e - lo] += a
        return LaurentSeries(self.p, lo, c, prec)

    def __neg__(self):
        return LaurentSeries(self.p, self.lead_exp, [-a for a in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            prec = min(self.prec + (other.lead_exp if other.coeffs else 0),
                       other.prec + (self.lead_exp if self.coeffs else 0))
            return LaurentSeries(self.p, 0, [], prec)
        prec = min(self.prec + other.lead_exp, other.prec + self.lead_exp)
        lo = self.lead_exp + other.lead_exp
        n = prec - lo + 1
        c = [0] * max(0, n)
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                c[i + j] += a * b
        return LaurentSeries(self.p, lo, c, prec)

    def equals_to_precision(self, other) -> bool:
        prec = min(self.prec, other.prec)
        return all(
            self.coeff(e) == other.coeff(e)
            for e in range(min(self.lead_exp, other.lead_exp), prec + 1)
        )

    def __repr__(self):
        t = " + ".join(f"{a}*u^{e}" for e, a in sorted(self.terms().items())) or "0"
        return f"LaurentSeries({t} + O(u^{self.prec + 1}))"


def laurent_embed(lam: RatFunc, prec: int) -> LaurentSeries:
    """Expand lam in u = 1/x with terms through u^prec."""
    p = lam.p
    if lam.is_zero():
        return LaurentSeries(p, prec + 1, [], prec)
    num, den = lam.num, lam.den
    lead = den.deg - num.deg
    # lam = u^lead * rev(num)(u) / rev(den)(u), rev(den)(0) = 1
    a = num.reverse().c
    b = den.reverse().c
    n = prec - lead + 1
    if n <= 0:
        return LaurentSeries(p, lead, [], prec)
    inv0 = pow(b[0], p - 2, p)
    out = [0] * n
    for k in range(n):
        s = a[k] if k < len(a) else 0
        for j in range(1, min(k, len(b) - 1) + 1):
            s -= b[j] * out[k - j]
        out[k] = s * inv0 % p
    return LaurentSeries(p, lead, out, prec)
