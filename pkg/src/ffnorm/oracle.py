"""Brute-force reference answers for tests.

Nothing here goes through reduced lattices, minima or unit lattices. Norms
come from a Sylvester resultant in the power basis, associates are compared
by the HNF of the principal ideal, and Riemann-Roch spaces are cut out of a
box of elements by valuation conditions place by place.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import ceil

from .arith import Poly, RatFunc, poly_lcm
from .ideals import element_support, ideal_from_factors, principal_ideal
from .linalg import poly_mat_det, rref_mod
from .sunit import BudgetExceeded


def resultant_norm(a) -> RatFunc:
    """N(a) = Res_t(f, b) / d^n where a = b(theta)/d in the power basis."""
    F = a.F
    p, n = F.p, F.n
    coords = a.power_coords()
    den = Poly.one(p)
    for c in coords:
        den = poly_lcm(den, c.den)
    b = [c.num * (den // c.den) for c in coords]
    while len(b) > 1 and not b[-1].c:
        b.pop()
    m = len(b) - 1
    if not b[-1].c:
        return RatFunc.from_int(0, p)
    if m == 0:
        return RatFunc(b[0] ** n, den ** n)
    z = Poly.zero(p)
    f = F.f
    size = n + m
    rows = []
    for i in range(m):
        row = [z] * size
        for j in range(n + 1):
            row[i + j] = f[n - j]
        rows.append(row)
    for i in range(n):
        row = [z] * size
        for j in range(m + 1):
            row[i + j] = b[m - j]
        rows.append(row)
    return RatFunc(poly_mat_det(rows, p), den ** n)


def _box(F, B, budget):
    p, n = F.p, F.n
    total = p ** (n * (B + 1))
    if total > budget:
        raise BudgetExceeded(f"brute-force box of size {total} exceeds budget {budget}")
    polys = list(itertools.product(range(p), repeat=B + 1))
    return polys


def default_degree_cap(F, c) -> int:
    from .solvers import solver_bounds

    return ceil(solver_bounds(F, c).Theta) + 2


def brute_solve(F, c, B: int | None = None, budget: int = 2 * 10 ** 6) -> list:
    """All alpha = sum lambda_i omega_i, deg lambda_i <= B, with N(alpha) in c*k^*, up to associates."""
    p = F.p
    if isinstance(c, int):
        c = Poly.const(c, p)
    if not c.c:
        raise ValueError("c must be nonzero")
    if B is None:
        B = default_degree_cap(F, c)
    polys = _box(F, B, budget)
    want = c.monic()
    out = []
    seen = set()
    for combo in itertools.product(polys, repeat=F.n):
        first = next((a for co in combo for a in co if a), 0)
        if first != 1:
            continue
        alpha = F.element([Poly(list(co), p) for co in combo])
        N = resultant_norm(alpha)
        if N.num.deg != want.deg or N.num.monic() != want:
            continue
        key = principal_ideal(alpha).key
        if key not in seen:
            seen.add(key)
            out.append(alpha)
    return out


# -- Riemann-Roch by valuation filtering -----------------------------------------


def _vec(a, B, d):
    """Coordinates of a in the box basis x^j omega_i / d (flattened)."""
    p = a.F.p
    scale = d // a.d
    out = []
    for c in a.v:
        c = c * scale
        cs = list(c.c) + [0] * (B + 1)
        out.extend(cs[: B + 1])
    return [x % p for x in out]


def _combine(elems, coeffs):
    acc = None
    for e, k in zip(elems, coeffs):
        if k:
            acc = e * k if acc is None else acc + e * k
    return acc


def _filter_place(F, basis, P, m):
    """Subspace of span(basis) where v_P >= m (basis: list of nonzero elements)."""
    p = F.p
    d = P.degree
    basis = list(basis)
    while True:
        vals = [F.valuation(b, P) for b in basis]
        groups = {}
        for i, v in enumerate(vals):
            if v < m:
                groups.setdefault(v, []).append(i)
        changed = False
        for v in sorted(groups):
            idx = groups[v][: d + 1]
            for coeffs in itertools.product(range(p), repeat=len(idx)):
                k0 = next((j for j, k in enumerate(coeffs) if k), None)
                if k0 is None or coeffs[k0] != 1:
                    continue
                comb = _combine([basis[i] for i in idx], coeffs)
                if comb is None or comb.is_zero() or F.valuation(comb, P) > v:
                    basis[idx[k0]] = comb
                    changed = True
                    break
            if changed:
                break
        basis = [b for b in basis if b is not None and not b.is_zero()]
        if not changed:
            return [b for b, v in zip(basis, [F.valuation(b, P) for b in basis]) if v >= m]


def brute_rr(D, B: int, budget: int = 64) -> list:
    """k-basis of {alpha in box(B) : div(alpha) >= -D}.

    The box is x^j omega_i / d for j <= B, with d the denominator of the
    ideal prod P^(-D_P); every element of L(D) with small enough coordinates
    lies in it.
    """
    F = D.F
    p, n = F.p, F.n
    if n * (B + 1) > budget:
        raise BudgetExceeded(f"box dimension {n * (B + 1)} exceeds budget {budget}")
    J = ideal_from_factors(F, [(P, -k) for P, k in D.fin.items()])
    d = J.den
    basis = []
    for i in range(n):
        for j in range(B + 1):
            v = [Poly.zero(p)] * n
            v[i] = Poly.monomial(j, p)
            basis.append(F.element(v, d))
    places = {}
    for P, _ in D.items():
        places[P.key] = P
    if d.deg > 0:
        for P in element_support(F.element(F.O.one(), d)):
            places[P.key] = P
    for P in F.infinite_places:
        places[P.key] = P
    for key in sorted(places, key=str):
        P = places[key]
        basis = _filter_place(F, basis, P, -D[P])
        if not basis:
            return []
    rows, _ = rref_mod([_vec(b, B, d) for b in basis], p)
    out = []
    for r in rows:
        v = []
        for i in range(n):
            v.append(Poly(r[i * (B + 1):(i + 1) * (B + 1)], p))
        out.append(F.element(v, d))
    return out


def brute_principal(D, B: int, budget: int = 64):
    """An alpha with div(alpha) = D found inside the box, or None."""
    if D.degree != 0:
        return None
    found = brute_rr(-D, B, budget)
    if not found:
        return None
    from .divisors import divisor_of_element

    a = found[0]
    return a if divisor_of_element(a) == D else None


def rr_box_cap(D) -> int:
    """A box cap B large enough for brute_rr(D, B) to see all of L(D).

    An element a of L(D) has d*a integral with max norm at most
    deg d + max(D_P / e_P) at infinity, and the reduced basis makes the
    coordinate degrees bounded by that.
    """
    F = D.F
    J, _ = D.ideal_form()
    pole = max((Fraction(k, P.e) for P, k in zip(F.infinite_places, D.inf)), default=0)
    return max(0, J.den.deg + ceil(max(pole, 0)))
