"""Norm equations N(alpha) = c (up to k^*) for integral alpha.

Three solvers share the same bounds: a Gaal-Pohst style enumeration of
coefficient vectors, an exhaustive search over ideal/value tuples built
with compact representations, and an index-calculus variant that solves
for the generator's infinite values directly.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, prod

from .arith import Poly, poly_factor
from .comprep import (CompactRep, NotPrincipalError, PowerProduct, comp_rep, cr_is_integral,
                       cr_norm_factored, cr_value, support)
from .field import FieldElement
from .ideals import factor_in_OF, ideal_from_factors
from .lattice import cvp_babai, solve_integer_system
from .linalg import poly_mat_det
from .sunit import BudgetExceeded, sval_mat


class PreconditionError(ValueError):
    """The instance is outside what the solver handles."""


def check_c(F, c) -> Poly:
    if isinstance(c, int):
        c = Poly.const(c, F.p)
    if not c.c:
        raise PreconditionError("constant c unsupported (c = 0)")
    if c.deg == 0:
        raise PreconditionError("constant c unsupported")
    return c


def _need_anchor(F):
    if F.anchor is None:
        raise PreconditionError("no infinite place of degree 1")


# -- bounds -------------------------------------------------------------------


def unit_matrix(F, budget: int = 50000):
    """Cached value matrix of a unit basis (S = infinite places)."""
    hit = F.cache.get("units")
    if hit is None:
        hit = F.cache["units"] = sval_mat(F, F.infinite_places, budget)
    return hit


@dataclass
class SolverBounds:
    theta: list            # per infinite place, Fraction
    Theta: Fraction
    deg_bounds: list       # per reduced basis element


def solver_bounds(F, c: Poly, budget: int = 50000) -> SolverBounds:
    c = check_c(F, c)
    M = unit_matrix(F, budget)
    places = F.infinite_places
    theta = [Fraction(sum(abs(row[j]) for row in M.rows), 2) for j in range(len(places))]
    Theta = max(t / P.e for t, P in zip(theta, places)) + Fraction(c.deg, F.n)
    bounds = [floor(Theta - s) for s in F.inf_norms]
    return SolverBounds(theta, Theta, bounds)


@dataclass
class SearchStats:
    gp_count: int
    tuple_bound: int
    ideal_count: int
    gp_exponent: int       # gp_count = q ** gp_exponent


def search_stats(F, c, budget: int = 50000) -> SearchStats:
    c = check_c(F, c)
    b = solver_bounds(F, c, budget)
    exp = sum(max(d + 1, 0) for d in b.deg_bounds)
    ideal_count = prod(k + 1 for _, k in factor_in_OF(F, c))
    r = F.unit_rank
    tuple_bound = ideal_count * prod(int(2 * t + 1) for t in b.theta[:r])
    return SearchStats(F.q ** exp, tuple_bound, ideal_count, exp)


# -- solution sets --------------------------------------------------------------


def associate_key(a) -> tuple:
    """Finite part of the divisor; equal keys <=> associate (for nonzero elements)."""
    if isinstance(a, FieldElement):
        from .ideals import element_support

        vals = ((P.key, a.F.valuation(a, P)) for P in element_support(a))
    else:
        vals = ((P.key, cr_value(a, P)) for P in support(a))
    return tuple((k, v) for k, v in vals if v)


def dedup_associates(items) -> list:
    seen = set()
    out = []
    for a in items:
        k = associate_key(a)
        if k not in seen:
            seen.add(k)
            out.append(a)
    return out


@dataclass
class SolutionSet:
    solutions: list
    c: Poly
    stats: dict = field(default_factory=dict)

    def keys(self) -> set:
        return {associate_key(a) for a in self.solutions}

    def __len__(self):
        return len(self.solutions)


def norm_matches(F, const_exps, c: Poly) -> bool:
    """Whether a factored norm (const, {irreducible: exp}) lies in c*k^*."""
    _, exps = const_exps
    want = {f.c: m for f, m in poly_factor(c)[1]}
    return exps == want


def _elt_norm_matches(a, c: Poly) -> bool:
    det = poly_mat_det(a.mult_matrix(), a.F.p)
    if det.deg != c.deg or not det.c:
        return False
    return det.monic() == c.monic()


# -- Gaal-Pohst --------------------------------------------------------------


def _poly_range(p, d):
    """All polynomials of degree <= d (as coefficient tuples, constant first)."""
    if d < 0:
        return [()]
    return list(itertools.product(range(p), repeat=d + 1))


def solve_gaal_pohst(F, c, budget: int = 10 ** 6, deadline=None) -> SolutionSet:
    """Enumerate alpha = sum lambda_i omega_i with deg lambda_i <= bound_i."""
    c = check_c(F, c)
    t0 = time.perf_counter()
    b = solver_bounds(F, c)
    count = F.q ** sum(max(d + 1, 0) for d in b.deg_bounds)
    if count > budget:
        raise BudgetExceeded(f"Gaal-Pohst search space {count} exceeds budget {budget}")
    p = F.p
    ranges = [_poly_range(p, d) for d in b.deg_bounds]
    sols = []
    seen = set()
    checked = 0
    for combo in itertools.product(*ranges):
        # skip constant multiples: first nonzero coefficient must be 1
        first = next((a for coeffs in combo for a in coeffs if a), 0)
        if first != 1:
            continue
        checked += 1
        if deadline is not None and checked % 256 == 0 and time.perf_counter() > deadline:
            raise TimeoutError("Gaal-Pohst search ran past its deadline")
        alpha = F.element([Poly(list(coeffs), p) for coeffs in combo])
        if not _elt_norm_matches(alpha, c):
            continue
        k = associate_key(alpha)
        if k not in seen:
            seen.add(k)
            sols.append(alpha)
    stats = {"candidates": checked, "search_space": count, "seconds": time.perf_counter() - t0}
    return SolutionSet(sols, c, stats)


# -- exhaustive search with compact representations ------------------------------


def _value_ranges(F, b: SolverBounds, c: Poly):
    out = []
    for t, P in zip(b.theta, F.infinite_places):
        shift = Fraction(P.e * c.deg, F.n)
        out.append((ceil(-t - shift), floor(t - shift)))
    return out


def _ideal(F, cache, factors, tup):
    I = cache.get(tup)
    if I is None:
        I = cache[tup] = ideal_from_factors(F, [(P, v) for (P, _), v in zip(factors, tup)])
    return I


def _accept(F, t, c, seen):
    if not cr_is_integral(t):
        return False
    if not norm_matches(F, cr_norm_factored(t), c):
        return False
    k = associate_key(t)
    if k in seen:
        return False
    seen.add(k)
    return True


def _candidates(F, c, I, fin_deg, ranges, deadline):
    """Scan the infinite-value box for one finite tuple; stop at the first solution."""
    places = F.infinite_places
    last = places[-1]
    lo_last, hi_last = ranges[-1]
    built = 0
    for head in itertools.product(*[range(lo, hi + 1) for lo, hi in ranges[:-1]]):
        rest = -fin_deg - sum(v * P.degree for v, P in zip(head, places))
        if rest % last.degree:
            continue
        v_last = rest // last.degree
        if not lo_last <= v_last <= hi_last:
            continue
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("exhaustive search ran past its deadline")
        built += 1
        try:
            t = comp_rep(F, I, list(head) + [v_last], verify=True)
        except NotPrincipalError:
            continue
        if _accept(F, t, c, set()):
            return [t], built
    return [], built


def _fan_out(fn, jobs, workers):
    if workers and workers > 1 and len(jobs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda a: fn(*a), jobs))
    return [fn(*a) for a in jobs]


def solve_exhaustive_cr(F, c, budget: int = 50000, deadline=None, workers: int = 1) -> SolutionSet:
    c = check_c(F, c)
    _need_anchor(F)
    t0 = time.perf_counter()
    b = solver_bounds(F, c, budget)
    factors = factor_in_OF(F, c)
    ranges = _value_ranges(F, b, c)
    ideal_cache = {}
    jobs = []
    for tup in itertools.product(*[range(k + 1) for _, k in factors]):
        fin_deg = sum(v * P.degree for (P, _), v in zip(factors, tup))
        jobs.append((F, c, _ideal(F, ideal_cache, factors, tup), fin_deg, ranges, deadline))
    results = _fan_out(_candidates, jobs, workers)
    sols = dedup_associates([t for found, _ in results for t in found])
    stats = {"tuples": len(jobs), "compact_reps": sum(k for _, k in results),
             "seconds": time.perf_counter() - t0}
    return SolutionSet(sols, c, stats)


# -- index calculus ------------------------------------------------------------------


def sc_matrix(F, c, budget: int = 50000):
    """S_c-unit value matrix for S_c = primes over c plus the infinite places (cached)."""
    c = check_c(F, c)
    key = ("sc", c.monic().c)
    hit = F.cache.get(key)
    if hit is None:
        primes = [P for P, _ in factor_in_OF(F, c)]
        hit = F.cache[key] = sval_mat(F, primes + list(F.infinite_places), budget)
    return hit


def _ic_candidate(F, c, factors, tup, A, M, units, deadline):
    if deadline is not None and time.perf_counter() > deadline:
        raise TimeoutError("index calculus ran past its deadline")
    sol = solve_integer_system(A, list(tup))
    if sol is None:
        return None
    nf = len(factors)
    X = sol[0]
    v_inf = [sum(x * row[nf + j] for x, row in zip(X, M.rows)) for j in range(len(F.infinite_places))]
    near = cvp_babai(units, v_inf)
    v = [a - b for a, b in zip(v_inf, near)]
    I = ideal_from_factors(F, [(P, k) for (P, _), k in zip(factors, tup)])
    t = comp_rep(F, I, v)
    return t if _accept(F, t, c, set()) else None


def solve_index_calculus(F, c, budget: int = 50000, deadline=None, workers: int = 1) -> SolutionSet:
    c = check_c(F, c)
    _need_anchor(F)
    t0 = time.perf_counter()
    factors = factor_in_OF(F, c)
    M = sc_matrix(F, c, budget)
    units = unit_matrix(F, budget).rows
    A = [[row[i] for row in M.rows] for i in range(len(factors))]
    t1 = time.perf_counter()
    want = {f.c: m for f, m in poly_factor(c)[1]}
    jobs = []
    ideals = 0
    for tup in itertools.product(*[range(k + 1) for _, k in factors]):
        ideals += 1
        # Norm(I) = prod p^(f_P v_P)
        exps = {}
        for (P, _), v in zip(factors, tup):
            if v:
                exps[P.p.c] = exps.get(P.p.c, 0) + P.f_res * v
        if exps == want:
            jobs.append((F, c, factors, tup, A, M, units, deadline))
    results = _fan_out(_ic_candidate, jobs, workers)
    found = [t for t in results if t is not None]
    stats = {"ideals": ideals, "norm_matching": len(jobs), "principal": len(found),
             "precompute_seconds": round(t1 - t0, 4), "seconds": time.perf_counter() - t0}
    return SolutionSet(dedup_associates(found), c, stats)


ALGORITHMS = {
    "gp": solve_gaal_pohst,
    "exhaustive-cr": solve_exhaustive_cr,
    "index-calculus": solve_index_calculus,
}


def as_compact(a) -> CompactRep:
    """Wrap a standard-representation element as a CR with l = 0."""
    if isinstance(a, (CompactRep, PowerProduct)):
        return a
    return CompactRep(a.F, a, [])


__all__ = [
    "PreconditionError", "SolverBounds", "SearchStats", "SolutionSet", "solver_bounds",
    "search_stats", "solve_gaal_pohst", "solve_exhaustive_cr", "solve_index_calculus",
    "dedup_associates", "associate_key", "ALGORITHMS", "unit_matrix", "sc_matrix",
]
