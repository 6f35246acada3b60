"""Divisor class groups at desk scale and S-unit value matrices.

Classes are compared through canonical reduced divisors, so a subgroup
generated by a few classes can be enumerated element by element. The
relations found along the way give the kernel of the map Z^S -> Cl(F).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .divisors import ClassArithmetic, Divisor
from .lattice import kernel_int, lll_int, smith_invariants


class BudgetExceeded(RuntimeError):
    """A search ran past its configured size limit."""


def relation_lattice(ca: ClassArithmetic, gens, budget: int = 50000):
    """Relations among reduced classes ``gens``.

    Returns (relations, table) where relations is a triangular Z-basis of
    {a : sum a_i gens_i = 0} and table maps class keys of the generated
    subgroup to exponent vectors.
    """
    k = len(gens)
    zero = ca.zero
    table = {zero.key: (zero, (0,) * k)}
    relations = []
    for i, g in enumerate(gens):
        multiples = [zero, g]
        cur = g
        while cur.key not in table:
            cur = ca.add(cur, g)
            multiples.append(cur)
            if len(multiples) > budget:
                raise BudgetExceeded(f"class of generator {i} has order above {budget}")
        m = len(multiples) - 1
        vec = table[cur.key][1]
        rel = [-a for a in vec]
        rel[i] += m
        relations.append(rel)
        if m > 1:
            if len(table) * m > budget:
                raise BudgetExceeded(f"subgroup larger than {budget} classes")
            old = list(table.values())
            for j in range(1, m):
                jg = multiples[j]
                for rep, v in old:
                    new = ca.add(rep, jg) if rep.m else jg
                    nv = list(v)
                    nv[i] += j
                    table[new.key] = (new, tuple(nv))
    return relations, table


@dataclass
class ClassGroupData:
    order: int
    invariants: list
    generators: list          # divisors of degree 0
    relations: list
    table: dict = field(repr=False, default_factory=dict)
    arithmetic: object = field(repr=False, default=None)

    def dlog(self, D: Divisor):
        """Exponent vector of the class of the degree-0 divisor D."""
        if D.degree != 0:
            raise ValueError("dlog needs a degree-0 divisor")
        rep = self.arithmetic.from_divisor(D)
        hit = self.table.get(rep.key)
        if hit is None:
            raise KeyError("class not in the enumerated group")
        return list(hit[1])

    def is_trivial_class(self, D: Divisor) -> bool:
        return self.arithmetic.is_zero(self.arithmetic.from_divisor(D))


def class_group_small(F, budget: int = 50000) -> ClassGroupData:
    """Cl^0(F) generated by the classes P - deg(P) P0 with deg P <= g."""
    ca = ClassArithmetic(F)
    P0 = ca.P0
    g = F.genus
    places = []
    for d in range(1, g + 1):
        places.extend(F.places_of_degree(d))
        places.extend(P for P in F.infinite_places if P.degree == d)
    gens = []
    divs = []
    for P in places:
        if P is P0:
            continue
        D = Divisor.place(F, P) - Divisor.place(F, P0, P.degree)
        divs.append(D)
        gens.append(ca.from_divisor(D))
    relations, table = relation_lattice(ca, gens, budget)
    inv = smith_invariants(relations) if relations else []
    return ClassGroupData(len(table), inv, divs, relations, table, ca)


@dataclass
class SUnitValMatrix:
    places: list
    rows: list
    regulator: int

    @property
    def rank(self) -> int:
        return len(self.rows)


def degree_zero_basis(S) -> list:
    """LLL-reduced Z-basis of {a in Z^S : sum a_i deg P_i = 0}."""
    if len(S) <= 1:
        return []
    return kernel_int([[P.degree] for P in S])


def sval_mat(F, S, budget: int = 50000) -> SUnitValMatrix:
    """Valuation vectors of a basis of the S-units modulo constants (LLL-reduced).

    A row a means there is an S-unit e with v_{P_i}(e) = a_i; sign conventions
    do not matter since the lattice is symmetric.
    """
    S = list(S)
    if any(P not in S for P in F.infinite_places):
        raise ValueError("S must contain every infinite place")
    basis = degree_zero_basis(S)
    if not basis:
        return SUnitValMatrix(S, [], 1)
    ca = ClassArithmetic(F)
    gens = []
    for b in basis:
        D = Divisor.zero(F)
        for P, a in zip(S, b):
            if a:
                D = D + Divisor.place(F, P, a)
        gens.append(ca.from_divisor(D))
    relations, table = relation_lattice(ca, gens, budget)
    rows = [[sum(r[j] * basis[j][i] for j in range(len(basis))) for i in range(len(S))]
            for r in relations]
    rows = lll_int(rows)
    return SUnitValMatrix(S, rows, len(table))


def regulator(F, budget: int = 50000) -> int:
    return sval_mat(F, F.infinite_places, budget).regulator
