"""Random small norm-equation instances for the solver/oracle sweep."""

from __future__ import annotations

import random
from math import ceil

from ffnorm import FieldError, FunctionField, Poly
from ffnorm.solvers import solver_bounds
from ffnorm.sunit import BudgetExceeded

BOX_LIMIT = 60000


def _rpoly(rng, q, deg, monic=False):
    top = 1 if monic else rng.randrange(1, q)
    return Poly([rng.randrange(q) for _ in range(deg)] + [top], q)


def random_field(rng, q, n):
    if n == 2:
        a1 = _rpoly(rng, q, rng.randint(0, 1)) if rng.random() < 0.5 else Poly([0], q)
        a0 = _rpoly(rng, q, rng.randint(1, 4))
        f = [a0, a1, Poly([1], q)]
    else:
        a1 = _rpoly(rng, q, rng.randint(0, 1)) if rng.random() < 0.5 else Poly([0], q)
        a0 = _rpoly(rng, q, rng.randint(1, 2))
        f = [a0, a1, Poly([0], q), Poly([1], q)]
    return FunctionField(q, f)


def box_cap(F, c):
    """Oracle degree cap: ceil(Theta) + 2 when affordable, else ceil(Theta), else None."""
    theta = ceil(solver_bounds(F, c, budget=2000).Theta)
    for B in (theta + 2, theta):
        if F.q ** (F.n * (B + 1)) <= BOX_LIMIT:
            return B
    return None


def random_instances(seed: int, count: int, max_genus: int = 3):
    """Yield (F, c, B) with q in {3,5,7}, n in {2,3}, g <= max_genus, deg c <= 2."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        q = rng.choice([3, 5, 7])
        n = rng.choice([2, 3])
        if n % q == 0:
            continue
        try:
            F = random_field(rng, q, n)
        except FieldError:
            continue
        if F.genus > max_genus:
            continue
        c = _rpoly(rng, q, rng.randint(1, 2), monic=True)
        try:
            B = box_cap(F, c)
        except BudgetExceeded:
            continue
        if B is None:
            continue
        made += 1
        yield F, c, B
