import pytest

from ffnorm import Poly
from ffnorm.oracle import brute_solve, default_degree_cap, resultant_norm
from ffnorm.solvers import associate_key
from ffnorm.sunit import BudgetExceeded


def test_brute_solve_examples(E1):
    y = E1.theta()
    sols = brute_solve(E1, Poly([1, 1, 0, 1], 3), B=2)
    assert associate_key(y) in {associate_key(a) for a in sols}
    assert brute_solve(E1, Poly([0, 1], 3), B=4) == []
    with pytest.raises(ValueError):
        brute_solve(E1, Poly([0], 3))


def test_budget(E2):
    with pytest.raises(BudgetExceeded):
        brute_solve(E2, Poly([4, 1], 5), B=5)


def test_default_cap(E1):
    assert default_degree_cap(E1, Poly([0, 1], 3)) >= 2


def test_resultant_of_constants(E1):
    assert resultant_norm(E1.one() * 2).num == Poly([1], 3)
    assert resultant_norm(E1.x()).num == Poly([0, 0, 1], 3)
