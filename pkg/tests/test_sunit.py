import pytest

from ffnorm import Poly
from ffnorm.divisors import Divisor, is_principal
from ffnorm.ideals import factor_in_OF
from ffnorm.lattice import solve_integer_system
from ffnorm.solvers import sc_matrix, unit_matrix
from ffnorm.sunit import class_group_small, degree_zero_basis, regulator, sval_mat


def as_divisor(F, places, row):
    D = Divisor.zero(F)
    for P, a in zip(places, row):
        if a:
            D = D + Divisor.place(F, P, a)
    return D


def test_rank_zero(E1):
    M = sval_mat(E1, E1.infinite_places)
    assert M.rows == [] and M.regulator == 1
    assert regulator(E1) == 1


@pytest.mark.parametrize("name,reg", [("G0split", 1), ("R7", 7)])
def test_small_unit_lattices(name, reg, request):
    F = request.getfixturevalue(name)
    M = sval_mat(F, F.infinite_places)
    assert M.rank == 1 and M.regulator == reg
    assert sorted(map(abs, M.rows[0])) == [reg, reg]
    for row in M.rows:
        assert is_principal(as_divisor(F, M.places, row)) is not None


def test_regulator_bounded_by_class_number(R7):
    # the unit lattice has index at most h in the degree-zero lattice
    assert regulator(R7) <= class_group_small(R7).order


def test_sc_matrix_e1(E1):
    c = Poly([0, 1], 3)
    M = sc_matrix(E1, c)
    primes = [P for P, _ in factor_in_OF(E1, c)]
    assert M.places == primes + list(E1.infinite_places)
    assert M.rank == len(M.places) - 1
    for row in M.rows:
        assert sum(a * P.degree for a, P in zip(row, M.places)) == 0
        assert is_principal(as_divisor(E1, M.places, row)) is not None
    # every row lattice element has trivial class; the quotient is a subgroup of Cl0
    basis = degree_zero_basis(M.places)
    assert len(basis) == len(M.places) - 1


@pytest.mark.slow
def test_sc_matrix_e2(E2):
    M = sc_matrix(E2, Poly([4, 1], 5))
    assert (len(M.rows), len(M.places)) == (3, 4)
    for row in M.rows:
        assert sum(a * P.degree for a, P in zip(row, M.places)) == 0
    U = unit_matrix(E2).rows
    assert U[0] in ([-694, 347], [694, -347])


def test_quotient_injectivity(R7):
    # a degree-zero vector is in the S-unit lattice iff its class is trivial
    c = Poly([1, 1], 3)
    M = sc_matrix(R7, c)
    G = class_group_small(R7)
    rows = M.rows
    for b in degree_zero_basis(M.places):
        for k in range(1, 4):
            v = [k * a for a in b]
            trivial = G.is_trivial_class(as_divisor(R7, M.places, v))
            in_lattice = _in_row_lattice(rows, v)
            assert trivial == in_lattice


def _in_row_lattice(rows, v):
    # v = sum x_i rows_i for some integer x
    A = [list(col) for col in zip(*rows)]
    return solve_integer_system(A, list(v)) is not None


def test_hasse_weil_bound(E1, G2, R7):
    for F in (E1, G2, R7):
        h = class_group_small(F).order
        assert h <= (F.q ** 0.5 + 1) ** (2 * F.genus)
