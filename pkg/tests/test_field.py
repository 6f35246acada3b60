import random
from fractions import Fraction
from math import ceil

import pytest

from ffnorm import FieldError, FunctionField, Poly, RatFunc
from ffnorm.divisors import divisor_of_element
from ffnorm.oracle import resultant_norm

from conftest import hyperelliptic


def rand_poly(rng, p, d):
    return Poly([rng.randrange(p) for _ in range(d + 1)], p)


def rand_elt(F, rng, d=3):
    while True:
        a = F.element([rand_poly(rng, F.p, rng.randint(0, d)) for _ in range(F.n)])
        if not a.is_zero():
            return a


def test_e1_basics(E1):
    assert (E1.n, E1.C_f, E1.genus) == (2, 2, 1)
    assert [(P.e, P.degree) for P in E1.infinite_places] == [(2, 1)]
    assert E1.inf_norms == [0, Fraction(3, 2)]
    y = E1.theta()
    assert E1.val_inf(y) == (-3,)
    assert E1.max_norm(y) == Fraction(3, 2)
    assert y.norm() == RatFunc(Poly([2, 2, 0, 2], 3))


def test_e1_basis_is_power_basis(E1):
    # disc = 4(x^3+x+1) is squarefree, so {1, y} already spans O_F
    y = E1.theta()
    assert all(c.deg <= 0 for c in E1.one().v)
    assert E1.element([Poly([0], 3), Poly([1], 3)]) in (y, y * 2) or E1.max_norm(E1.basis[1]) == Fraction(3, 2)
    assert y.is_integral()
    assert (y * y).is_integral()


def test_e2_basics(E2):
    assert (E2.n, E2.C_f, E2.genus) == (3, 3, 4)
    assert [(P.e, P.degree) for P in E2.infinite_places] == [(1, 1), (1, 2)]
    assert E2.inf_norms == [0, 3, 3]
    assert sum(P.e * P.degree for P in E2.infinite_places) == E2.n


def test_constructor_rejections():
    with pytest.raises(FieldError, match="wild"):
        FunctionField(3, [Poly([0, 1], 3), Poly([1], 3), Poly([0], 3), Poly([1], 3)])
    with pytest.raises(FieldError, match="not prime"):
        FunctionField(4, [Poly([1], 2), Poly([0], 2), Poly([1], 2)])
    with pytest.raises(FieldError, match="monic"):
        FunctionField(5, [Poly([1, 1], 5), Poly([0], 5), Poly([2], 5)])
    with pytest.raises(FieldError):
        # t^2 - x^2 = (t - x)(t + x)
        FunctionField(3, [Poly([0, 0, 2], 3), Poly([0], 3), Poly([1], 3)])


def test_genus_zero():
    F = hyperelliptic(3, [1, 0, 1])
    assert F.genus == 0
    assert F.max_norm(F.theta()) == 1
    F = hyperelliptic(3, [1, 1])
    assert F.genus == 0


@pytest.mark.parametrize("name", ["E1", "E2", "G2", "G0split", "R7"])
def test_basis_closed_under_multiplication(name, request):
    F = request.getfixturevalue(name)
    for a in F.basis():
        for b in F.basis():
            assert (a * b).d.is_one()


@pytest.mark.parametrize("name", ["E1", "E2", "G2", "G0split", "R7"])
def test_last_norm_bound(name, request):
    F = request.getfixturevalue(name)
    norms = F.inf_norms
    assert list(norms) == sorted(norms)
    assert norms[-1] <= ceil(Fraction(2 * F.genus - 1, F.n)) + 1
    assert sum(P.e * P.degree for P in F.infinite_places) == F.n
    assert all(P.e % F.q for P in F.infinite_places)


def test_max_norm_additive_on_reduced_basis(E2):
    rng = random.Random(3)
    for _ in range(100):
        lam = [rand_poly(rng, 5, rng.randint(0, 4)) for _ in range(3)]
        if all(l.is_zero() for l in lam):
            continue
        a = E2.element(lam)
        want = max(l.deg + s for l, s in zip(lam, E2.inf_norms) if not l.is_zero())
        assert E2.max_norm(a) == want


def test_max_norm_of_x(E1, E2, G2):
    for F in (E1, E2, G2):
        x = F.x()
        assert F.val_inf(x) == tuple(-P.e for P in F.infinite_places)
        assert F.max_norm(x) == 1


@pytest.mark.parametrize("name", ["E1", "E2", "G2"])
def test_norm_multiplicative_and_resultant(name, request):
    F = request.getfixturevalue(name)
    rng = random.Random(11)
    for _ in range(15):
        a, b = rand_elt(F, rng), rand_elt(F, rng)
        assert (a * b).norm() == a.norm() * b.norm()
        assert a.norm() == resultant_norm(a)


def test_norm_of_base_element(E2):
    lam = RatFunc(Poly([1, 2, 1], 5), Poly([3, 1], 5))
    assert E2.base(lam).norm() == lam * lam * lam


def test_inverse_and_division(E2):
    rng = random.Random(5)
    for _ in range(10):
        a, b = rand_elt(E2, rng), rand_elt(E2, rng)
        assert a * a.inverse() == E2.one()
        assert (a * b) / b == a


@pytest.mark.parametrize("name", ["E1", "G2", "R7"])
def test_principal_divisors_have_degree_zero(name, request):
    F = request.getfixturevalue(name)
    rng = random.Random(2)
    for _ in range(15):
        a = rand_elt(F, rng, 2) / rand_elt(F, rng, 2)
        assert divisor_of_element(a).degree == 0
