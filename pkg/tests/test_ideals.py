import random

import pytest

from ffnorm import Poly, RatFunc
from ffnorm.arith import monic_irreducibles
from ffnorm.divisors import divisor_of_ideal
from ffnorm.ideals import (factor_ideal, factor_in_OF, ideal_contains, ideal_from_factors,
                           ideal_inverse, ideal_mul, ideal_norm, ideal_pow, ideal_val,
                           principal_ideal, unit_ideal)

from test_field import rand_elt


def monic_norm(N):
    return RatFunc(N.num.monic(), N.den)


def test_e2_factor_x_plus_4(E2):
    fs = factor_in_OF(E2, Poly([4, 1], 5))
    assert len(fs) == 2 and [k for _, k in fs] == [1, 1]
    # norms multiply back to c^(f_1 + f_2) / ... : here sum e f = n
    assert sum(P.e * P.f_res for P, _ in fs) == 3
    I = ideal_from_factors(E2, fs)
    assert I == principal_ideal(E2.base(RatFunc(Poly([4, 1], 5))))


def test_e1_ramified_and_split(E1):
    # x^3 + x + 1 = (x + 2)(x^2 + x + 2) over F_3; both factors ramify
    fs = factor_in_OF(E1, Poly([1, 1, 0, 1], 3))
    assert [(P.p.deg, P.e, k) for P, k in fs] == [(1, 2, 2), (2, 2, 2)]
    y = E1.theta()
    assert ideal_from_factors(E1, [(P, 1) for P, _ in fs]) == principal_ideal(y)
    fs = factor_in_OF(E1, Poly([0, 1], 3))
    assert [(P.degree, k) for P, k in fs] == [(1, 1), (1, 1)]


@pytest.mark.parametrize("name", ["E1", "E2", "G2", "R7"])
def test_sum_ef_equals_n(name, request):
    F = request.getfixturevalue(name)
    for d in (1, 2):
        for pp in monic_irreducibles(F.p, d):
            primes = F.O.primes_above(pp)
            assert sum(P.e * P.f_res for P in primes) == F.n
            for P in primes:
                assert monic_norm(ideal_norm(F.O.prime_ideal(P))) == RatFunc(pp ** P.f_res)


def test_identities(E2):
    O1 = unit_ideal(E2)
    P = factor_in_OF(E2, Poly([4, 1], 5))[0][0]
    I = E2.O.prime_ideal(P)
    assert ideal_mul(I, O1) == I
    assert ideal_pow(I, 0) == O1
    assert ideal_mul(I, ideal_inverse(I)) == O1
    assert ideal_val(I, P) == 1
    assert divisor_of_ideal(O1).degree == 0 and not divisor_of_ideal(O1).fin
    assert ideal_norm(O1) == RatFunc(Poly.one(5))


@pytest.mark.parametrize("name", ["E1", "E2", "G2"])
def test_norm_multiplicative_and_principal(name, request):
    F = request.getfixturevalue(name)
    rng = random.Random(9)
    for _ in range(8):
        a, b = rand_elt(F, rng, 2), rand_elt(F, rng, 2)
        I, J = principal_ideal(a), principal_ideal(b)
        assert monic_norm(ideal_norm(I)) == monic_norm(a.norm())
        assert monic_norm(ideal_norm(ideal_mul(I, J))) == monic_norm(ideal_norm(I) * ideal_norm(J))
        assert ideal_mul(I, J) == principal_ideal(a * b)
        assert ideal_contains(I, a * b) and ideal_contains(I, a)
        # factorisation rebuilds the ideal
        assert ideal_from_factors(F, factor_ideal(I)) == I


def test_norm_of_base_ideal(E2):
    c = Poly([1, 2, 1], 5)
    I = principal_ideal(E2.base(RatFunc(c)))
    assert monic_norm(ideal_norm(I)) == RatFunc(c ** 3)


def test_height_of_div_c(E1, E2):
    rng = random.Random(4)
    for F in (E1, E2):
        for _ in range(6):
            c = Poly([rng.randrange(F.p) for _ in range(rng.randint(1, 3))] + [1], F.p)
            D = divisor_of_ideal(principal_ideal(F.base(RatFunc(c))))
            assert D.height <= 2 * F.n * c.deg


def test_hnf_canonical(E1):
    y = E1.theta()
    a = y + E1.one()
    assert principal_ideal(a) == principal_ideal(a * 2)
    assert hash(principal_ideal(a)) == hash(principal_ideal(a * 2))
