import json
import random

import pytest

from ffnorm import Poly, RatFunc
from ffnorm.comprep import (CompactRep, ExpansionCapError, NotPrincipalError, chain_length,
                            comp_rep, cr_associate, cr_expand, cr_is_integral, cr_mul, cr_norm,
                            cr_pow, cr_val_inf, cr_value, support)
from ffnorm.ideals import factor_in_OF, principal_ideal, unit_ideal
from ffnorm.solvers import as_compact, unit_matrix

from test_field import rand_elt


def test_chain_length():
    assert [chain_length(N) for N in (0, 1, 2, 3, 4, 7, 8, 64)] == [0, 1, 2, 2, 3, 3, 4, 7]


@pytest.mark.parametrize("name", ["E1", "G2", "G0split", "R7"])
def test_unit_ideal_gives_constant(name, request):
    F = request.getfixturevalue(name)
    t = comp_rep(F, unit_ideal(F), [0] * len(F.infinite_places))
    assert cr_expand(t).is_constant()
    assert all(cr_value(t, P) == 0 for P in F.infinite_places)


@pytest.mark.parametrize("name", ["E1", "R7"])
def test_base_element_generator(name, request):
    F = request.getfixturevalue(name)
    c = F.base(RatFunc(Poly([1, 1, 1], F.p)))
    t = comp_rep(F, principal_ideal(c), list(F.val_inf(c)))
    assert cr_associate(t, as_compact(c))
    ratio = cr_expand(t) / c
    assert ratio.is_constant()


def test_values_and_products(R7):
    rng = random.Random(21)
    u = unit_matrix(R7).rows[0]
    for _ in range(8):
        a, b = rand_elt(R7, rng, 2), rand_elt(R7, rng, 2)
        va = [x + 2 * y for x, y in zip(R7.val_inf(a), u)]
        ta = comp_rep(R7, principal_ideal(a), va, verify=True)
        tb = comp_rep(R7, principal_ideal(b), list(R7.val_inf(b)))
        assert list(cr_val_inf(ta)) == va
        prod = cr_mul(ta, tb)
        for P in support(ta) + support(tb) + list(R7.infinite_places):
            assert cr_value(prod, P) == cr_value(ta, P) + cr_value(tb, P)
        assert cr_norm(cr_pow(ta, 2)) == cr_norm(ta) * cr_norm(ta)
        assert cr_expand(cr_pow(ta, 0)).is_constant()
        assert cr_is_integral(ta) == cr_expand(ta).is_integral()
        # multiplying by a unit keeps the associate class
        unit = comp_rep(R7, unit_ideal(R7), u)
        assert cr_associate(ta, cr_mul(ta, unit))
        assert cr_associate(ta, as_compact(a))


def test_constant_norm(E2):
    zeta = E2.one() * 2
    assert cr_norm(as_compact(zeta)) == RatFunc(Poly([8], 5))


def test_not_principal_detected(E1):
    P = factor_in_OF(E1, Poly([0, 1], 3))[0][0]
    with pytest.raises(NotPrincipalError):
        comp_rep(E1, E1.O.prime_ideal(P), [-1], verify=True)


def test_expansion_cap(R7):
    u = unit_matrix(R7).rows[0]
    t = comp_rep(R7, unit_ideal(R7), [100 * a for a in u])
    with pytest.raises(ExpansionCapError):
        cr_expand(t, cap=64)
    assert t.l <= chain_length(700 + R7.genus)


def test_json_round_trip(R7):
    rng = random.Random(4)
    a = rand_elt(R7, rng, 2)
    v = [x + 3 * y for x, y in zip(R7.val_inf(a), unit_matrix(R7).rows[0])]
    t = comp_rep(R7, principal_ideal(a), v)
    data = json.loads(json.dumps(t.to_json()))
    back = CompactRep.from_json(R7, data)
    assert back.l == t.l
    assert cr_expand(back) == cr_expand(t)
    data["l"] = t.l + 1
    with pytest.raises(ValueError):
        CompactRep.from_json(R7, data)


@pytest.mark.slow
def test_e2_residual_value(E2):
    x4 = Poly([4, 1], 5)
    found = []
    for P, _ in factor_in_OF(E2, x4):
        try:
            found.append(comp_rep(E2, E2.O.prime_ideal(P), [-317, 158], verify=True))
        except NotPrincipalError:
            pass
    assert len(found) == 1
    N = cr_norm(found[0])
    assert N.den.is_one() and N.num.monic() == x4
    assert list(cr_val_inf(found[0])) == [-317, 158]
