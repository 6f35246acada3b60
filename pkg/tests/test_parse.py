import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly as SPoly, symbols

from ffnorm.arith import Poly, poly_str
from ffnorm.parse import PolySyntaxError, bivariate_to_coeffs, parse_bivariate, parse_poly

x = symbols("x")


def test_univariate_forms():
    assert parse_poly("x^2 + 2", 3) == Poly([2, 0, 1], 3)
    assert parse_poly("3x + 4", 5) == Poly([4, 3], 5)
    assert parse_poly("(x+1)(x+2)", 3) == Poly([2, 0, 1], 3)
    assert parse_poly("x**3 - x", 5) == Poly([0, 4, 0, 1], 5)
    assert parse_poly("-1", 7) == Poly([6], 7)
    assert parse_poly("10*x", 5).is_zero()


def test_bivariate_e2():
    text = "t^3 + (4x^3 + 3x^2 + 1)*t^2 + (3x^3 + 4x^2 + 4x + 2)*t + 2x^3 + x"
    coeffs = bivariate_to_coeffs(parse_bivariate(text, 5), 5)
    assert coeffs == [Poly([0, 1, 0, 2], 5), Poly([2, 4, 4, 3], 5), Poly([1, 0, 3, 4], 5), Poly([1], 5)]


@pytest.mark.parametrize("text,col", [("x + ", 5), ("x + y", 5), ("(x + 1", 7), ("x^a", 3), ("", 1), ("x $ 1", 3)])
def test_errors_carry_column(text, col):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text, 3)
    assert info.value.column == col


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 50), max_size=7))
def test_round_trip_against_sympy(p, coeffs):
    f = Poly(coeffs, p)
    text = poly_str(f)
    assert parse_poly(text, p) == f
    ref = SPoly(sum(c * x ** i for i, c in enumerate(coeffs)), x, modulus=p)
    assert [int(a) % p for a in reversed(ref.all_coeffs())] == list(f.c) or (f.is_zero() and ref.is_zero)
