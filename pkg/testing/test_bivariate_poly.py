from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from model.bivariate_poly import ONE, S, T, ZERO, BivarPoly, apply_I, apply_I_oracle, poly_eval
from model.errors import RegionError

coefficients = st.fractions(min_value=-10, max_value=10, max_denominator=12)
polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coefficients, max_size=4).map(BivarPoly)
points = st.tuples(st.fractions(min_value=0, max_value=3, max_denominator=8),
                   st.fractions(min_value=0, max_value=1, max_denominator=8)).map(lambda st_: (st_[0], st_[0] * st_[1]))


def test_zero_coefficients_are_dropped():
    p = BivarPoly({(1, 0): 0, (0, 1): Fraction(1, 2)})
    assert p.terms == {(0, 1): Fraction(1, 2)}
    assert (S - S) == ZERO
    assert not ZERO
    assert ZERO.total_degree() == -1


def test_arithmetic():
    p = (S + T) * (S - T)
    assert p == S * S - T * T
    assert p.coefficient(2, 0) == 1
    assert p.coefficient(1, 1) == 0
    assert 1 - S == -(S - ONE)
    assert (2 * S).scale(Fraction(1, 2)) == S
    assert (S * T).total_degree() == 2


def test_str_descending_s():
    f2 = BivarPoly({(2, 1): Fraction(1, 2), (1, 2): Fraction(-1, 2), (0, 3): Fraction(1, 3)})
    assert str(f2) == "1/2*t*s^2 - 1/2*t^2*s + 1/3*t^3"
    assert str(ZERO) == "0"
    assert str(-S + 3) == "-s + 3"


@given(polys, polys, coefficients)
def test_operator_is_linear(f, g, c):
    assert apply_I(f + g) == apply_I(f) + apply_I(g)
    assert apply_I(f.scale(c)) == apply_I(f).scale(c)


@given(polys)
def test_operator_raises_degree_by_two(f):
    if f:
        assert apply_I(f).total_degree() == f.total_degree() + 2
    else:
        assert apply_I(f) == ZERO


@settings(max_examples=15)
@given(polys, points)
def test_operator_matches_double_integral(f, point):
    s, t = point
    assert poly_eval(apply_I(f), s, t) == apply_I_oracle(f, s, t)


def test_operator_on_monomials():
    assert apply_I(ONE) == S * T
    # I(x - y) = F_2
    assert apply_I(S - T) == BivarPoly({(2, 1): Fraction(1, 2), (1, 2): Fraction(-1, 2), (0, 3): Fraction(1, 3)})


def test_oracle_region():
    with pytest.raises(RegionError):
        apply_I_oracle(ONE, 1, 2)
    with pytest.raises(RegionError):
        apply_I_oracle(ONE, 1, -1)
