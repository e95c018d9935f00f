from fractions import Fraction

import pytest
import sympy
from hypothesis import given
import hypothesis.strategies as st

from model.errors import DomainError
from model.exact_math import (binomial, factorial, identity_F_at_one, identity_f_induction, printed_closed_form_A3,
                              sum_A_direct, sum_A_recursive, sum_B_direct, sum_B_recursive, sum_closed_form,
                              sum_table)


def test_factorial_and_binomial():
    assert factorial(0) == 1
    assert factorial(20) == 2432902008176640000
    assert binomial(10, 3) == 120
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    with pytest.raises(DomainError):
        factorial(-1)


@given(st.integers(min_value=0, max_value=60), st.integers(min_value=0, max_value=60))
def test_binomial_matches_sympy(n, k):
    assert binomial(n, k) == sympy.binomial(n, k)


@pytest.mark.parametrize("kind, p, n, expected", [
    ('A', 0, 2, Fraction(2, 3)),
    ('A', 1, 2, Fraction(5, 6)),
    ('A', 3, 2, Fraction(11, 6)),
    ('A', 3, 4, Fraction(19, 210)),
    ('B', 0, 1, Fraction(1, 2)),
    ('B', 0, 2, Fraction(5, 24)),
    ('B', 1, 2, Fraction(1, 4)),
    ('B', 1, 3, Fraction(1, 24)),
    ('B', 2, 3, Fraction(1, 15)),
    ('B', 3, 4, Fraction(1, 72)),
])
def test_sum_values(kind, p, n, expected):
    direct = sum_A_direct if kind == 'A' else sum_B_direct
    assert direct(n, p) == expected
    assert sum_closed_form(kind, p, n) == expected


@pytest.mark.parametrize("n", range(1, 31))
def test_recursions_and_closed_forms_agree(n):
    for p in range(4):
        assert sum_A_recursive(n, p) == sum_A_direct(n, p) == sum_closed_form('A', p, n)
        assert sum_B_recursive(n, p) == sum_B_direct(n, p) == sum_closed_form('B', p, n)
    for p in range(4, 8):
        assert sum_A_recursive(n, p) == sum_A_direct(n, p)
        assert sum_B_recursive(n, p) == sum_B_direct(n, p)


def test_printed_A3_form_disagrees():
    assert printed_closed_form_A3(1) == sum_A_direct(1, 3)
    assert printed_closed_form_A3(2) == Fraction(13, 12)
    assert all(printed_closed_form_A3(n) != sum_A_direct(n, 3) for n in range(2, 10))


@pytest.mark.parametrize("n", range(2, 31))
def test_identities(n):
    lhs, rhs = identity_f_induction(n)
    assert lhs == rhs
    lhs, rhs = identity_F_at_one(n)
    assert lhs == rhs


def test_domain_errors():
    with pytest.raises(DomainError):
        sum_closed_form('A', 4, 3)
    with pytest.raises(DomainError):
        sum_A_direct(0, 1)
    with pytest.raises(DomainError):
        identity_f_induction(1)
    with pytest.raises(ValueError):
        sum_closed_form('C', 1, 3)


def test_sum_table():
    table = sum_table('B', 2, 5)
    assert list(table.values) == [1, 2, 3, 4, 5]
    assert table.values[3] == Fraction(1, 15)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)
