from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from model.bourn_recurrence import (L_diagonal_closed, L_double_sum, M_diagonal_closed, build_grid,
                                    build_L_recurrence)
from model.errors import DomainError
from model.moment_engine import first_moment
from model.verification import PRINTED_L


def test_published_matrix():
    grid = build_grid(6, 6)
    assert grid.matrix('L') == PRINTED_L
    assert grid.L[3, 5] == 125
    assert grid.L[6, 6] == 2560
    assert grid.M[2, 2] == Fraction(1, 3)


def test_smallest_grid():
    grid = build_grid(1, 1)
    assert grid.matrix('L') == [[0, 0], [0, 0]]
    assert grid.diagonal('M') == [0, 0]


def test_integer_recurrence_matches_transform():
    grid = build_grid(12, 9)
    assert build_L_recurrence(12, 9) == grid.L


@pytest.mark.parametrize("p", range(16))
def test_diagonal_three_routes(p):
    grid = build_grid(p + 1, p + 1)
    assert grid.L[p + 1, p + 1] == L_double_sum(p, p) == L_diagonal_closed(p)
    assert grid.M[p + 1, p + 1] == M_diagonal_closed(p) == first_moment(p + 1)


@given(st.integers(1, 10), st.integers(1, 10))
def test_grid_properties(p, q):
    grid = build_grid(10, 10)
    assert grid.L[p, q] == L_double_sum(p - 1, q - 1)
    assert grid.L[p, q] == grid.L[q, p]
    assert grid.M[p, q] == grid.M[q, p]
    assert grid.L[p, q] >= 0


def test_domain():
    with pytest.raises(DomainError):
        build_grid(0, 3)
    with pytest.raises(DomainError):
        L_double_sum(-1, 0)
    assert L_diagonal_closed(0) == 0
