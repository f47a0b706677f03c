"""GF(2) linear solver."""

import itertools
import random

import pytest

from nfsquares import F2Matrix, solve_f2
from nfsquares.errors import DimensionMismatch


def test_identity():
    M = F2Matrix.from_lists([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert solve_f2(M, [1, 0, 1]) == [1, 0, 1]


def test_free_variable_zeroed():
    M = F2Matrix.from_lists([[1, 1]])
    assert solve_f2(M, [1]) == [1, 0]


def test_inconsistent():
    M = F2Matrix.from_lists([[1, 1], [1, 1]])
    assert solve_f2(M, [1, 0]) is None


def test_dimension_mismatch():
    M = F2Matrix.from_lists([[1, 0]])
    with pytest.raises(DimensionMismatch):
        solve_f2(M, [1, 0])


def _brute(rows, rhs, cols):
    for cand in itertools.product([0, 1], repeat=cols):
        if all(
            sum(r * c for r, c in zip(row, cand)) % 2 == v
            for row, v in zip(rows, rhs)
        ):
            return cand
    return None


def test_against_brute_force():
    rng = random.Random(0)
    for _ in range(200):
        rows_n = rng.randint(1, 6)
        cols = rng.randint(1, 8)
        rows = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows_n)]
        rhs = [rng.randint(0, 1) for _ in range(rows_n)]
        sol = solve_f2(F2Matrix.from_lists(rows), rhs)
        brute = _brute(rows, rhs, cols)
        assert (sol is None) == (brute is None)
        if sol is not None:
            assert all(
                sum(r * c for r, c in zip(row, sol)) % 2 == v
                for row, v in zip(rows, rhs)
            )
