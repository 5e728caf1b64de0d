import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tripledimer.linalg import (DimensionError, ExactMatrix, SingularMatrixError, det, format_rational,
                                inverse, parse_rational, permutation_sign, schur_complement, solve)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def leibniz(rows):
    """Determinant by the permutation expansion, sign from the inversion count."""
    n = len(rows)
    total = Fraction(0)
    for p in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(-1) ** inv
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(square))
def test_det_matches_leibniz(rows):
    assert det(ExactMatrix(rows)) == leibniz(rows)


@settings(max_examples=40)
@given(st.integers(1, 4).flatmap(square))
def test_solve_and_inverse(rows):
    m = ExactMatrix(rows)
    if leibniz(rows) == 0:
        with pytest.raises(SingularMatrixError):
            inverse(m)
        return
    assert m @ inverse(m) == ExactMatrix.identity(m.rows)
    rhs = ExactMatrix([[i + 2 * j for j in range(2)] for i in range(m.rows)])
    assert m @ solve(m, rhs) == rhs


@settings(max_examples=40)
@given(square(5))
def test_schur_determinant_factorization(rows):
    m = ExactMatrix(rows)
    D = m.submatrix([2, 3, 4], [2, 3, 4])
    if det(D) == 0:
        with pytest.raises(SingularMatrixError):
            schur_complement(m, [0, 1], [0, 1])
        return
    S, delta = schur_complement(m, [0, 1], [0, 1])
    assert delta == det(D)
    assert det(m) == delta * det(S)



def test_shapes_and_errors():
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        det(ExactMatrix([[1, 2]]))
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2]]) @ ExactMatrix([[1, 2]])
    assert det(ExactMatrix(shape=(0, 0))) == 1


def test_permutation_sign():
    for p in itertools.permutations(range(5)):
        inv = sum(1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j])
        assert permutation_sign(p) == (-1) ** inv
    assert permutation_sign(["c", "a", "b"]) == 1


def test_rational_round_trip():
    for x in [Fraction(3, 7), Fraction(-5, 2), Fraction(4), Fraction(0)]:
        assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(6, 3)) == "2"



def test_schur_rectangular_block_by_hand():
    m = ExactMatrix([[1, 2, 3, 4], [0, 1, 2, 1], [1, 0, 1, 3]])
    S, delta = schur_complement(m, [0], [0, 1])
    # D = [[2, 1], [1, 3]], D^-1 = [[3, -1], [-1, 2]] / 5
    Dinv = [[Fraction(3, 5), Fraction(-1, 5)], [Fraction(-1, 5), Fraction(2, 5)]]
    B, C, A = [3, 4], [[0, 1], [1, 0]], [1, 2]
    expect = [A[j] - sum(B[a] * Dinv[a][b] * C[b][j] for a in range(2) for b in range(2)) for j in range(2)]
    assert delta == 5
    assert S == ExactMatrix([expect])
