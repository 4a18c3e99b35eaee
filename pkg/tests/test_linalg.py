import random
from fractions import Fraction

import pytest

from orthofrac.linalg import Matrix, SingularMatrixError


def test_rref_zero_matrix():
    m = Matrix.zeros(2, 2)
    reduced, rank, pivots = m.rref()
    assert reduced == m
    assert rank == 0
    assert pivots == ()


def test_rref_identity():
    m = Matrix.identity(3)
    reduced, rank, pivots = m.rref()
    assert reduced == m
    assert rank == 3
    assert pivots == (0, 1, 2)


def test_rref_dependent_rows():
    m = Matrix([[1, 1], [1, 1]])
    reduced, rank, _ = m.rref()
    assert reduced == Matrix([[1, 1], [0, 0]])
    assert rank == 1


def test_rref_idempotent_on_random_matrices():
    rng = random.Random(7)
    for _ in range(25):
        m = Matrix(
            [[Fraction(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(4)] for _ in range(3)]
        )
        reduced = m.rref()[0]
        assert reduced.rref()[0] == reduced


def test_inverse_2x2_closed_form():
    m = Matrix([[1, -1], [1, 1]])
    inv = m.inverse()
    assert inv == Matrix([[Fraction(1, 2), Fraction(1, 2)], [Fraction(-1, 2), Fraction(1, 2)]])


def test_inverse_identity():
    assert Matrix.identity(4).inverse() == Matrix.identity(4)


def test_inverse_of_singular_raises():
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 2], [2, 4]]).inverse()
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 2, 3], [4, 5, 6]]).inverse()


def test_inverse_roundtrip_random():
    rng = random.Random(11)
    done = 0
    while done < 10:
        m = Matrix(
            [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)] for _ in range(4)]
        )
        try:
            inv = m.inverse()
        except SingularMatrixError:
            continue
        assert m @ inv == Matrix.identity(4)
        assert inv @ m == Matrix.identity(4)
        done += 1


def test_solve_identity_and_diagonal():
    rhs = [Fraction(3), Fraction(-2)]
    assert Matrix.identity(2).solve(rhs) == (Fraction(3), Fraction(-2))
    assert Matrix([[2, 0], [0, 4]]).solve([1, 1]) == (Fraction(1, 2), Fraction(1, 4))


def test_solve_matches_inverse_multiply_and_roundtrips():
    rng = random.Random(13)
    done = 0
    while done < 10:
        m = Matrix(
            [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)]
        )
        v = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
        try:
            inv = m.inverse()
        except SingularMatrixError:
            continue
        rhs = m.mul_vec(v)
        assert m.solve(rhs) == tuple(v)
        assert inv.mul_vec(rhs) == tuple(v)
        done += 1


def test_solve_singular_raises():
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 1], [1, 1]]).solve([1, 2])
