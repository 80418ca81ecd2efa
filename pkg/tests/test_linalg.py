import random
from fractions import Fraction

import pytest

from contactlie.errors import SingularSystemError
from contactlie.linalg import (coordinates_in_span, det, inverse, mat_mul,
                               mat_vec, nullspace, rank, rref, solve_unique)
from contactlie.scalars import GaussianRational


def frac_matrix(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_rref_rank():
    m = frac_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    rows, pivots = rref(m)
    assert pivots == [0, 1]
    assert rows[0][0] == 1 and rows[1][1] == 1
    assert rows[0][1] == 0 and rows[1][0] == 0


def test_solve_unique_exact():
    a = frac_matrix([[2, 1], [1, 3]])
    x = solve_unique(a, [Fraction(5), Fraction(10)])
    assert mat_vec(a, x) == [5, 10]
    assert x == [Fraction(1), Fraction(3)]


def test_solve_singular_raises():
    a = frac_matrix([[1, 1], [2, 2]])
    with pytest.raises(SingularSystemError):
        solve_unique(a, [Fraction(1), Fraction(3)])  # inconsistent
    with pytest.raises(SingularSystemError):
        solve_unique(a, [Fraction(1), Fraction(2)])  # underdetermined


def test_nullspace():
    a = frac_matrix([[1, 2, 3]])
    basis = nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert mat_vec(a, v) == [0]


def test_inverse_and_det():
    a = frac_matrix([[1, 2], [3, 5]])
    assert det(a) == -1
    ainv = inverse(a)
    assert mat_mul(a, ainv) == frac_matrix([[1, 0], [0, 1]])


def test_det_seeded_random_product_rule():
    rng = random.Random(7)
    for _ in range(10):
        a = [[Fraction(rng.randint(-4, 4)) for _ in range(3)]
             for _ in range(3)]
        b = [[Fraction(rng.randint(-4, 4)) for _ in range(3)]
             for _ in range(3)]
        assert det(mat_mul(a, b)) == det(a) * det(b)


def test_gaussian_rational_field():
    i = GaussianRational(0, 1)
    one = GaussianRational(1)
    a = [[one, i], [-i, one + one]]
    assert det(a) == 1
    ainv = inverse(a)
    prod = mat_mul(a, ainv)
    assert prod[0][0] == 1 and prod[0][1] == 0
    assert prod[1][0] == 0 and prod[1][1] == 1


def test_coordinates_in_span():
    basis = [[Fraction(1), Fraction(0), Fraction(1)],
             [Fraction(0), Fraction(1), Fraction(1)]]
    coords = coordinates_in_span(basis, [Fraction(2), Fraction(3),
                                         Fraction(5)])
    assert coords == [2, 3]
    with pytest.raises(SingularSystemError):
        coordinates_in_span(basis, [Fraction(0), Fraction(0), Fraction(1)])
