import random
from fractions import Fraction

import pytest

from contactlie.algebra import (COMPLEX, LieAlgebra, ad, bracket,
                                check_jacobi, complexify)
from contactlie.catalog import catalog
from contactlie.errors import InputError


CAT = catalog()


def test_construction_validates():
    with pytest.raises(InputError):
        LieAlgebra(name="bad", dim=0)
    with pytest.raises(InputError):
        LieAlgebra(name="bad", dim=2, brackets={(1, 0): (1, 0)})
    with pytest.raises(InputError):
        LieAlgebra(name="bad", dim=2, brackets={(0, 1): (1,)})
    with pytest.raises(InputError):
        LieAlgebra(name="bad", dim=2, field="rational")


def test_zero_brackets_dropped():
    a = LieAlgebra(name="a", dim=2,
                   brackets={(0, 1): (Fraction(0), Fraction(0))})
    assert a.brackets == {}


def test_structure_vector_antisymmetry():
    h3 = CAT["heisenberg3"].algebra
    assert h3.structure_vector(0, 1) == [0, 0, 1]
    assert h3.structure_vector(1, 0) == [0, 0, -1]
    assert h3.structure_vector(1, 1) == [0, 0, 0]


def test_bracket_bilinear():
    h3 = CAT["heisenberg3"].algebra
    x = [Fraction(2), Fraction(0), Fraction(5)]
    y = [Fraction(0), Fraction(3), Fraction(-1)]
    assert bracket(h3, x, y) == [0, 0, 6]
    # antisymmetry on random vectors
    rng = random.Random(11)
    for _ in range(20):
        u = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        v = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        assert bracket(h3, u, v) == [-t for t in bracket(h3, v, u)]


def test_jacobi_all_catalog():
    for name, e in CAT.items():
        assert check_jacobi(e.algebra) == [], name


def test_jacobi_violation_named():
    bad = LieAlgebra(
        name="bad", dim=3,
        brackets={(0, 1): (0, 0, 1), (0, 2): (1, 0, 0), (1, 2): (0, 1, 0)})
    assert check_jacobi(bad) == [(1, 2, 3)]


def test_jacobi_seeded_perturbations_of_h5():
    """Randomly bumping one structure constant of h5 almost always breaks
    Jacobi or not; either way check_jacobi must agree with a direct
    evaluation on all basis triples."""
    h5 = CAT["heisenberg5"].algebra
    rng = random.Random(23)
    for _ in range(20):
        i = rng.randrange(5)
        j = rng.randrange(5)
        if i == j:
            continue
        i, j = min(i, j), max(i, j)
        k = rng.randrange(5)
        delta = Fraction(rng.randint(1, 3))
        brackets = {p: list(v) for p, v in h5.brackets.items()}
        vec = brackets.setdefault((i, j), [Fraction(0)] * 5)
        vec[k] = vec[k] + delta
        perturbed = LieAlgebra(name="p", dim=5,
                               brackets={p: tuple(v)
                                         for p, v in brackets.items()})
        violations = check_jacobi(perturbed)
        # oracle: evaluate the cyclic sum directly
        basis = [perturbed.basis_vector(t) for t in range(5)]
        expected = []
        for a in range(5):
            for b in range(a + 1, 5):
                for cc in range(b + 1, 5):
                    total = [
                        p + q + r for p, q, r in zip(
                            bracket(perturbed,
                                    bracket(perturbed, basis[a], basis[b]),
                                    basis[cc]),
                            bracket(perturbed,
                                    bracket(perturbed, basis[b], basis[cc]),
                                    basis[a]),
                            bracket(perturbed,
                                    bracket(perturbed, basis[cc], basis[a]),
                                    basis[b]))
                    ]
                    if any(t != 0 for t in total):
                        expected.append((a + 1, b + 1, cc + 1))
        assert violations == expected


def test_ad_is_bracket_homomorphism():
    """ad([x,y]) = [ad x, ad y] on random vectors of su2 and sl2r."""
    rng = random.Random(5)
    for name in ("su2", "sl2r", "nilpotent_nondiag5"):
        a = CAT[name].algebra
        n = a.dim
        for _ in range(10):
            x = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
            y = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
            adx, ady = ad(a, x), ad(a, y)
            lhs = ad(a, bracket(a, x, y))
            comm = [[sum(adx[i][k] * ady[k][j] - ady[i][k] * adx[k][j]
                         for k in range(n))
                     for j in range(n)] for i in range(n)]
            assert lhs == comm


def test_ad_columns():
    h3 = CAT["heisenberg3"].algebra
    e1 = h3.basis_vector(0)
    m = ad(h3, e1)
    for j in range(3):
        assert [m[i][j] for i in range(3)] == bracket(
            h3, e1, h3.basis_vector(j))


def test_complexify():
    su2 = CAT["su2"].algebra
    c = complexify(su2)
    assert c.field == COMPLEX
    assert c.dim == 3
    assert check_jacobi(c) == []
    with pytest.raises(InputError):
        complexify(c)
