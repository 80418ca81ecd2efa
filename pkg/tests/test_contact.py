import random
from fractions import Fraction

import pytest

from contactlie.catalog import abelian, catalog
from contactlie.contact import (contact_structure, decompose, reeb,
                                reeb_bracket_is_horizontal)
from contactlie.errors import InputError
from contactlie.forms import evaluate, one_form

CAT = catalog()

CONTACT_NAMES = ["heisenberg3", "heisenberg5", "heisenberg7", "su2",
                 "sl2r", "aff1_aff1_ext5", "nilpotent_nondiag5"]


def test_reeb_catalog_values():
    assert CAT["heisenberg3"].contact().reeb == (0, 0, 1)
    assert CAT["heisenberg5"].contact().reeb == (0, 0, 0, 0, 1)
    assert CAT["su2"].contact().reeb == (0, 0, 1)
    assert CAT["sl2r"].contact().reeb == (0, 0, 1)
    assert CAT["nilpotent_nondiag5"].contact().reeb == (
        0, 0, Fraction(1, 3), Fraction(2, 3), 0)


def test_reeb_defining_equations_exact():
    for name in CONTACT_NAMES:
        c = CAT[name].contact()
        xi = list(c.reeb)
        assert evaluate(c.eta, xi) == 1, name
        deta = c.deta
        for j in range(c.algebra.dim):
            assert evaluate(deta, xi, c.algebra.basis_vector(j)) == 0, name


def test_reeb_singular_for_noncontact():
    a3 = abelian(3)
    eta = one_form(3, [Fraction(0), Fraction(0), Fraction(1)])
    with pytest.raises(InputError):
        reeb(a3, eta)
    # perturbed eta on h5: e1* alone is not contact
    h5 = CAT["heisenberg5"].algebra
    with pytest.raises(InputError):
        reeb(h5, one_form(5, [Fraction(1)] + [Fraction(0)] * 4))


def test_contact_structure_rejects_noncontact():
    a3 = abelian(3)
    with pytest.raises(InputError):
        contact_structure(a3, one_form(3, [Fraction(1), Fraction(0),
                                           Fraction(0)]))


def test_projector_and_horizontal_basis():
    for name in CONTACT_NAMES:
        c = CAT[name].contact()
        n = c.algebra.dim
        assert len(c.horizontal_basis) == n - 1
        for v in c.horizontal_basis:
            assert evaluate(c.eta, list(v)) == 0
        p = [list(r) for r in c.projector]
        # P xi = 0 and P fixes the horizontal basis
        from contactlie.linalg import mat_vec
        assert all(x == 0 for x in mat_vec(p, list(c.reeb)))
        for v in c.horizontal_basis:
            assert mat_vec(p, list(v)) == list(v)


def test_decompose_round_trip():
    rng = random.Random(13)
    for name in CONTACT_NAMES:
        c = CAT[name].contact()
        n = c.algebra.dim
        for _ in range(100 // len(CONTACT_NAMES) + 1):
            x = [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                 for _ in range(n)]
            s, hx = decompose(c, x)
            assert evaluate(c.eta, hx) == 0
            recomposed = [s * a + b for a, b in zip(c.reeb, hx)]
            assert recomposed == x


def test_decompose_length_check():
    c = CAT["heisenberg3"].contact()
    with pytest.raises(InputError):
        decompose(c, [Fraction(1)] * 4)


def test_reeb_bracket_horizontal():
    for name in CONTACT_NAMES:
        assert reeb_bracket_is_horizontal(CAT[name].contact()), name


def test_n_property():
    assert CAT["heisenberg7"].contact().n == 3
    assert CAT["su2"].contact().n == 1
