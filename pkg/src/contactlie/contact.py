"""Validated contact structures: Reeb field, horizontal distribution and
the splitting X = eta(X) xi + HX."""

from dataclasses import dataclass

from .algebra import LieAlgebra, bracket
from .errors import InputError, InternalInvariantError, SingularSystemError
from .forms import (AlternatingForm, ce_differential, evaluate, is_contact,
                    one_form_coefficients, two_form_matrix)
from .linalg import (mat_mul, mat_vec, nullspace, solve_unique,
                     vec_is_zero)


@dataclass(frozen=True)
class ContactStructure:
    """A contact Lie algebra together with its derived data.

    horizontal_basis spans ker(eta); projector is P = I - xi (x) eta, the
    projection onto the horizontal space along the Reeb line.
    """

    algebra: LieAlgebra
    eta: AlternatingForm
    reeb: tuple
    horizontal_basis: tuple
    projector: tuple  # rows

    @property
    def n(self):
        return (self.algebra.dim - 1) // 2

    @property
    def deta(self):
        return ce_differential(self.algebra, self.eta)


def reeb(algebra, eta):
    """The unique xi with eta(xi) = 1 and d(eta)(xi, e_j) = 0 for all j.

    Solved as one exact linear system; it is singular exactly when
    eta ^ (d eta)^n = 0, i.e. when eta is not contact.
    """
    if eta.degree != 1 or eta.dim != algebra.dim:
        raise InputError("eta must be a 1-form on the algebra")
    deta = ce_differential(algebra, eta)
    d = two_form_matrix(deta)
    rows = [one_form_coefficients(eta)]
    # equation j:  sum_i xi_i * deta(e_i, e_j) = 0
    for j in range(algebra.dim):
        rows.append([d[i][j] for i in range(algebra.dim)])
    rhs = [algebra.one_scalar()] + [algebra.zero_scalar()] * algebra.dim
    try:
        return solve_unique(rows, rhs)
    except SingularSystemError as exc:
        raise InputError(
            "no unique Reeb field: eta is not a contact form "
            "(the defining linear system is singular)") from exc


def contact_structure(algebra, eta):
    """Bundle (algebra, eta, xi, horizontal basis, projector), validated."""
    ok, _ = is_contact(algebra, eta)
    if not ok:
        raise InputError(
            "eta is not a contact form on %r (eta ^ d eta^n = 0)"
            % algebra.name)
    xi = reeb(algebra, eta)
    eta_row = one_form_coefficients(eta)
    kernel = nullspace([eta_row])
    if len(kernel) != algebra.dim - 1:
        raise InternalInvariantError("ker(eta) has unexpected dimension")
    proj = [[(1 if i == j else 0) - xi[i] * eta_row[j]
             for j in range(algebra.dim)] for i in range(algebra.dim)]
    structure = ContactStructure(
        algebra=algebra,
        eta=eta,
        reeb=tuple(xi),
        horizontal_basis=tuple(tuple(v) for v in kernel),
        projector=tuple(tuple(r) for r in proj),
    )
    _validate(structure)
    return structure


def _validate(c):
    eta, xi = c.eta, list(c.reeb)
    if evaluate(eta, xi) != 1:
        raise InternalInvariantError("eta(xi) != 1 after solve")
    deta = c.deta
    for j in range(c.algebra.dim):
        if evaluate(deta, xi, c.algebra.basis_vector(j)) != 0:
            raise InternalInvariantError("d eta(xi, e_j) != 0 after solve")
    p = [list(r) for r in c.projector]
    if not _mat_eq(mat_mul(p, p), p):
        raise InternalInvariantError("projector is not idempotent")
    if not vec_is_zero(mat_vec(p, xi)):
        raise InternalInvariantError("projector does not kill the Reeb field")
    for v in c.horizontal_basis:
        if evaluate(eta, list(v)) != 0:
            raise InternalInvariantError("horizontal basis vector not in ker eta")


def _mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def decompose(c, x):
    """Split x = s * xi + hx with s = eta(x) and hx horizontal."""
    if len(x) != c.algebra.dim:
        raise InputError("vector length does not match algebra dimension")
    s = evaluate(c.eta, list(x))
    hx = mat_vec([list(r) for r in c.projector], list(x))
    return s, hx


def reeb_bracket_is_horizontal(c):
    """eta([xi, X]) = 0 for every basis X; follows from the Reeb equations."""
    xi = list(c.reeb)
    for j in range(c.algebra.dim):
        v = bracket(c.algebra, xi, c.algebra.basis_vector(j))
        if evaluate(c.eta, v) != 0:
            return False
    return True
