"""Finite-dimensional Lie algebras over exact scalars.

Structure constants are stored densely for i < j only; the antisymmetric
completion is synthesized on access.  All values are immutable and every
operation is a pure function, so everything here is safe to share across
threads.
"""

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .linalg import vec_is_zero
from .scalars import GaussianRational, to_gaussian

REAL = "real"
COMPLEX = "complex"


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra given by structure constants on a fixed ordered basis.

    brackets maps (i, j) with i < j to the coefficient tuple of [e_i, e_j];
    pairs with zero bracket may be omitted.
    """

    name: str
    dim: int
    field: str = REAL
    brackets: dict = dataclasses.field(default_factory=dict)
    basis_labels: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("dimension must be >= 1, got %d" % self.dim)
        if self.field not in (REAL, COMPLEX):
            raise InputError("field must be 'real' or 'complex'")
        clean = {}
        for (i, j), coeffs in self.brackets.items():
            if not (0 <= i < j < self.dim):
                raise InputError(
                    "bracket pair (%d, %d) out of range for dim %d"
                    % (i, j, self.dim))
            coeffs = tuple(coeffs)
            if len(coeffs) != self.dim:
                raise InputError(
                    "bracket [e%d, e%d] has %d coefficients, expected %d"
                    % (i + 1, j + 1, len(coeffs), self.dim))
            if not vec_is_zero(coeffs):
                clean[(i, j)] = coeffs
        object.__setattr__(self, "brackets", clean)
        labels = tuple(self.basis_labels) or tuple(
            "e%d" % (i + 1) for i in range(self.dim))
        if len(labels) != self.dim:
            raise InputError("expected %d basis labels" % self.dim)
        object.__setattr__(self, "basis_labels", labels)

    # -- elementary accessors ---------------------------------------------

    def zero_scalar(self):
        return GaussianRational(0) if self.field == COMPLEX else Fraction(0)

    def one_scalar(self):
        return GaussianRational(1) if self.field == COMPLEX else Fraction(1)

    def zero_vector(self):
        return [self.zero_scalar()] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.one_scalar()
        return v

    def structure_vector(self, i, j):
        """Coefficient vector of [e_i, e_j] for arbitrary i, j."""
        if i == j:
            return self.zero_vector()
        if i < j:
            return list(self.brackets.get((i, j), self.zero_vector()))
        return [-c for c in self.brackets.get((j, i), self.zero_vector())]


def bracket(algebra, x, y):
    """[x, y] by bilinear extension of the structure constants."""
    if len(x) != algebra.dim or len(y) != algebra.dim:
        raise InputError("vector length does not match algebra dimension")
    out = algebra.zero_vector()
    for (i, j), coeffs in algebra.brackets.items():
        c = x[i] * y[j] - x[j] * y[i]
        if c != 0:
            out = [o + c * s for o, s in zip(out, coeffs)]
    return out


def check_jacobi(algebra):
    """All basis triples (i, j, k) violating the Jacobi identity, 1-based.

    Empty list iff the structure constants define a Lie algebra.
    """
    violations = []
    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bij = algebra.structure_vector(i, j)
            for k in range(j + 1, n):
                total = bracket(algebra, bij, basis[k])
                total = [
                    t + u + v
                    for t, u, v in zip(
                        total,
                        bracket(algebra, algebra.structure_vector(j, k),
                                basis[i]),
                        bracket(algebra, algebra.structure_vector(k, i),
                                basis[j]),
                    )
                ]
                if not vec_is_zero(total):
                    violations.append((i + 1, j + 1, k + 1))
    return violations


def ad(algebra, x):
    """Matrix of ad(x): column j holds the coordinates of [x, e_j]."""
    if len(x) != algebra.dim:
        raise InputError("vector length does not match algebra dimension")
    cols = [bracket(algebra, x, algebra.basis_vector(j))
            for j in range(algebra.dim)]
    return [[cols[j][i] for j in range(algebra.dim)]
            for i in range(algebra.dim)]


def complexify(algebra):
    """The same structure constants over the Gaussian rationals."""
    if algebra.field == COMPLEX:
        raise InputError("algebra %r is already complex" % algebra.name)
    brackets = {
        key: tuple(to_gaussian(c) for c in coeffs)
        for key, coeffs in algebra.brackets.items()
    }
    return LieAlgebra(
        name=algebra.name + "^C",
        dim=algebra.dim,
        field=COMPLEX,
        brackets=brackets,
        basis_labels=algebra.basis_labels,
    )
