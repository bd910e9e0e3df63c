import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Tuple

import galois
import numpy as np

from polsys import default_settings
from polsys.algebra.field import FieldSpec
from polsys.algebra.matrix import is_full_column_rank, poly_matrix_eval, poly_matvec, poly_vector_eval
from polsys.algebra.poly import degree, exact_div, is_zero, leading_coefficient, max_degree, poly_gcd_all, scale
from polsys.errors import FieldMismatchError, RankDeficientSystemError, ShapeMismatchError, UsageError


logger = logging.getLogger(__name__)

PolyVector = Tuple[galois.Poly, ...]
PolyMatrix = Tuple[PolyVector, ...]


@dataclass(frozen=True)
class PolySystem:
    """The system ``A(x) y = b(x)``, A of shape m x n with m >= n."""

    spec: FieldSpec
    A: PolyMatrix
    b: PolyVector

    def __post_init__(self):
        A = tuple(tuple(row) for row in self.A)
        b = tuple(self.b)
        if not A or not A[0]:
            raise ShapeMismatchError('system matrix is empty')
        if len({len(row) for row in A}) != 1:
            raise ShapeMismatchError('system matrix rows have different lengths')
        if len(b) != len(A):
            raise ShapeMismatchError('right hand side has %d entries, matrix has %d rows' % (len(b), len(A)))
        if len(A) < len(A[0]):
            raise UsageError('underdetermined systems (m < n) are not supported', {'m': len(A), 'n': len(A[0])})
        field = self.spec.GF
        if any(p.field is not field for row in A for p in row) or any(p.field is not field for p in b):
            raise FieldMismatchError('system entries must belong to %s' % self.spec)
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'b', b)

    @property
    def m(self):
        return len(self.A)

    @property
    def n(self):
        return len(self.A[0])

    @property
    def field(self):
        return self.spec.GF

    def evaluate(self, points):
        """``(A(points), b(points))`` with shapes (L, m, n) and (L, m)."""
        return poly_matrix_eval(self.A, points), poly_vector_eval(self.b, points)

    def evaluate_at(self, alpha):
        A, b = self.evaluate(self.field([int(alpha)]))
        return A[0], b[0]

    def is_full_rank_at(self, alpha):
        A, _ = self.evaluate_at(alpha)
        return is_full_column_rank(A)

    def check_full_rank(self, rng=None, probes=None):
        """Probabilistic full column rank check of A(x).

        Evaluates at one random point and at up to ``probes - 1`` more before
        declaring A rank deficient.
        """
        rng = np.random.default_rng(rng)
        probes = probes or default_settings.FULL_RANK_PROBES
        for _ in range(probes):
            if self.is_full_rank_at(self.spec.random(rng=rng)):
                return True
        raise RankDeficientSystemError('system matrix looks rank deficient', {'probes': probes})

    def satisfied_by(self, solution):
        """``A f == g b`` as a polynomial identity."""
        if len(solution.f) != self.n:
            raise ShapeMismatchError('solution has %d components, system has %d unknowns' % (len(solution.f), self.n))
        lhs = poly_matvec(self.A, solution.f)
        return all(left == solution.g * right for left, right in zip(lhs, self.b))


@dataclass(frozen=True)
class ReducedRationalSolution:
    """``f / g`` with g monic and ``gcd(gcd_i f_i, g) = 1``."""

    f: PolyVector
    g: galois.Poly
    df: int = dataclass_field(init=False, compare=False)
    dg: int = dataclass_field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'f', tuple(self.f))
        object.__setattr__(self, 'df', max_degree(self.f))
        object.__setattr__(self, 'dg', degree(self.g))

    @property
    def n(self):
        return len(self.f)

    def evaluate(self, points):
        """``(f(points), g(points))`` with shapes (L, n) and (L,)."""
        return poly_vector_eval(self.f, points), self.g(points)


def reduce_fraction(f, g) -> ReducedRationalSolution:
    """Divide ``f`` and ``g`` by their common gcd and make ``g`` monic."""
    if is_zero(g):
        raise UsageError('denominator of a rational solution cannot be zero')
    f = tuple(f)
    common = poly_gcd_all(list(f) + [g])
    f = tuple(exact_div(p, common) for p in f)
    g = exact_div(g, common)
    inverse = np.reciprocal(leading_coefficient(g))
    return ReducedRationalSolution(tuple(scale(p, inverse) for p in f), scale(g, inverse))


def plant_solution(M, f, g) -> PolySystem:
    """System ``A = g M``, ``b = M f`` whose solution is ``f / g``."""
    field = g.field
    A = tuple(tuple(g * entry for entry in row) for row in M)
    b = poly_matvec(M, f)
    return PolySystem(FieldSpec.from_galois(field), A, b)
