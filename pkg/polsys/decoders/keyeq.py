"""Key equations shared by the decoders.

Unknowns are laid out as the ascending coefficients of φ_1, ..., φ_n (each of
degree <= df+e) followed by those of ψ (degree <= dg+e).
"""

import logging
from dataclasses import dataclass

import numpy as np

from polsys.algebra.matrix import vandermonde
from polsys.algebra.poly import (
    coefficients,
    degree,
    exact_div,
    is_zero,
    leading_coefficient,
    max_degree,
    poly_from_vector,
    poly_gcd_all,
    scale,
)
from polsys.decoders.bounds import l_glz, l_star
from polsys.errors import ShapeMismatchError, UsageError
from polsys.system.model import ReducedRationalSolution


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KeyEquationMatrix:
    """Matrix of the homogeneous key equations with its block parameters."""

    matrix: object
    n: int
    L: int
    df: int
    dg: int
    e: int

    @property
    def phi_width(self):
        return self.df + self.e + 1

    @property
    def psi_width(self):
        return self.dg + self.e + 1

    @property
    def unknowns(self):
        return self.n * self.phi_width + self.psi_width

    @property
    def rho(self):
        """Rank of a matrix whose kernel is one dimensional."""
        return self.unknowns - 1

    def split(self, vector):
        """``(φ_1..φ_n, ψ)`` from a coefficient vector."""
        if vector.size != self.unknowns:
            raise ShapeMismatchError('expected %d coefficients, got %d' % (self.unknowns, vector.size))
        w = self.phi_width
        phis = tuple(poly_from_vector(vector[i * w:(i + 1) * w]) for i in range(self.n))
        return phis, poly_from_vector(vector[self.n * w:])

    def join(self, phis, psi):
        """Coefficient vector of ``(φ, ψ)``."""
        field = psi.field
        vector = field.Zeros(self.unknowns)
        w = self.phi_width
        for i, phi in enumerate(phis):
            vector[i * w:(i + 1) * w] = coefficients(phi, w)
        vector[self.n * w:] = coefficients(psi, self.psi_width)
        return vector


def build_key_matrix(y, points, n, df, dg, e) -> KeyEquationMatrix:
    """Key equation matrix ``φ_i(α_l) - y_li ψ(α_l) = 0``.

    Block row i holds ``V_{df+e+1}`` in block column i and ``-D_i V_{dg+e+1}``
    in the last block column, D_i the diagonal of ``y_{1i}..y_{Li}``.

    :param y: FieldArray of shape (L, n)
    :param points: 1-d FieldArray of L distinct points
    """
    L = points.size
    if y.shape != (L, n):
        raise ShapeMismatchError('y must have shape (%d, %d), got %s' % (L, n, y.shape))
    if len({int(a) for a in points}) != L:
        raise UsageError('evaluation points must be distinct')
    minimum = l_star(n, df, dg, e)
    if L < minimum:
        raise UsageError('%d points cannot determine the key equations, at least %d needed' % (L, minimum),
                         {'L': L, 'n': n, 'df': df, 'dg': dg, 'e': e})
    if L < l_glz(n, df, dg, e):
        logger.debug('building key equations below the probabilistic point count (L=%d)', L)

    key = KeyEquationMatrix(None, n, L, df, dg, e)
    field = type(points)
    v_phi = vandermonde(points, key.phi_width)
    v_psi = vandermonde(points, key.psi_width)
    matrix = field.Zeros((n * L, key.unknowns))
    psi_start = n * key.phi_width
    for i in range(n):
        rows = slice(i * L, (i + 1) * L)
        matrix[rows, i * key.phi_width:(i + 1) * key.phi_width] = v_phi
        matrix[rows, psi_start:] = -(y[:, i][:, np.newaxis] * v_psi)
    return KeyEquationMatrix(matrix, n, L, df, dg, e)


def minimal_solution(key, basis):
    """Kernel vector with minimal ``(deg ψ, max deg φ)``, ψ nonzero.

    Returns ``(φ, ψ)`` or None when every candidate has ψ = 0.
    """
    candidates = []
    for vector in basis:
        phis, psi = key.split(vector)
        if not is_zero(psi):
            candidates.append(((degree(psi), max_degree(phis)), phis, psi))
    if not candidates:
        return None
    _, phis, psi = min(candidates, key=lambda candidate: candidate[0])
    return phis, psi


def reduce_with_locator(phis, psi):
    """Make ψ monic, divide out ``Λ = gcd(φ_1..φ_n, ψ)``.

    :return: ``(ReducedRationalSolution, Λ)``
    """
    inverse = np.reciprocal(leading_coefficient(psi))
    phis = [scale(phi, inverse) for phi in phis]
    psi = scale(psi, inverse)
    locator = poly_gcd_all(phis + [psi])
    f = tuple(exact_div(phi, locator) for phi in phis)
    return ReducedRationalSolution(f, exact_div(psi, locator)), locator


def verified(solution, df, dg, exact_dg=False, system=None):
    """Degree bounds (and the identity ``A f = g b`` when a system is given)."""
    if exact_dg and solution.dg != dg:
        return False
    if solution.dg > dg or solution.df > df:
        return False
    if system is not None and not system.satisfied_by(solution):
        return False
    return True
