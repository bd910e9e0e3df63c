"""Independent oracles and small builders shared by the tests."""

import itertools

import galois
import numpy as np

from polsys.algebra.poly import poly
from polsys.system.model import PolySystem, reduce_fraction


def polys(spec, *coeff_lists):
    return tuple(poly(coeffs, spec.GF) for coeffs in coeff_lists)


def system_from_ints(spec, A, b):
    """System from nested ascending coefficient lists."""
    return PolySystem(spec, tuple(polys(spec, *row) for row in A), polys(spec, *b))


def poly_det(matrix):
    """Determinant of a square polynomial matrix by the Leibniz formula."""
    n = len(matrix)
    field = matrix[0][0].field
    total = galois.Poly.Zero(field)
    for permutation in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if permutation[i] > permutation[j])
        term = galois.Poly.One(field)
        for i in range(n):
            term = term * matrix[i][permutation[i]]
        total = total - term if inversions % 2 else total + term
    return total


def cramer_solution(system):
    """Reduced solution of a square system by determinant ratios."""
    A = [list(row) for row in system.A]
    n = system.n
    det = poly_det(A)
    numerators = []
    for j in range(n):
        replaced = [row[:j] + [system.b[i]] + row[j + 1:] for i, row in enumerate(A)]
        numerators.append(poly_det(replaced))
    return reduce_fraction(numerators, det)


def berlekamp_welch(spec, points, values, k, e):
    """Classic Reed-Solomon decoding from ``Q(x) = y E(x)`` with E monic of degree e.

    Returns the message polynomial or None.
    """
    GF = spec.GF
    points = GF(list(points))
    values = GF(list(values))
    unknowns = k + 2 * e
    augmented = GF.Zeros((points.size, unknowns + 1))
    for l, (a, y) in enumerate(zip(points, values)):
        for i in range(k + e):
            augmented[l, i] = a ** i
        for i in range(e):
            augmented[l, k + e + i] = -(y * a ** i)
        augmented[l, unknowns] = y * a ** e
    reduced = augmented.row_reduce()
    pivots = []
    for row in reduced:
        nonzero = np.flatnonzero(np.asarray(row))
        if nonzero.size == 0:
            continue
        if nonzero[0] == unknowns:
            return None
        pivots.append((nonzero[0], row[unknowns]))
    solution = GF.Zeros(unknowns)
    for column, value in pivots:
        solution[column] = value
    Q = galois.Poly(solution[:k + e], field=GF, order='asc')
    E = galois.Poly(GF([int(c) for c in solution[k + e:]] + [1]), field=GF, order='asc')
    message, remainder = divmod(Q, E)
    if remainder != galois.Poly.Zero(GF) or message.degree > k - 1:
        return None
    return message
