"""Dense matrices over F_q and matrices of polynomials.

A MatrixF is a 2-d galois FieldArray. A polynomial matrix is a tuple of rows,
each row a tuple of :class:`galois.Poly`.
"""

from typing import List, Sequence

import galois
import numpy as np

from polsys.algebra.poly import zero
from polsys.errors import FieldMismatchError, ShapeMismatchError, UsageError


def matrix(rows: Sequence[Sequence[int]], field):
    """MatrixF from integer rows."""
    rows = [[int(v) for v in row] for row in rows]
    if len({len(row) for row in rows}) > 1:
        raise ShapeMismatchError('matrix rows have different lengths')
    return field(np.asarray(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0))


def rank(m) -> int:
    """Rank by Gaussian elimination."""
    if m.size == 0:
        return 0
    return int(np.linalg.matrix_rank(m))


def right_kernel_basis(m) -> List:
    """Canonical basis of ``{v : m v = 0}``.

    Every basis vector has 1 as its last nonzero entry and 0 at the last
    nonzero position of every other basis vector. Vectors are sorted by that
    position, ascending. Empty when the kernel is trivial.
    """
    field = type(m)
    if not issubclass(field, galois.FieldArray) or m.ndim != 2:
        raise UsageError('kernel needs a 2-d field matrix')
    rows, cols = m.shape
    if cols == 0:
        return []
    if rows == 0:
        return [row.copy() for row in field.Identity(cols)]

    basis = m.null_space()
    if basis.shape[0] == 0:
        return []
    flipped = basis[:, ::-1].copy()
    reduced = flipped.row_reduce()[:, ::-1].copy()
    return [reduced[i].copy() for i in range(reduced.shape[0] - 1, -1, -1) if np.count_nonzero(reduced[i])]


def kernel_dimension(m) -> int:
    return m.shape[1] - rank(m)


def vandermonde(points, t: int):
    """L x t matrix with entry (l, i) = points[l] ** i."""
    if t < 1:
        raise UsageError('vandermonde needs at least one column')
    field = type(points)
    size = points.size
    v = field.Ones((size, t))
    for i in range(1, t):
        v[:, i] = v[:, i - 1] * points
    return v


def is_full_column_rank(m) -> bool:
    return rank(m) == m.shape[1]


def poly_matrix_eval(polys, points):
    """Evaluate a polynomial matrix at every point.

    :param polys: tuple of rows of polynomials (m x n)
    :param points: 1-d FieldArray of L points
    :return: FieldArray of shape (L, m, n)
    """
    field = type(points)
    rows, cols = len(polys), len(polys[0])
    values = field.Zeros((points.size, rows, cols))
    for i, row in enumerate(polys):
        for j, entry in enumerate(row):
            if entry.field is not field:
                raise FieldMismatchError('polynomial matrix and points belong to different fields')
            values[:, i, j] = entry(points)
    return values


def poly_vector_eval(polys, points):
    """Evaluate a polynomial vector at every point, shape (L, len(polys))."""
    return poly_matrix_eval(tuple((p,) for p in polys), points)[:, :, 0]


def poly_matvec(polys, vector):
    """Product of a polynomial matrix with a polynomial vector."""
    if len(polys[0]) != len(vector):
        raise ShapeMismatchError('matrix has %d columns, vector has %d entries' % (len(polys[0]), len(vector)))
    result = []
    for row in polys:
        total = zero(vector[0].field)
        for entry, component in zip(row, vector):
            total = total + entry * component
        result.append(total)
    return tuple(result)
