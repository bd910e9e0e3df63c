"""Univariate polynomials over F_q.

Polynomials are :class:`galois.Poly` objects. Coefficient lists in this module
are ascending (``[c0, c1, ...]`` is ``c0 + c1 x + ...``) and the degree of
the zero polynomial is -1.
"""

import functools
from typing import Iterable, List, Sequence, Tuple

import galois
import numpy as np

from polsys.errors import DuplicatePointError, FieldArithmeticError, FieldMismatchError, UsageError


ZERO_DEGREE = -1


def poly(coeffs, field):
    """Polynomial from ascending coefficients, given as ints or field elements."""
    values = field(np.asarray([int(c) for c in coeffs] or [0]))
    return galois.Poly(values, field=field, order='asc')


def poly_from_vector(vector):
    """Polynomial from an ascending coefficient FieldArray."""
    field = type(vector)
    if vector.size == 0:
        return galois.Poly.Zero(field)
    return galois.Poly(vector, field=field, order='asc')


def zero(field):
    return galois.Poly.Zero(field)


def one(field):
    return galois.Poly.One(field)


def constant(value):
    field = type(value)
    return galois.Poly(field([int(value)]), field=field)


def linear_product(roots, field):
    """Monic product of ``(x - r)`` over ``roots``."""
    roots = list(roots)
    if not roots:
        return galois.Poly.One(field)
    return galois.Poly.Roots(field(np.asarray([int(r) for r in roots])), field=field)


def is_zero(p):
    return not np.count_nonzero(p.coeffs)


def degree(p):
    return ZERO_DEGREE if is_zero(p) else int(p.degree)


def max_degree(polys: Iterable):
    return max((degree(p) for p in polys), default=ZERO_DEGREE)


def coefficients(p, size=None):
    """Ascending coefficient FieldArray, padded to ``size`` when given."""
    coeffs = p.coeffs[::-1]
    if size is None:
        return coeffs.copy()
    if size < degree(p) + 1:
        raise UsageError('polynomial of degree %d does not fit %d coefficients' % (degree(p), size))
    padded = p.field.Zeros(size)
    padded[:coeffs.size] = coeffs[:size]
    return padded


def to_ints(p) -> List[int]:
    return [int(c) for c in p.coeffs[::-1]]


def leading_coefficient(p):
    return p.coeffs[0]


def scale(p, c):
    """``c * p`` for a field element ``c``."""
    if type(c) is not p.field:
        raise FieldMismatchError('scalar and polynomial belong to different fields')
    return galois.Poly(p.coeffs * c, field=p.field)


def monic(p):
    if is_zero(p):
        return p
    return scale(p, np.reciprocal(leading_coefficient(p)))


def poly_eval(p, alpha):
    """``p(alpha)`` (Horner evaluation)."""
    if type(alpha) is not p.field:
        raise FieldMismatchError('evaluation point and polynomial belong to different fields')
    return p(alpha)


def poly_interpolate(points: Sequence[Tuple]):
    """Lagrange interpolation through ``[(alpha, value), ...]``.

    Returns the unique polynomial of degree < len(points).
    """
    if not points:
        raise UsageError('interpolation needs at least one point')
    field = type(points[0][0])
    for alpha, value in points:
        if type(alpha) is not field or type(value) is not field:
            raise FieldMismatchError('interpolation points belong to different fields')
    xs = [int(alpha) for alpha, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicatePointError('interpolation abscissas must be distinct', {'points': xs})
    if len(points) == 1:
        return constant(points[0][1])
    return galois.lagrange_poly(field(xs), field([int(v) for _, v in points]))


def poly_gcd(a, b):
    """Monic greatest common divisor, ``gcd(a, 0) = monic(a)``."""
    if a.field is not b.field:
        raise FieldMismatchError('polynomials belong to different fields')
    if is_zero(a) and is_zero(b):
        raise UsageError('gcd of two zero polynomials is undefined')
    if is_zero(b):
        return monic(a)
    if is_zero(a):
        return monic(b)
    return monic(galois.gcd(a, b))


def poly_gcd_all(polys: Iterable):
    """Monic gcd of a family, zero members ignored."""
    nonzero = [p for p in polys if not is_zero(p)]
    if not nonzero:
        raise UsageError('gcd of zero polynomials is undefined')
    return functools.reduce(poly_gcd, nonzero[1:], monic(nonzero[0]))


def poly_divrem(a, b):
    """``(q, r)`` with ``a = q b + r`` and ``deg r < deg b``."""
    if a.field is not b.field:
        raise FieldMismatchError('polynomials belong to different fields')
    if is_zero(b):
        raise FieldArithmeticError('polynomial division by zero')
    if is_zero(a):
        return a, a
    return divmod(a, b)


def exact_div(a, b):
    quotient, remainder = poly_divrem(a, b)
    if not is_zero(remainder):
        raise UsageError('polynomial division is not exact')
    return quotient


def parse_poly(text, spec):
    """Parse ``c0,c1,...`` (ascending, integer elements) over ``spec``."""
    try:
        values = [int(c) for c in text.split(',') if c.strip()]
    except ValueError:
        raise UsageError('invalid polynomial %r' % (text,))
    if any(v < 0 or v >= spec.order for v in values):
        raise UsageError('polynomial coefficient out of range for %s' % spec, {'poly': text})
    return poly(values, spec.GF)


def format_poly(p):
    return ','.join(str(c) for c in to_ints(p))
