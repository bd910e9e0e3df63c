"""Random polynomial systems with a known reduced solution.

Two generators:

``planted``
    draw a monic g of degree dg, a numerator f coprime with g and a full rank
    M, then set ``A = g M`` and ``b = M f`` so that ``A f / g = b``.
``cramer``
    draw a full rank A and a polynomial y, set ``b = A y`` (g = 1).
"""

import logging

import galois
import numpy as np

from polsys import default_settings
from polsys.algebra.matrix import poly_matvec
from polsys.algebra.poly import is_zero, poly_gcd_all
from polsys.errors import InsufficientPointsError, RankDeficientSystemError, RetryBudgetExceeded, UsageError
from polsys.system.model import PolySystem, ReducedRationalSolution, plant_solution
from polsys.system.points import usable_points


logger = logging.getLogger(__name__)

GENERATORS = ('planted', 'cramer')


def random_poly(spec, degree, rng, exact=False, monic=False):
    """Random polynomial of degree <= ``degree`` (exactly ``degree`` when asked)."""
    if degree < 0:
        return galois.Poly.Zero(spec.GF)
    coeffs = spec.random(degree + 1, rng=rng)
    if monic:
        coeffs[-1] = 1
    elif exact:
        coeffs[-1] = spec.random(rng=rng, nonzero=True)
    return galois.Poly(coeffs, field=spec.GF, order='asc')


def random_poly_matrix(spec, rows, cols, degree, rng, retries=None):
    """Random polynomial matrix passing the full column rank check."""
    retries = retries or default_settings.RETRY_BUDGET
    for attempt in range(retries):
        M = tuple(tuple(random_poly(spec, degree, rng) for _ in range(cols)) for _ in range(rows))
        probe = PolySystem(spec, M, tuple(galois.Poly.Zero(spec.GF) for _ in range(rows)))
        try:
            probe.check_full_rank(rng)
            return M
        except RankDeficientSystemError:
            logger.debug('rank deficient draw %d, retrying', attempt)
    raise RetryBudgetExceeded('no full rank matrix over %s after %d draws' % (spec, retries))


def random_numerator(spec, n, df, g, rng, retries=None):
    """n polynomials of degree <= df, the first of degree exactly df, coprime with g."""
    retries = retries or default_settings.RETRY_BUDGET
    for attempt in range(retries):
        f = tuple(random_poly(spec, df, rng, exact=(i == 0)) for i in range(n))
        if any(not is_zero(p) for p in f) and poly_gcd_all(list(f) + [g]).degree == 0:
            return f
        logger.debug('numerator draw %d shares a factor with g, retrying', attempt)
    raise RetryBudgetExceeded('no numerator coprime with g over %s after %d draws' % (spec, retries))


def _planted(spec, n, m, deg_a, df, dg, rng, retries):
    g = random_poly(spec, dg, rng, monic=True)
    f = random_numerator(spec, n, df, g, rng, retries)
    M = random_poly_matrix(spec, m, n, deg_a, rng, retries)
    return plant_solution(M, f, g), ReducedRationalSolution(f, g)


def _cramer(spec, n, m, deg_a, df, dg, rng, retries):
    if dg != 0:
        raise UsageError('the cramer generator only builds polynomial solutions (dg = 0)', {'dg': dg})
    A = random_poly_matrix(spec, m, n, deg_a, rng, retries)
    one = galois.Poly.One(spec.GF)
    y = random_numerator(spec, n, df, one, rng, retries)
    return PolySystem(spec, A, poly_matvec(A, y)), ReducedRationalSolution(y, one)


def generate_instance(spec, n, m, deg_a, df, dg, seed=None, mode='planted', min_points=0, retries=None):
    """Random system with a planted reduced solution.

    :param spec: the field
    :param n: unknowns
    :param m: equations, ``m >= n``
    :param deg_a: degree bound of the random matrix entries
    :param df: numerator degree (reached by the first component)
    :param dg: exact denominator degree
    :param seed: int, entropy list or numpy Generator
    :param mode: ``planted`` or ``cramer``
    :param min_points: redraw until the field has this many usable evaluation points
    :return: ``(PolySystem, ReducedRationalSolution)``
    """
    if not m >= n >= 1:
        raise UsageError('need m >= n >= 1', {'m': m, 'n': n})
    if min(deg_a, df, dg) < 0:
        raise UsageError('degrees must be non negative', {'deg_a': deg_a, 'df': df, 'dg': dg})
    if mode not in GENERATORS:
        raise UsageError('unknown generator %r' % (mode,), {'generators': GENERATORS})
    if min_points > spec.order:
        raise InsufficientPointsError('%s has only %d elements' % (spec, spec.order),
                                      available=spec.order, requested=min_points)

    retries = retries or default_settings.RETRY_BUDGET
    rng = np.random.default_rng(seed)
    build = _planted if mode == 'planted' else _cramer
    for attempt in range(retries):
        system, solution = build(spec, n, m, deg_a, df, dg, rng, retries)
        if not min_points:
            return system, solution
        available = len(usable_points(system, solution.g))
        if available >= min_points:
            return system, solution
        logger.debug('instance %d offers %d usable points, %d needed', attempt, available, min_points)
    raise RetryBudgetExceeded('no instance with %d usable points over %s after %d draws' % (min_points, spec, retries))
