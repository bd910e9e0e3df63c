"""Black box simulation: honest evaluations plus corrupted ones on an error plan."""

import logging

import numpy as np

from polsys import default_settings
from polsys.algebra.matrix import is_full_column_rank
from polsys.errors import RetryBudgetExceeded, ShapeMismatchError, UsageError
from polsys.oracle.samples import BlackBoxOutput, EvaluationSample


logger = logging.getLogger(__name__)


def _consistent(A, b, f_value, g_value):
    return bool(np.all(A @ f_value == g_value * b))


def _check_points(points, L):
    if points.size != L:
        raise ShapeMismatchError('%d points given for an error plan over %d' % (points.size, L))


def _uniform_corruption(field, m, n, f_value, g_value, rng, retries):
    for _ in range(retries):
        A = field.Random((m, n), seed=rng)
        if not is_full_column_rank(A):
            continue
        b = field.Random(m, seed=rng)
        if not _consistent(A, b, f_value, g_value):
            return A, b
    raise RetryBudgetExceeded('no full rank inconsistent corruption over %s after %d draws' % (field.name, retries))


def sample_black_box(system, solution, points, plan, retries=None):
    """Evaluate the system at ``points``, corrupting the positions of ``plan``.

    A corrupted sample has uniform entries, full column rank and really
    violates ``A_l f(α_l) = g(α_l) b_l``, so exactly ``plan.e`` samples are
    erroneous.

    :param system: the :class:`PolySystem`
    :param solution: its reduced solution
    :param points: 1-d FieldArray of ``plan.L`` points
    :param plan: :class:`ErrorPlan`, its seed drives the corruption
    :return: list of :class:`EvaluationSample`
    """
    _check_points(points, plan.L)
    retries = retries or default_settings.RETRY_BUDGET
    rng = np.random.default_rng(plan.seed)
    A, b = system.evaluate(points)
    f_values, g_values = solution.evaluate(points)

    samples = []
    for l in range(plan.L):
        if l in plan.errors:
            A_l, b_l = _uniform_corruption(system.field, system.m, system.n, f_values[l], g_values[l], rng, retries)
            samples.append(EvaluationSample(l, BlackBoxOutput(points[l], A_l, b_l), True))
        else:
            samples.append(EvaluationSample(l, BlackBoxOutput(points[l], A[l], b[l]), False))
    return samples


def adversarial_corrupt(system, solution, points, errors, alt_solution):
    """Answer with the system whose solution is ``alt_solution`` on ``errors``.

    Positions where the alternative happens to agree with ``solution`` are
    emitted unflagged, as they are not errors.

    :param errors: 0-based positions among ``points``
    :param alt_solution: :class:`ReducedRationalSolution` with ``system.n`` components
    """
    if alt_solution.n != system.n:
        raise ShapeMismatchError('alternative solution has %d components, system has %d unknowns'
                                 % (alt_solution.n, system.n))
    errors = frozenset(int(l) for l in errors)
    L = points.size
    if any(l < 0 or l >= L for l in errors):
        raise UsageError('error positions must lie in 0..L-1', {'L': L, 'errors': sorted(errors)})

    A, b = system.evaluate(points)
    f_values, g_values = solution.evaluate(points)
    alt_f, alt_g = alt_solution.evaluate(points)
    samples = []
    for l in range(L):
        if l not in errors:
            samples.append(EvaluationSample(l, BlackBoxOutput(points[l], A[l], b[l]), False))
            continue
        if alt_g[l] == 0:
            raise UsageError('alternative solution has a pole at %d' % int(points[l]))
        b_l = (A[l] @ alt_f[l]) / alt_g[l]
        corrupted = not _consistent(A[l], b_l, f_values[l], g_values[l])
        samples.append(EvaluationSample(l, BlackBoxOutput(points[l], A[l], b_l), corrupted))
    if sum(sample.is_corrupted for sample in samples) < len(errors):
        logger.debug('alternative solution agrees with the planted one on some error positions')
    return samples
