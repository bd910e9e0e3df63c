"""Error free solver: evaluate, solve pointwise, interpolate the vector fraction."""

import logging

from polsys.algebra.matrix import right_kernel_basis
from polsys.decoders.glz import local_kernels
from polsys.decoders.keyeq import build_key_matrix, minimal_solution
from polsys.errors import InconsistentSystemError, UsageError
from polsys.oracle.samples import BlackBoxOutput
from polsys.system.model import ReducedRationalSolution, reduce_fraction
from polsys.system.points import choose_evaluation_points


logger = logging.getLogger(__name__)


def exact_solve(system, df_bound, dg_bound, seed=None, usable=None) -> ReducedRationalSolution:
    """Unique reduced solution of ``A y = b`` from ``df_bound + dg_bound + 1`` honest evaluations.

    :param system: the :class:`PolySystem`
    :param df_bound: upper bound on the numerator degree
    :param dg_bound: upper bound on the denominator degree
    :param seed: seed for the evaluation point shuffle
    :param usable: precomputed admissible points of ``system``
    """
    if df_bound < 0 or dg_bound < 0:
        raise UsageError('degree bounds must be non negative', {'df': df_bound, 'dg': dg_bound})
    count = df_bound + dg_bound + 1
    points = choose_evaluation_points(system, None, count, seed=seed, usable=usable)
    A, b = system.evaluate(points)
    outputs = [BlackBoxOutput(points[l], A[l], b[l]) for l in range(count)]

    y = local_kernels(outputs, strict=True).values
    key = build_key_matrix(y, points, system.n, df_bound, dg_bound, 0)
    candidate = minimal_solution(key, right_kernel_basis(key.matrix))
    if candidate is None:
        raise InconsistentSystemError('interpolation found no rational solution')
    phis, psi = candidate
    solution = reduce_fraction(phis, psi)
    if not system.satisfied_by(solution):
        raise InconsistentSystemError('interpolated solution does not satisfy the system',
                                      {'df': df_bound, 'dg': dg_bound})
    logger.debug('exact solution with df=%d, dg=%d from %d points', solution.df, solution.dg, count)
    return solution
