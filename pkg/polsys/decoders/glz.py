"""Probabilistic decoder for polynomial systems with erroneous evaluations.

Each black box output ``(α_l, A_l, b_l)`` is first solved locally, giving a
vector ``y_l`` that equals ``f(α_l) / g(α_l)`` at every correct point. The
vectors then feed the key equations ``φ_i(α_l) = y_li ψ(α_l)``. When the key
matrix has rank ``n(df+e+1)+dg+e`` its kernel is spanned by ``(Λf, Λg)``, Λ
the error locator, and dividing by ``gcd(φ, ψ)`` recovers ``f / g``. The
failure probability is at most ``(dg+e)/q`` under uniformly random errors.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from polsys import default_settings
from polsys.algebra.matrix import rank, right_kernel_basis
from polsys.algebra.poly import is_zero
from polsys.decoders.keyeq import build_key_matrix, reduce_with_locator, verified
from polsys.decoders.outcome import DecodeOutcome, FailReason
from polsys.errors import InconsistentSystemError, KernelContractError, ShapeMismatchError, UsageError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalKernelResult:
    """Per point vectors ``y_l`` (shape L x n), with the points that were randomized."""

    values: object
    randomized: Tuple[bool, ...]

    @property
    def randomized_count(self):
        return sum(self.randomized)


def local_kernels(outputs: Sequence, rng=None, strict=False) -> LocalKernelResult:
    """Solve ``A_l γ - σ b_l = 0`` at every point and set ``y_l = γ / σ``.

    Points where ``σ = 0`` or where ``[A_l | -b_l]`` has full column rank get
    uniformly random ``y_l``; with ``strict`` they raise
    :class:`InconsistentSystemError` instead.
    """
    if not outputs:
        raise UsageError('no black box outputs')
    field = type(outputs[0].point)
    m, n = outputs[0].A.shape
    rng = np.random.default_rng(rng)
    values = field.Zeros((len(outputs), n))
    randomized = []
    for l, output in enumerate(outputs):
        if output.A.shape != (m, n) or output.b.shape != (m,):
            raise ShapeMismatchError('black box output %d has inconsistent dimensions' % l)
        C = field.Zeros((m, n + 1))
        C[:, :n] = output.A
        C[:, n] = -output.b
        basis = right_kernel_basis(C)
        if len(basis) > 1:
            raise KernelContractError('local kernel at point %d has dimension %d' % (l, len(basis)),
                                      {'point': int(output.point)})
        if basis and basis[0][n] != 0:
            values[l] = basis[0][:n] / basis[0][n]
            randomized.append(False)
            continue
        if strict:
            raise InconsistentSystemError('evaluated system at %d has no solution' % int(output.point))
        values[l] = field.Random(n, seed=rng)
        randomized.append(True)
    return LocalKernelResult(values, tuple(randomized))


def decode(outputs: Sequence, n, df, dg, e, system=None, verify=None, rng=None) -> DecodeOutcome:
    """Recover ``f / g`` from black box outputs with at most ``e`` errors.

    :param outputs: :class:`polsys.oracle.BlackBoxOutput` triples
    :param n: number of unknowns
    :param df: numerator degree bound
    :param dg: exact denominator degree
    :param e: error bound
    :param system: optional system for the final ``A f = g b`` check
    :param verify: run the final checks, defaults to ``VERIFY_SOLUTIONS``
    :param rng: randomness for unusable local kernels
    """
    outputs = list(outputs)
    if outputs and outputs[0].A.shape[1] != n:
        raise ShapeMismatchError('outputs have %d unknowns, decoder expects %d' % (outputs[0].A.shape[1], n))
    verify = default_settings.VERIFY_SOLUTIONS if verify is None else verify

    kernels = local_kernels(outputs, rng=rng)
    if kernels.randomized_count:
        logger.debug('%d local kernels randomized', kernels.randomized_count)
    points = type(outputs[0].point)([int(output.point) for output in outputs])
    key = build_key_matrix(kernels.values, points, n, df, dg, e)

    basis = right_kernel_basis(key.matrix)
    if key.unknowns - len(basis) != key.rho:
        logger.debug('key matrix rank %d, expected %d', key.unknowns - len(basis), key.rho)
        return DecodeOutcome.fail(FailReason.RANK_DEFICIENT)

    phis, psi = key.split(basis[0])
    if is_zero(psi):
        return DecodeOutcome.fail(FailReason.ZERO_SOLUTION)

    solution, locator = reduce_with_locator(phis, psi)
    if verify and not verified(solution, df, dg, exact_dg=True, system=system):
        logger.debug('decoded solution failed verification')
        return DecodeOutcome.fail(FailReason.VERIFY_FAILED)
    return DecodeOutcome.success(solution, locator)


def kernel_dim_one_witness(solution, points, errors, df, dg, rng=None) -> bool:
    """Build a draw of the erroneous ``y_l`` whose key matrix has a one dimensional kernel.

    The errors are split into n groups of at most ``L - (df+dg+e+1)``
    positions. Coordinate i of an erroneous point is correct unless the point
    falls in group i, where it is shifted by a random nonzero element.

    :param solution: the true reduced solution
    :param points: 1-d FieldArray, g nonzero on every point
    :param errors: 0-based error positions
    :return: whether the key matrix reaches rank ``n(df+e+1)+dg+e``
    """
    errors = sorted(int(l) for l in errors)
    n, e, L = solution.n, len(errors), points.size
    capacity = L - (df + dg + e + 1)
    if e and (capacity < 1 or e > n * capacity):
        raise UsageError('errors cannot be split into %d groups of at most %d' % (n, max(capacity, 0)),
                         {'e': e, 'L': L})
    f_values, g_values = solution.evaluate(points)
    if np.count_nonzero(g_values) != L:
        raise UsageError('the denominator vanishes on an evaluation point')

    rng = np.random.default_rng(rng)
    field = type(points)
    y = f_values / g_values[:, np.newaxis]
    for position, l in enumerate(errors):
        i = position // capacity
        y[l, i] = y[l, i] + field.Random(low=1, seed=rng)

    key = build_key_matrix(y, points, n, df, dg, e)
    return rank(key.matrix) == key.rho
