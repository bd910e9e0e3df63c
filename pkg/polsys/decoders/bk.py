"""Deterministic decoder on ``df+dg+2e+t+1`` points.

The key equations ``A_l φ(α_l) - ψ(α_l) b_l = 0`` use the black box outputs
directly. Their minimal degree solution with ψ monic is ``(Λf, Λg)`` for any
error pattern of at most e points.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from polsys import default_settings
from polsys.algebra.matrix import right_kernel_basis, vandermonde
from polsys.decoders.bounds import l_bk
from polsys.decoders.keyeq import KeyEquationMatrix, minimal_solution, reduce_with_locator, verified
from polsys.decoders.outcome import DecodeOutcome, FailReason
from polsys.errors import ShapeMismatchError, UsageError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BKKeyMatrix(KeyEquationMatrix):
    """Key matrix with m rows per evaluation point."""

    m: int = 1


def build_bk_matrix(outputs: Sequence, n, df, dg, e) -> BKKeyMatrix:
    field = type(outputs[0].point)
    m = outputs[0].A.shape[0]
    L = len(outputs)
    points = field([int(output.point) for output in outputs])
    if len({int(a) for a in points}) != L:
        raise UsageError('evaluation points must be distinct')

    shape = KeyEquationMatrix(None, n, L, df, dg, e)
    v_phi = vandermonde(points, shape.phi_width)
    v_psi = vandermonde(points, shape.psi_width)
    matrix = field.Zeros((m * L, shape.unknowns))
    for l, output in enumerate(outputs):
        if output.A.shape != (m, n) or output.b.shape != (m,):
            raise ShapeMismatchError('black box output %d has inconsistent dimensions' % l)
        rows = slice(l * m, (l + 1) * m)
        phi_block = output.A[:, :, np.newaxis] * v_phi[l][np.newaxis, np.newaxis, :]
        matrix[rows, :n * shape.phi_width] = phi_block.reshape(m, n * shape.phi_width)
        matrix[rows, n * shape.phi_width:] = -(output.b[:, np.newaxis] * v_psi[l][np.newaxis, :])
    return BKKeyMatrix(matrix, n, L, df, dg, e, m)


def bk_solve(outputs: Sequence, n, df, dg, e, t=0, system=None, verify=None) -> DecodeOutcome:
    """Minimal degree solution of the key equations, reduced.

    :param t: rank drop allowance, only used in the point count
    """
    outputs = list(outputs)
    required = l_bk(df, dg, e, t)
    if len(outputs) < required:
        raise UsageError('%d points given, the deterministic decoder needs %d' % (len(outputs), required))
    if outputs[0].A.shape[1] != n:
        raise ShapeMismatchError('outputs have %d unknowns, decoder expects %d' % (outputs[0].A.shape[1], n))
    verify = default_settings.VERIFY_SOLUTIONS if verify is None else verify

    key = build_bk_matrix(outputs, n, df, dg, e)
    basis = right_kernel_basis(key.matrix)
    if not basis:
        return DecodeOutcome.fail(FailReason.RANK_DEFICIENT)

    candidate = minimal_solution(key, basis)
    if candidate is None:
        return DecodeOutcome.fail(FailReason.ZERO_SOLUTION)

    solution, locator = reduce_with_locator(*candidate)
    if verify and not verified(solution, df, dg, system=system):
        logger.debug('minimal solution failed verification')
        return DecodeOutcome.fail(FailReason.VERIFY_FAILED)
    return DecodeOutcome.success(solution, locator)
