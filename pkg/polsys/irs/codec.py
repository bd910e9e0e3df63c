"""Interleaved Reed-Solomon codes decoded as the system ``I_r y = b`` with g = 1.

A codeword stacks r Reed-Solomon codewords row-wise; an error corrupts a
whole column. Column j is the black box output ``(α_j, I_r, y_{.j})`` so the
probabilistic decoder recovers the r messages beyond the unique decoding
radius with probability at least ``1 - e/q``.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, NamedTuple, Tuple

import galois
import numpy as np

from polsys.algebra.field import FieldSpec
from polsys.algebra.matrix import poly_vector_eval
from polsys.algebra.poly import degree
from polsys.decoders.bounds import e_max_collab, p_bms, p_glz, p_spr
from polsys.decoders.glz import decode
from polsys.decoders.outcome import DecodeOutcome
from polsys.errors import ShapeMismatchError, UsageError
from polsys.oracle.samples import BlackBoxOutput
from polsys.system.generate import random_poly


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IRSParams:
    """Length ``n_c``, dimension ``k`` and interleaving degree ``r`` over ``spec``."""

    spec: FieldSpec
    n_c: int
    k: int
    r: int
    points: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.r < 1:
            raise UsageError('interleaving degree must be at least 1', {'r': self.r})
        if not 1 <= self.k <= self.n_c <= self.spec.order:
            raise UsageError('need 1 <= k <= n_c <= q', {'k': self.k, 'n_c': self.n_c, 'q': self.spec.order})
        points = tuple(int(a) for a in self.points) or tuple(range(self.n_c))
        if len(points) != self.n_c:
            raise ShapeMismatchError('%d evaluation points given for length %d' % (len(points), self.n_c))
        if len(set(points)) != self.n_c or any(a < 0 or a >= self.spec.order for a in points):
            raise UsageError('evaluation points must be distinct field elements')
        object.__setattr__(self, 'points', points)

    @property
    def field_points(self):
        return self.spec.GF(list(self.points))

    @property
    def unique_radius(self):
        return (self.n_c - self.k) // 2


@dataclass(frozen=True)
class SPRInstance:
    """Received r x n_c matrix with the error columns and messages kept for the harness."""

    received: object
    params: IRSParams
    errors: FrozenSet[int] = frozenset()
    messages: Tuple[galois.Poly, ...] = ()

    def outputs(self):
        """Columns as black box outputs with identity matrices."""
        identity = self.params.spec.GF.Identity(self.params.r)
        points = self.params.field_points
        return [BlackBoxOutput(points[j], identity, self.received[:, j]) for j in range(self.params.n_c)]


class ReferenceBounds(NamedTuple):
    e_max_collab: int
    p_spr: float
    p_bms: float
    p_glz: float


class SPRTrialResult(NamedTuple):
    trials: int
    successes: int
    failures: int
    wrong: int

    @property
    def success_rate(self):
        return self.successes / self.trials if self.trials else 0.0


def irs_encode(messages, params: IRSParams):
    """Matrix ``(f_i(α_j))`` of shape r x n_c."""
    messages = tuple(messages)
    if len(messages) != params.r:
        raise ShapeMismatchError('%d messages given for interleaving degree %d' % (len(messages), params.r))
    for i, message in enumerate(messages):
        if message.field is not params.spec.GF:
            raise UsageError('message %d is not over %s' % (i, params.spec))
        if degree(message) > params.k - 1:
            raise UsageError('message %d has degree %d, at most %d allowed' % (i, degree(message), params.k - 1))
    return poly_vector_eval(messages, params.field_points).T


def random_messages(params: IRSParams, rng=None):
    rng = np.random.default_rng(rng)
    return tuple(random_poly(params.spec, params.k - 1, rng) for _ in range(params.r))


def random_spr_instance(params: IRSParams, messages, e, rng=None) -> SPRInstance:
    """Encode and corrupt ``e`` random columns.

    Every error column is redrawn until it differs from the codeword column.
    """
    if not 0 <= e <= params.n_c:
        raise UsageError('cannot corrupt %d of %d columns' % (e, params.n_c))
    rng = np.random.default_rng(rng)
    codeword = irs_encode(messages, params)
    received = codeword.copy()
    errors = frozenset(int(j) for j in rng.choice(params.n_c, size=e, replace=False))
    for j in sorted(errors):
        column = params.spec.GF.Random(params.r, seed=rng)
        while np.array_equal(column, codeword[:, j]):
            column = params.spec.GF.Random(params.r, seed=rng)
        received[:, j] = column
    return SPRInstance(received, params, errors, tuple(messages))


def spr_decode(instance: SPRInstance, k, e, rng=None) -> DecodeOutcome:
    """Messages of degree <= k-1 from a received matrix with at most e error columns.

    Delegates to :func:`polsys.decoders.glz.decode` with ``df = k-1`` and ``dg = 0``.
    """
    r = instance.params.r
    return decode(instance.outputs(), r, k - 1, 0, e, rng=rng)


def reference_bounds(params: IRSParams, e, dg=0) -> ReferenceBounds:
    q = params.spec.order
    return ReferenceBounds(
        e_max_collab=e_max_collab(params.n_c, params.k, params.r),
        p_spr=p_spr(q, e),
        p_bms=p_bms(q, params.r),
        p_glz=p_glz(q, dg, e),
    )


def spr_trial_rate(params: IRSParams, e, trials, seed=None) -> SPRTrialResult:
    """Random message and error draws; counts decoder successes and wrong answers."""
    successes = failures = wrong = 0
    for trial in range(trials):
        rng = np.random.default_rng([seed or 0, trial])
        messages = random_messages(params, rng)
        outcome = spr_decode(random_spr_instance(params, messages, e, rng), params.k, e, rng=rng)
        if not outcome:
            failures += 1
        elif outcome.solution.f == tuple(messages):
            successes += 1
        else:
            wrong += 1
    logger.info('irs %s n_c=%d k=%d r=%d e=%d: %d of %d decoded', params.spec, params.n_c, params.k, params.r, e,
                successes, trials)
    return SPRTrialResult(trials, successes, failures, wrong)
