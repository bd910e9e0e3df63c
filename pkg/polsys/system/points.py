import logging
from typing import FrozenSet, Optional

import numpy as np

from polsys.errors import InsufficientPointsError, UsageError


logger = logging.getLogger(__name__)


def usable_points(system, g=None) -> FrozenSet[int]:
    """Integer forms of every α with ``g(α) != 0`` and ``rank A(α) = n``."""
    field = system.field
    elements = field.elements
    A, _ = system.evaluate(elements)
    allowed = np.ones(elements.size, dtype=bool)
    if g is not None:
        allowed &= np.asarray(g(elements) != 0)
    usable = set()
    for index in np.flatnonzero(allowed):
        if np.linalg.matrix_rank(A[index]) == system.n:
            usable.add(int(elements[index]))
    return frozenset(usable)


def choose_evaluation_points(system, g, count: int, seed=None, usable: Optional[FrozenSet[int]] = None):
    """Draw ``count`` distinct admissible points by a seeded shuffle of the field.

    :param system: the :class:`PolySystem`
    :param g: solution denominator, None when unknown
    :param count: number of points L
    :param seed: int, seed sequence or numpy Generator
    :param usable: precomputed :func:`usable_points` of ``(system, g)``
    :return: 1-d FieldArray of points
    """
    if count < 1:
        raise UsageError('at least one evaluation point is needed', {'L': count})
    if usable is None:
        usable = usable_points(system, g)
    if len(usable) < count:
        raise InsufficientPointsError(
            '%s has only %d usable evaluation points, %d requested' % (system.spec, len(usable), count),
            available=len(usable), requested=count)

    rng = np.random.default_rng(seed)
    order = rng.permutation(system.spec.order)
    chosen = [int(value) for value in order if int(value) in usable][:count]
    return system.field(chosen)
