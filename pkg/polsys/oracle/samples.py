"""Black box outputs and the harness view of them."""

from dataclasses import dataclass
from typing import FrozenSet, NamedTuple

import numpy as np

from polsys.errors import UsageError


class BlackBoxOutput(NamedTuple):
    """What the black box returns at one point, the only decoder input."""

    point: object
    A: object
    b: object


@dataclass(frozen=True)
class EvaluationSample:
    """One black box output with its ground truth corruption flag."""

    index: int
    output: BlackBoxOutput
    is_corrupted: bool = False

    @property
    def point(self):
        return self.output.point


@dataclass(frozen=True)
class ErrorPlan:
    """Error positions ``E`` among ``L`` points (0-based) and the corruption seed."""

    L: int
    errors: FrozenSet[int]
    seed: object = None

    def __post_init__(self):
        errors = frozenset(int(l) for l in self.errors)
        if any(l < 0 or l >= self.L for l in errors):
            raise UsageError('error positions must lie in 0..L-1', {'L': self.L, 'errors': sorted(errors)})
        object.__setattr__(self, 'errors', errors)

    @property
    def e(self):
        return len(self.errors)

    @classmethod
    def random(cls, L, e, seed=None):
        if not 0 <= e <= L:
            raise UsageError('cannot place %d errors among %d points' % (e, L))
        rng = np.random.default_rng(seed)
        errors = frozenset(int(l) for l in rng.choice(L, size=e, replace=False))
        return cls(L, errors, rng)


def black_box_outputs(samples):
    return [sample.output for sample in samples]


def corrupted_positions(samples):
    return frozenset(sample.index for sample in samples if sample.is_corrupted)
