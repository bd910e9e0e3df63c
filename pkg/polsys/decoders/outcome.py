import enum
from dataclasses import dataclass
from typing import Optional

import galois

from polsys.system.model import ReducedRationalSolution


class FailReason(enum.Enum):
    RANK_DEFICIENT = 'rank_deficient'
    ZERO_SOLUTION = 'zero_solution'
    VERIFY_FAILED = 'verify_failed'


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a reduced solution with its error locator, or a failure reason."""

    solution: Optional[ReducedRationalSolution] = None
    locator: Optional[galois.Poly] = None
    reason: Optional[FailReason] = None

    @classmethod
    def success(cls, solution, locator):
        return cls(solution=solution, locator=locator)

    @classmethod
    def fail(cls, reason):
        return cls(reason=reason)

    @property
    def ok(self):
        return self.reason is None

    def __bool__(self):
        return self.ok
