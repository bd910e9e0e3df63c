from dataclasses import dataclass
from typing import Optional

from polsys.algebra.poly import format_poly, parse_poly
from polsys.errors import UsageError
from polsys.system.model import PolySystem, ReducedRationalSolution
from .base import BaseFormat, ParseState, check_ints, split_colon


@dataclass(frozen=True)
class InstanceDocument:
    system: PolySystem
    solution: Optional[ReducedRationalSolution] = None


class InstanceState(ParseState):

    def __init__(self):
        super().__init__()
        self.A = {}
        self.b = {}


class InstanceFormat(BaseFormat):
    """``.polsys`` files: FIELD, DIMS, one ``A i j`` and ``B i`` line per entry, optional SOLUTION."""

    FILE_EXTENSION = 'polsys'

    def create_state(self):
        return InstanceState()

    def parse_a(self, state, rest):
        state.require_header()
        head, coeffs = split_colon(rest)
        parts = head.split()
        if len(parts) != 2:
            raise UsageError('A expects row and column indices')
        i, j = int(parts[0]), int(parts[1])
        state.check_index(i, state.dims[0], 'row')
        state.check_index(j, state.dims[1], 'column')
        if (i, j) in state.A:
            raise UsageError('A %d %d given twice' % (i, j))
        state.A[(i, j)] = parse_poly(check_ints(coeffs), state.spec)

    def parse_b(self, state, rest):
        state.require_header()
        head, coeffs = split_colon(rest)
        i = int(head)
        state.check_index(i, state.dims[0], 'row')
        if i in state.b:
            raise UsageError('B %d given twice' % i)
        state.b[i] = parse_poly(check_ints(coeffs), state.spec)

    def build(self, state):
        state.require_header()
        m, n = state.dims
        missing = [(i, j) for i in range(m) for j in range(n) if (i, j) not in state.A]
        if missing:
            raise UsageError('missing A entries %s' % ', '.join('%d %d' % entry for entry in missing))
        if len(state.b) != m:
            raise UsageError('missing B entries')
        A = tuple(tuple(state.A[(i, j)] for j in range(n)) for i in range(m))
        system = PolySystem(state.spec, A, tuple(state.b[i] for i in range(m)))
        return InstanceDocument(system, state.solution())

    def format(self, document):
        system = document.system
        lines = self.format_header(system.spec, system.m, system.n)
        for i, row in enumerate(system.A):
            for j, entry in enumerate(row):
                lines.append('A %d %d : %s' % (i, j, format_poly(entry)))
        for i, entry in enumerate(system.b):
            lines.append('B %d : %s' % (i, format_poly(entry)))
        lines.extend(self.format_solution(document.solution))
        return '\n'.join(lines) + '\n'
