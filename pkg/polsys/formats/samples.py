from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from polsys.algebra.field import FieldSpec
from polsys.errors import UsageError
from polsys.oracle.samples import BlackBoxOutput, EvaluationSample
from polsys.system.model import ReducedRationalSolution
from .base import BaseFormat, ParseState, format_ints, parse_ints, split_colon


@dataclass(frozen=True)
class SamplesDocument:
    """Black box outputs of one instance, with the ground truth when known."""

    spec: FieldSpec
    m: int
    n: int
    samples: Tuple[EvaluationSample, ...]
    solution: Optional[ReducedRationalSolution] = None
    errors: Optional[FrozenSet[int]] = None

    @property
    def outputs(self):
        return [sample.output for sample in self.samples]


class SamplesState(ParseState):

    def __init__(self):
        super().__init__()
        self.samples = {}
        self.errors = None


class SamplesFormat(BaseFormat):
    """``.samples`` files: the instance header then ``SAMPLE l : alpha | A row-major | b`` lines."""

    FILE_EXTENSION = 'samples'

    def create_state(self):
        return SamplesState()

    def parse_sample(self, state, rest):
        state.require_header()
        m, n = state.dims
        head, body = split_colon(rest)
        l = int(head)
        if l in state.samples:
            raise UsageError('SAMPLE %d given twice' % l)
        parts = [part.strip() for part in body.split('|')]
        if len(parts) != 3:
            raise UsageError('SAMPLE expects alpha | A entries | b entries')
        alpha, a_values, b_values = parse_ints(parts[0]), parse_ints(parts[1]), parse_ints(parts[2])
        if len(alpha) != 1 or len(a_values) != m * n or len(b_values) != m:
            raise UsageError('SAMPLE needs 1 point, %d matrix entries and %d right hand side entries' % (m * n, m))
        values = alpha + a_values + b_values
        if any(v >= state.spec.order for v in values):
            raise UsageError('element out of range for %s' % state.spec)
        GF = state.spec.GF
        state.samples[l] = BlackBoxOutput(GF(alpha[0]), GF(a_values).reshape(m, n), GF(b_values))

    def parse_errors(self, state, rest):
        if state.errors is not None:
            raise UsageError('ERRORS given twice')
        _, tail = split_colon(rest)
        state.errors = frozenset(parse_ints(tail)) if tail else frozenset()

    def build(self, state):
        state.require_header()
        m, n = state.dims
        if sorted(state.samples) != list(range(len(state.samples))):
            raise UsageError('SAMPLE indices must be 0..L-1')
        if not state.samples:
            raise UsageError('no SAMPLE lines')
        points = [int(output.point) for output in state.samples.values()]
        if len(set(points)) != len(points):
            raise UsageError('sample points must be distinct')
        errors = state.errors
        if errors is not None and any(l not in state.samples for l in errors):
            raise UsageError('ERRORS names a missing sample')
        samples = tuple(EvaluationSample(l, state.samples[l], bool(errors and l in errors))
                        for l in range(len(state.samples)))
        return SamplesDocument(state.spec, m, n, samples, state.solution(), errors)

    def format(self, document):
        lines = self.format_header(document.spec, document.m, document.n)
        lines.extend(self.format_solution(document.solution))
        for sample in document.samples:
            output = sample.output
            lines.append('SAMPLE %d : %d | %s | %s' % (sample.index, int(output.point),
                                                       format_ints(output.A.flatten()), format_ints(output.b)))
        if document.errors is not None:
            lines.append(('ERRORS : %s' % format_ints(sorted(document.errors))).rstrip())
        return '\n'.join(lines) + '\n'
