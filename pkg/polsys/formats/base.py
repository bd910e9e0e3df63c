"""Line oriented text files.

Each line starts with a keyword; ``#`` starts a comment and blank lines are
skipped. Subclasses declare the keywords they accept as ``parse_<keyword>``
methods and any other keyword is rejected with its line number.
"""

import re

from polsys.algebra.field import FieldSpec
from polsys.algebra.poly import format_poly, parse_poly
from polsys.errors import InstanceFormatError, UsageError
from polsys.system.model import ReducedRationalSolution
from . import FormatRegistry


INT_LIST_REGEX = re.compile(r'^\s*\d+(\s*,\s*\d+)*\s*$')


class ParseState:
    """Values collected while reading one file."""

    def __init__(self):
        self.spec = None
        self.dims = None
        self.solution_f = {}
        self.solution_g = None

    def require_header(self):
        if self.spec is None or self.dims is None:
            raise UsageError('FIELD and DIMS must come first')

    def check_index(self, index, bound, what):
        if index < 0 or index >= bound:
            raise UsageError('%s index %d out of range 0..%d' % (what, index, bound - 1))

    def solution(self):
        if self.solution_g is None and not self.solution_f:
            return None
        n = self.dims[1]
        if self.solution_g is None or sorted(self.solution_f) != list(range(n)):
            raise UsageError('SOLUTION block needs G and every F 0..%d' % (n - 1))
        return ReducedRationalSolution(tuple(self.solution_f[i] for i in range(n)), self.solution_g)


class BaseFormat(metaclass=FormatRegistry):

    FILE_EXTENSION = None

    def create_state(self):
        return ParseState()

    def parse(self, text):
        state = self.create_state()
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            keyword, _, rest = line.partition(' ')
            handler = getattr(self, 'parse_%s' % keyword.lower(), None)
            if not keyword.isupper() or handler is None:
                raise InstanceFormatError('unknown line %r' % keyword, line_number, raw)
            try:
                handler(state, rest.strip())
            except InstanceFormatError:
                raise
            except (UsageError, ValueError) as error:
                raise InstanceFormatError(getattr(error, 'message', str(error)), line_number, raw)
        try:
            return self.build(state)
        except InstanceFormatError:
            raise
        except UsageError as error:
            raise InstanceFormatError(error.message)

    def read(self, path):
        with open(path, 'r', encoding='utf-8') as f:
            return self.parse(f.read())

    def write(self, path, document):
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.format(document))

    def build(self, state):
        raise NotImplementedError

    def format(self, document):
        raise NotImplementedError

    def parse_field(self, state, rest):
        if state.spec is not None:
            raise UsageError('FIELD given twice')
        state.spec = FieldSpec.parse(rest)

    def parse_dims(self, state, rest):
        if state.spec is None:
            raise UsageError('DIMS before FIELD')
        if state.dims is not None:
            raise UsageError('DIMS given twice')
        parts = rest.split()
        if len(parts) != 2:
            raise UsageError('DIMS takes m and n')
        m, n = int(parts[0]), int(parts[1])
        if not m >= n >= 1:
            raise UsageError('need m >= n >= 1')
        state.dims = (m, n)

    def parse_solution(self, state, rest):
        state.require_header()
        head, coeffs = split_colon(rest)
        parts = head.split()
        if parts == ['G']:
            if state.solution_g is not None:
                raise UsageError('SOLUTION G given twice')
            state.solution_g = parse_poly(check_ints(coeffs), state.spec)
        elif len(parts) == 2 and parts[0] == 'F':
            i = int(parts[1])
            state.check_index(i, state.dims[1], 'F')
            if i in state.solution_f:
                raise UsageError('SOLUTION F %d given twice' % i)
            state.solution_f[i] = parse_poly(check_ints(coeffs), state.spec)
        else:
            raise UsageError('SOLUTION expects F i or G')

    def format_header(self, spec, m, n):
        return ['FIELD %s' % spec, 'DIMS %d %d' % (m, n)]

    def format_solution(self, solution):
        if solution is None:
            return []
        lines = ['SOLUTION F %d : %s' % (i, format_poly(f)) for i, f in enumerate(solution.f)]
        lines.append('SOLUTION G : %s' % format_poly(solution.g))
        return lines


def split_colon(rest):
    head, colon, tail = rest.partition(':')
    if not colon:
        raise UsageError('missing ":"')
    return head.strip(), tail.strip()


def check_ints(text):
    if not INT_LIST_REGEX.match(text):
        raise UsageError('expected comma separated integers, got %r' % (text,))
    return text


def parse_ints(text):
    return [int(c) for c in check_ints(text).split(',')]


def format_ints(values):
    return ','.join(str(int(v)) for v in values)
