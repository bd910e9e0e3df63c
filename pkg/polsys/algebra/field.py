"""Finite fields F_q, q = p^k.

A :class:`FieldSpec` names a field; its elements are 0-d galois ``FieldArray``
instances of the class returned by :attr:`FieldSpec.GF`. Elements are written
as integers in ``[0, q)`` whose base-p digits are the ascending coefficient
vector of the element.
"""

import functools
import re
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import galois
import numpy as np

from polsys import default_settings
from polsys.errors import FieldArithmeticError, FieldMismatchError, UsageError


FIELD_REGEX = re.compile(r'^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?(?:;\s*([\d\s,]*))?\)\s*$')

FIELD_OPS = ('add', 'sub', 'mul', 'div')

ElementLike = Union[int, Sequence[int]]


@functools.lru_cache(maxsize=None)
def _galois_field(characteristic, degree, modulus):
    if degree == 1:
        return galois.GF(characteristic)
    irreducible = galois.Poly(list(modulus), field=galois.GF(characteristic), order='asc')
    return galois.GF(characteristic ** degree, irreducible_poly=irreducible)


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p^k.

    For ``k > 1`` the modulus is the ascending coefficient list of a monic
    irreducible polynomial of degree k over F_p. When it is omitted the
    configured default modulus is used, else the galois default.
    """

    characteristic: int
    degree: int = 1
    modulus: Tuple[int, ...] = ()

    def __post_init__(self):
        p, k = self.characteristic, self.degree
        if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
            raise UsageError('field characteristic must be prime', {'p': p})
        if k < 1:
            raise UsageError('extension degree must be at least 1', {'k': k})

        modulus = tuple(int(c) for c in self.modulus)
        if k == 1:
            if modulus and modulus != (0, 1):
                raise UsageError('prime fields take no modulus', {'modulus': modulus})
            modulus = ()
        elif not modulus:
            modulus = default_modulus(p, k)
        else:
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise UsageError('modulus must be monic of degree %d' % k, {'modulus': modulus})
            if any(c < 0 or c >= p for c in modulus):
                raise UsageError('modulus coefficients must be reduced mod %d' % p, {'modulus': modulus})
            if not galois.Poly(list(modulus), field=galois.GF(p), order='asc').is_irreducible():
                raise UsageError('modulus is not irreducible over GF(%d)' % p, {'modulus': modulus})
        object.__setattr__(self, 'modulus', modulus)

    @classmethod
    def parse(cls, text):
        """Parse ``GF(p)``, ``GF(p^k)`` or ``GF(p^k; m0,m1,...,mk)``."""
        match = FIELD_REGEX.match(text or '')
        if not match:
            raise UsageError('invalid field spec %r' % (text,))
        p = int(match.group(1))
        k = int(match.group(2) or 1)
        modulus = ()
        if match.group(3) and match.group(3).strip():
            try:
                modulus = tuple(int(c) for c in match.group(3).split(','))
            except ValueError:
                raise UsageError('invalid modulus in field spec %r' % (text,))
        return cls(p, k, modulus)

    @classmethod
    def from_galois(cls, field):
        if field.degree == 1:
            return cls(int(field.characteristic))
        modulus = tuple(int(c) for c in field.irreducible_poly.coeffs[::-1])
        return cls(int(field.characteristic), int(field.degree), modulus)

    @property
    def order(self):
        return self.characteristic ** self.degree

    @property
    def GF(self):
        """The galois FieldArray class of this field."""
        return _galois_field(self.characteristic, self.degree, self.modulus)

    def element(self, value: ElementLike):
        """Element from its integer form or from its ascending coefficient vector."""
        if isinstance(value, (int, np.integer)):
            number = int(value)
        else:
            coeffs = [int(c) for c in value]
            if len(coeffs) > self.degree or any(c < 0 or c >= self.characteristic for c in coeffs):
                raise UsageError('invalid coefficient vector for %s' % self, {'coeffs': coeffs})
            number = sum(c * self.characteristic ** i for i, c in enumerate(coeffs))
        if number < 0 or number >= self.order:
            raise UsageError('element %d out of range for %s' % (number, self))
        return self.GF(number)

    def elements(self):
        return self.GF.elements

    def zero(self):
        return self.GF(0)

    def one(self):
        return self.GF(1)

    def random(self, shape=(), rng=None, nonzero=False):
        return self.GF.Random(shape, low=1 if nonzero else 0, seed=rng)

    def owns(self, value):
        return type(value) is self.GF

    def __str__(self):
        if self.degree == 1:
            return 'GF(%d)' % self.characteristic
        return 'GF(%d^%d; %s)' % (self.characteristic, self.degree, ','.join(str(c) for c in self.modulus))


def default_modulus(characteristic, degree):
    modulus = default_settings.DEFAULT_MODULI.get((characteristic, degree))
    if modulus:
        return tuple(modulus)
    irreducible = galois.GF(characteristic ** degree).irreducible_poly
    return tuple(int(c) for c in irreducible.coeffs[::-1])


def element_coeffs(a, spec: FieldSpec):
    """Ascending coefficient vector of ``a``, length k."""
    number = int(a)
    coeffs = []
    for _ in range(spec.degree):
        number, digit = divmod(number, spec.characteristic)
        coeffs.append(digit)
    return coeffs


def check_same_field(*values):
    fields = {type(v) for v in values}
    if len(fields) > 1:
        raise FieldMismatchError('operands belong to different fields',
                                 {'fields': sorted(getattr(f, 'name', str(f)) for f in fields)})
    field = fields.pop()
    if not issubclass(field, galois.FieldArray):
        raise FieldMismatchError('operand is not a field element', {'type': field.__name__})
    return field


def field_arith(a, b, op):
    """Exact arithmetic ``a op b`` for op in add, sub, mul, div."""
    check_same_field(a, b)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        if b == 0:
            raise FieldArithmeticError('division by zero')
        return a / b
    raise UsageError('unknown field operation %r' % (op,), {'ops': FIELD_OPS})


def field_neg(a):
    return -a


def field_inv(a):
    if a == 0:
        raise FieldArithmeticError('zero has no inverse')
    return np.reciprocal(a)


def field_pow(a, exponent):
    if exponent < 0:
        return field_inv(a) ** -exponent
    return a ** exponent
