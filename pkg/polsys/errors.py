"""Errors raised by polsys.

Decoding failures are not errors, decoders report them through
:class:`polsys.decoders.DecodeOutcome`.
"""


class PolsysError(Exception):
    """Base error, carries a message and an optional payload dict."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.message = message
        self.payload = payload or {}

    def __str__(self):
        if self.payload:
            return '{} {}'.format(self.message, self.payload)
        return self.message


class UsageError(PolsysError, ValueError):
    pass


class FieldMismatchError(UsageError):
    pass


class DuplicatePointError(UsageError):
    pass


class ShapeMismatchError(UsageError):
    pass


class FieldArithmeticError(PolsysError, ZeroDivisionError):
    pass


class RetryBudgetExceeded(PolsysError):
    pass


class InsufficientPointsError(PolsysError):

    def __init__(self, message, available, requested):
        super().__init__(message, {'available': available, 'requested': requested})
        self.available = available
        self.requested = requested


class InconsistentSystemError(PolsysError):
    pass


class RankDeficientSystemError(PolsysError):
    pass


class KernelContractError(PolsysError):
    pass


class InstanceFormatError(UsageError):

    def __init__(self, message, line_number=None, line=None):
        super().__init__(message, {'line': line_number} if line_number else None)
        self.line_number = line_number
        self.line = line

    def __str__(self):
        if self.line_number:
            return 'line {}: {}'.format(self.line_number, self.message)
        return self.message
