"""Exception hierarchy.

Input errors map to CLI exit code 2, domain conditions to 1 and budget
exhaustion to 3 (see :mod:`mfcoh.cli`).
"""


class MfcohError(Exception):
    """Base class for every error raised by the package."""


class InputError(MfcohError):
    """Malformed user input (exit code 2)."""


class PolynomialSyntaxError(InputError):
    def __init__(self, message, source="", pos=0):
        self.source = source
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class UnknownVariableError(InputError):
    pass


class RingMismatchError(InputError):
    pass


class OrderMismatchError(InputError):
    pass


class NameCollisionError(InputError):
    pass


class DomainCondition(MfcohError):
    """A mathematically meaningful negative outcome (exit code 1)."""


class NonIsolatedError(DomainCondition):
    pass


class NonFiniteValuesError(DomainCondition):
    pass


class NotRegularSequenceError(DomainCondition):
    pass


class NotOnVarietyError(DomainCondition):
    pass


class PeriodicityNotDetectedError(DomainCondition):
    pass


class BudgetExceededError(MfcohError):
    """The S-pair budget ran out; partial Groebner state is discarded."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"S-pair budget of {limit} exhausted")
