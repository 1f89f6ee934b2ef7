"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: usage problems exit 2, internal
consistency failures exit 3 and capacity limits exit 4.
"""


class CharVarError(Exception):
    """Base class for all errors raised by the package."""


class StructureError(CharVarError, ValueError):
    """Operands live over different variable lists or series orders."""


class DomainError(CharVarError, ValueError):
    """An argument lies outside the domain of an operation."""


class DivisibilityError(CharVarError, ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ConsistencyError(CharVarError, AssertionError):
    """A result violated a property that the underlying theorem guarantees.

    Seeing one of these means either a bug or an invalid application of a
    formula; it is never an expected outcome.
    """


class CapacityError(CharVarError, RuntimeError):
    """A brute-force path was asked for a size beyond its cap."""
