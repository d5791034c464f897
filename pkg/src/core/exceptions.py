"""Exception hierarchy shared by the library, the CLI and the HTTP app.

Every error carries the process exit code the CLI reports for it: 2 for
usage and parse errors, 1 for domain errors.
"""

from src.conf import constants, messages


class WorkbenchError(Exception):
    """Base class for all workbench errors."""

    exit_code = constants.EXIT_DOMAIN_ERROR

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UsageError(WorkbenchError):
    exit_code = constants.EXIT_USAGE_ERROR


class ParseError(UsageError):
    """
    Syntax error in a workbench script or polynomial expression.

    Attributes:
        line: 1-based line of the offending token, or None.
        column: 1-based column of the offending token, or None.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = messages.text(
                messages.parse_location, line=line, column=column, message=message
            )
        super().__init__(message)


class UndefinedNameError(ParseError):
    pass


class ArityError(ParseError):
    pass


class StructureError(WorkbenchError):
    """Malformed operation table or out-of-range element id."""


class ParameterError(WorkbenchError):
    pass


class BoundExceededError(WorkbenchError):
    pass


class OwnerMismatchError(WorkbenchError):
    pass


class NotAnEquivalenceError(WorkbenchError):
    pass


class NotACongruenceError(WorkbenchError):
    pass


class NotAnIdealError(WorkbenchError):
    pass


class ImproperQuotientError(WorkbenchError):
    pass


class NotPrimeError(WorkbenchError):
    pass


class EmbeddingError(WorkbenchError):
    pass


class WindowModeError(WorkbenchError):
    """Operation needs the full carrier but only a naturals window exists."""
