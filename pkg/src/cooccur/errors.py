"""Exception types shared across the package.

Two failure families are distinguished deliberately: invalid input (the
caller asked for something outside an operation's domain) and refusals
(the request was valid but exceeds a configured budget or cap).  The CLI
maps them to exit codes 2 and 3, the HTTP service to 4xx statuses.
"""


class InvalidInputError(ValueError):
    """An argument violates an operation's domain (bad marginals, out-of-range
    incidence value, unknown feature label, and so on)."""


class MatrixParseError(InvalidInputError):
    """A matrix file failed validation.

    ``row`` and ``column`` carry the offending coordinates (sample and
    feature labels when known, otherwise 1-based positions) so callers can
    point at the exact cell.
    """

    def __init__(self, message: str, row: str | None = None, column: str | None = None):
        super().__init__(message)
        self.row = row
        self.column = column


class BudgetError(RuntimeError):
    """Base class for refusals: the computation would exceed a configured cap.

    A refusal is not a wrong answer and not a partial answer; the operation
    declines to start (or to continue) and names the cap it would blow.
    """

    def __init__(self, message: str, cap=None):
        super().__init__(message)
        self.cap = cap


class EnumerationCapError(BudgetError):
    """An exhaustive enumeration (configurations, concepts, matrix cells)
    would exceed its size cap."""


class TimeBudgetError(BudgetError):
    """A computation exceeded its wall-clock budget."""
