"""Exception types shared across the package.

The CLI maps each class to a fixed exit code.
"""


class KronSNPError(Exception):
    """Base class."""

    exit_code = 1


class InvalidInputError(KronSNPError, ValueError):
    exit_code = 2


class SizeMismatchError(KronSNPError, ValueError):
    exit_code = 3


class PreconditionError(KronSNPError, ValueError):
    exit_code = 3


class BudgetExceededError(KronSNPError, RuntimeError):
    exit_code = 4
