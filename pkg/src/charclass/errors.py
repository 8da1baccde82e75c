"""Exception hierarchy. Every error carries a machine-readable ``code``."""


class CharclassError(Exception):
    code = "ERROR"
    exit_code = 1

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class UsageError(CharclassError):
    """Malformed input: bad syntax, mismatched contexts, invalid arguments."""

    code = "USAGE"
    exit_code = 3


class ParseError(UsageError):
    code = "PARSE"


class PreconditionError(CharclassError):
    """A mathematical precondition does not hold (e.g. non-reduced input)."""

    code = "PRECONDITION"
    exit_code = 1


class GenericityError(CharclassError):
    """Randomized method failed to find generic data within its retry budget."""

    code = "GENERICITY"
    exit_code = 1


class BudgetExhausted(CharclassError):
    code = "BUDGET_EXHAUSTED"
    exit_code = 2


class CrossCheckFailure(CharclassError):
    code = "CROSSCHECK_MISMATCH"
    exit_code = 1
