"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ParseError -> 2, the precondition
family -> 3.
"""


class PcnkitError(Exception):
    """Base class for library errors."""


class FieldValidationError(PcnkitError, ValueError):
    """Bad field parameters or a malformed element encoding."""


class FieldDivisionByZero(PcnkitError, ZeroDivisionError):
    def __init__(self, msg="division by zero in finite field"):
        super().__init__(msg)


class ArgumentError(PcnkitError, ValueError):
    """An argument outside the documented domain of an operation."""


class PreconditionError(PcnkitError, ValueError):
    """The inputs are well formed but violate a mathematical precondition."""


class UnsupportedOperation(PcnkitError, NotImplementedError):
    """Operation not available for this characteristic or representation."""


class BudgetExceeded(PcnkitError, RuntimeError):
    def __init__(self, what, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"{what}: estimated {estimate:,} operations exceeds budget {budget:,}"
        )


class ClosedFormMismatch(PcnkitError, AssertionError):
    """A closed-form result disagreed with exhaustive enumeration."""


class ParseError(PcnkitError, ValueError):
    def __init__(self, msg, line=1, col=1, token=None):
        self.line = line
        self.col = col
        self.token = token
        where = f"line {line}, column {col}"
        if token is not None:
            where += f" (token {token!r})"
        super().__init__(f"{msg} at {where}")
