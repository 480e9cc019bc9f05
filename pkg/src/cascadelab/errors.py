"""Exception types shared across the package."""


class CascadeLabError(Exception):
    """Base class for all cascadelab errors."""


class ParameterError(CascadeLabError, ValueError):
    """A parameter violates its documented range or invariant."""


class InsufficientGroupError(CascadeLabError):
    """Group seeding requested more seeds than the spreading group holds."""


class ConvergenceError(CascadeLabError):
    """Power iteration did not converge within the iteration budget."""

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class ParseError(CascadeLabError):
    """A log row could not be parsed (strict mode)."""

    def __init__(self, message: str, line_no: int):
        super().__init__(message)
        self.line_no = line_no


class InsufficientDataError(CascadeLabError):
    """Too few observations in the fitting window."""


class UnknownMessageError(CascadeLabError, KeyError):
    """A requested message id does not occur in the log."""
