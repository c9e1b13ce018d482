"""
Exception hierarchy for fplab.
"""

from typing import Optional


class FplabError(Exception):
    """Base class for all errors raised by the toolkit."""


class ValidationError(FplabError, ValueError):
    """Malformed or inconsistent input."""


class SizeLimitError(FplabError):
    """A configured budget was exceeded."""

    def __init__(self, budget: str, limit: float, requested: Optional[float] = None, hint: str = ""):
        """
        Initialize size-limit error.

        Args:
            budget: Budget key that was exceeded
            limit: Configured value of the budget
            requested: Size that was asked for, if known
            hint: Optional suggestion for a cheaper path
        """
        self.budget = budget
        self.limit = limit
        self.requested = requested
        message = f"budget '{budget}' exceeded (limit {limit}"
        if requested is not None:
            message += f", requested {requested}"
        message += ")"
        if hint:
            message += f"; {hint}"
        super().__init__(message)


class InconsistencyError(FplabError):
    """An accounting identity did not hold."""


class NumericalError(FplabError):
    """A floating-point check exceeded its tolerance."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (max residual {residual:.3e})")
