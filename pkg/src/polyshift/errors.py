"""Exceptions shared across the package."""


class IdealParseError(ValueError):
    """Malformed ideal / monomial input.  Carries the character position."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class NoLinearQuotientsError(ValueError):
    """No admissible linear quotients order was found for the ideal."""


class ResourceBudgetError(RuntimeError):
    """An enumeration exceeded its configured budget.

    Raised instead of silently truncating; harness code converts this into
    a 'resource-exhausted' verdict.
    """
