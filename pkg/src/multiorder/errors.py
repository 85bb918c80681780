"""Exception types shared across the package."""


class NonGenericChiError(ValueError):
    """A character vector fails the genericity test where genericity is required."""


class BudgetExceededError(RuntimeError):
    """A search or verification run crossed its configured work budget."""


class LiteralError(ValueError):
    """A textual literal (rational, partition, multipartition) failed to parse.

    Carries the offset of the offending character when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
