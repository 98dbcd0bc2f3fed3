"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input: shapes, schemas, violated preconditions."""


class NotACocycleError(InputError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DomainError(InputError):
    """Argument lies outside the mathematical domain of the operation."""


class UnsupportedCaseError(InputError):
    """Requested case of a formula that is not implemented."""


class InvariantBreach(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
