class KillingLieError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(KillingLieError, ValueError):
    """An argument lies outside the supported range or has the wrong shape."""


class DomainError(KillingLieError, ValueError):
    """An argument is well formed but not in the domain of the operation."""


class ResourceError(KillingLieError, RuntimeError):
    """A computation exceeded a configured size cap."""


class ConsistencyError(KillingLieError, AssertionError):
    """An internal cross-check failed. This indicates a bug, not bad input."""
