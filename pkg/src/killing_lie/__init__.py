"""Root systems, centralizers and Killing fields of constant length."""

from .errors import ConsistencyError, DomainError, KillingLieError, ParameterError, ResourceError

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DomainError",
    "KillingLieError",
    "ParameterError",
    "ResourceError",
]
