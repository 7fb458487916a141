"""Shared exception types for resource guards and domain checks."""


class CapExceeded(ValueError):
    """An input is larger than the configured resource guard allows."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of the operation."""
