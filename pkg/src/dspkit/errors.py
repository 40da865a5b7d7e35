"""Shared exception types."""


class InvalidInstanceError(ValueError):
    """Structural problem in a class or instance specification."""


class BoundExceededError(RuntimeError):
    """An exhaustive search was requested beyond its configured bound."""
