"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class IdentityViolationError(ArithmeticError):
    """A structural identity that the computation relies on does not hold."""


class InternalError(RuntimeError):
    """An invariant the implementation guarantees was broken; always a bug."""
