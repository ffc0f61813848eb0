"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments violate a documented precondition."""


class ResourceLimitError(RuntimeError):
    """The computation would exceed a configured resource cap."""
