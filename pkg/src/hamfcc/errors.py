"""Exception types shared by every module."""


class FccError(Exception):
    pass


class DimensionError(FccError, ValueError):
    """Operands of incompatible length."""


class CapacityError(FccError, ValueError):
    """Requested size exceeds what is enumerable at desk scale."""


class DomainError(FccError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class ConsistencyError(FccError, RuntimeError):
    """Two independent computations disagree, or an exact division left a remainder."""
