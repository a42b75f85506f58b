"""Exception types raised across the package."""


class FQHError(ValueError):
    """Base class for every error raised by fqhash."""


class InvalidBasisState(FQHError):
    pass


class ResourceLimit(FQHError):
    pass


class DimensionMismatch(FQHError):
    pass


class IndexClash(FQHError):
    pass


class InvalidShots(FQHError):
    pass


class DimensionUnsupported(FQHError):
    pass


class EmptyMessage(FQHError):
    pass


class UnpaddedMessage(FQHError):
    pass


class InputSyntax(FQHError):
    pass


class DimensionExceedsRegister(FQHError):
    pass


class DirtyAncilla(FQHError):
    pass


class ConditionInapplicable(FQHError):
    """A sensitivity condition cannot be built from the given message."""

    def __init__(self, condition, reason):
        self.condition = condition
        self.reason = reason
        super().__init__(f"condition {condition} inapplicable: {reason}")
