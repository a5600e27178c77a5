"""Exception types shared across the package."""


class EmptyInputError(ValueError):
    """An operation that needs at least one letter was given an empty word."""


class ParseError(ValueError):
    """Text could not be parsed as a word or a pattern."""


class SizeMismatchError(ValueError):
    """Two inputs that must have the same size do not."""


class NotCompatibleError(ValueError):
    """A permutation cannot be decoded against the given multiset."""


class UnknownNameError(ValueError):
    """Unrecognized statistic, pattern-sum, or check name."""


class ShapeMismatchError(ValueError):
    """A tableau pair does not share a common shape."""


class NotStandardError(ValueError):
    """A tableau filling is not standard."""


class InvalidTripleError(ValueError):
    """A top/bottom/shuffle triple cannot be recomposed into a permutation."""


class BoundTooLargeError(ValueError):
    """An exhaustive domain would exceed the configured instance cap."""


class InternalInvariantError(RuntimeError):
    """A property that must hold unconditionally was observed to fail."""
