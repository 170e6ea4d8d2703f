"""Exception types shared across the package."""


class BimatchError(Exception):
    """Base class for all errors raised by this package."""


class LimitError(BimatchError):
    """A documented engine or search limit would be exceeded.

    Limits are hard errors, never silent truncation: an invariant that
    cannot be computed exactly is not reported at all.
    """


class GraphFormatError(BimatchError):
    """Malformed graph text input."""
