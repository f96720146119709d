"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error this package raises deliberately."""


class ZeroInput(ToolkitError):
    """An operation that needs n >= 1 was given zero."""


class BadParameter(ToolkitError):
    """A parameter lies outside the operation's documented domain."""


class LimitTooLarge(ToolkitError):
    """A sieve or search limit exceeds the configured memory budget."""


class DegenerateSubtraction(ToolkitError):
    """A natural-number subtraction would truncate where the construction forbids it."""


class UnsupportedFormat(ToolkitError):
    """The requested serialization format is not defined for this object."""
