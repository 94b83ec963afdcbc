"""Exception types raised by the package.

Everything derives from :class:`HopfieldError`. Validation failures are also
``ValueError`` subclasses so callers can catch them generically; file parsing
failures derive from :class:`ParseError`.
"""


class HopfieldError(Exception):
    """Base class for all package errors."""


class ValidationError(HopfieldError, ValueError):
    """An argument violated a documented precondition."""


class NonBipolarValue(ValidationError):
    pass


class EmptyPattern(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class EmptyTrainingSet(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class DimensionMismatch(ValidationError):
    pass


class SpecOutOfRange(ValidationError):
    pass


class ParseError(HopfieldError, ValueError):
    """A file could not be decoded."""


class BadMagic(ParseError):
    pass


class MalformedHeader(ParseError):
    pass


class PixelCountMismatch(ParseError):
    pass


class InvalidPixelValue(ParseError):
    pass


class MalformedMemoryFile(ParseError):
    pass
