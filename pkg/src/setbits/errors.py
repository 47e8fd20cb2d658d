"""Exception hierarchy shared by the word utilities and the set types."""


class DomainError(ValueError):
    """An argument lies outside the domain of a word-level operation."""


class BitIndexError(IndexError):
    """A bit index does not address a bit of the word."""


class SetError(ValueError):
    """Base class for set construction and set operation failures."""


class UniverseSizeError(SetError):
    pass


class ElementRangeError(SetError):
    pass


class CodeRangeError(SetError):
    pass


class UniverseMismatchError(SetError):
    pass


class ConversionError(SetError):
    pass
