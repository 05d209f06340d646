"""Exception hierarchy.

Every error raised by the library derives from :class:`CComplexError`.
Descriptor-axiom failures derive from :class:`ValidationError` (also a
``ValueError``); index and precondition failures derive from ``IndexError``
or ``ValueError`` as appropriate so callers can catch them generically.
"""


class CComplexError(Exception):
    pass


class ValidationError(CComplexError, ValueError):
    """A descriptor violates one of the C-complex axioms.

    ``line`` and ``column`` are filled in when the data came from text.
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{loc}: {message}"
        super().__init__(message)


class DuplicateLabel(ValidationError):
    pass


class SelfClasp(ValidationError):
    pass


class MissingOccurrence(ValidationError):
    pass


class ExtraOccurrence(ValidationError):
    pass


class UnknownLabel(ValidationError):
    pass


class NegativeGenus(ValidationError):
    pass


class InconsistentSign(ValidationError):
    pass


class MalformedDescriptor(ValidationError):
    """Shape errors: wrong field types, bad labels, wrong lengths, bad ends."""


class FormatSyntaxError(ValidationError):
    pass


class IndexOutOfRange(CComplexError, IndexError):
    pass


class DuplicateIndex(CComplexError, ValueError):
    pass


class EqualIndices(DuplicateIndex):
    pass


class RepeatedIndex(DuplicateIndex):
    pass


class NotStrictlyOrdered(CComplexError, ValueError):
    pass


class NonBijective(CComplexError, ValueError):
    pass


class BoundExceeded(CComplexError, ValueError):
    pass


class PositionOutOfRange(IndexOutOfRange):
    pass


class DifferentPartners(CComplexError, ValueError):
    pass


class WrongComponentCount(CComplexError, ValueError):
    pass


class ComponentCountMismatch(WrongComponentCount):
    pass


class NonvanishingLinking(CComplexError, ValueError):
    def __init__(self, message, which=None, pair=None, value=None):
        super().__init__(message)
        self.which = which
        self.pair = pair
        self.value = value
