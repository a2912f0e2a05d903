"""Exception types shared across the package."""


class CliffordError(Exception):
    """Base class for all cliffinv errors."""


class SignatureMismatch(CliffordError):
    """Two multivectors from different algebras were combined."""


class GradeOutOfRange(CliffordError):
    """A grade index outside 0..n was requested."""


class DimensionMismatch(CliffordError):
    """A grade-sign map was applied to a multivector of the wrong dimension."""


class DimensionOutOfRange(CliffordError):
    """An operation was requested for an unsupported number of generators."""


class SubspaceViolation(CliffordError):
    """An inversion chain produced an element outside its promised subspace.

    This signals a misconfigured chain (a bug), never a property of the
    input multivector.
    """


class NotInvertible(CliffordError):
    """The element has discriminant zero and therefore no inverse."""


class LexError(CliffordError):
    """Bad character or malformed blade symbol in an input expression."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


class ParseError(CliffordError):
    """Token stream does not match the expression grammar."""

    def __init__(self, message: str, offset: int, expected: frozenset = frozenset()):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset
        self.expected = expected
