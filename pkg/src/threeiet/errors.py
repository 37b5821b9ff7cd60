"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Base class for every domain-level failure (CLI exit code 3)."""


class MixedFields(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class RationalBase(DomainError):
    pass


class AlphabetMismatch(DomainError):
    pass


class NotEndomorphism(DomainError):
    pass


class NotPrimitive(DomainError):
    pass


class NoFixedPoint(DomainError):
    pass


class InvalidSeed(DomainError):
    pass


class NotQuadratic(DomainError):
    pass


class InvalidParams(DomainError):
    pass


class OutsideDomain(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class NotAmicable(DomainError):
    pass


class InterceptOutOfRange(DomainError):
    pass


class Degenerate(DomainError):
    pass


class ConjugateNotPositive(DomainError):
    pass


class NotThreeIetCompatible(DomainError):
    pass


class NotDecomposable(DomainError):
    pass


class NotSelfSimilar(DomainError):
    """Raised when gap-filling patterns disagree; ``witness`` holds the offending indices."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WindowTooShort(DomainError):
    pass


class AmbiguousLength(DomainError):
    pass
