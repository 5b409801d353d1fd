"""Exception hierarchy.

Two families: ``UsageError`` subclasses mean the input itself is malformed
(the CLI exits with status 2); ``DomainError`` subclasses mean the input is
a valid semigroup that fails a mathematical precondition (status 1).
"""


class WmodError(Exception):
    pass


class UsageError(WmodError, ValueError):
    pass


class DomainError(WmodError):
    pass


class ParseError(UsageError):
    pass


class EmptyInput(UsageError):
    pass


class NonCoprime(UsageError):
    pass


class NegativeInput(UsageError):
    pass


class BoundExceeded(UsageError):
    pass


class NotPrime(UsageError):
    pass


class NotAMember(DomainError, ValueError):
    pass


class GenusZero(DomainError):
    pass


class OutOfRange(DomainError, ValueError):
    pass


class NotSymmetric(DomainError):
    pass


class Hyperelliptic(DomainError):
    pass


class NotCompleteIntersection(DomainError):
    pass


class InadmissibleCharacteristic(DomainError):
    pass


class NonVanishingTail(DomainError):
    pass


class DegenerateNormalization(DomainError):
    pass


class GuardViolation(DomainError):
    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or reason)


class ExcludedTarget(DomainError):
    pass


class NoCertificate(DomainError):
    pass


class NonZeroResidue(DomainError):
    pass
