"""Exception hierarchy.

``DomainError`` subclasses map to CLI exit status 3, ``BudgetExceeded`` to 4.
"""


class DomainError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would exceed the 2**26 codeword budget."""


class ZeroCode(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class DependentRows(DomainError):
    pass


class CodeFormatError(DomainError):
    pass


class NonIntegral(DomainError):
    """A design-parameter division that must be exact was not."""


class EmptyBlockSet(DomainError):
    pass


class MixedWeights(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class UnsupportedLength(DomainError):
    pass


class NotOneDesign(DomainError):
    pass


class HypothesisFailed(DomainError):
    pass


class UnreachableSecret(DomainError):
    pass


class MissingShare(DomainError):
    pass


class SameClass(DomainError):
    pass


class UnknownName(DomainError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class ShareFormatError(DomainError):
    pass
