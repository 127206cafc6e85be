"""Exception hierarchy shared by every module.

Anything deriving from :class:`DomainError` is a mathematical refusal
(not a unit, not irreducible, size limit exceeded, ...).  The CLI maps
these to exit status 1.
"""


class DomainError(ValueError):
    """Base class for domain-level failures."""


class ModulusError(DomainError):
    pass


class NotAUnit(DomainError):
    pass


class NotPrime(DomainError):
    pass


class NotMonic(DomainError):
    pass


class NotIrreducible(DomainError):
    pass


class ZeroInverse(DomainError):
    pass


class LimitExceeded(DomainError):
    """An exhaustive routine was asked to work beyond its size cap."""


class MismatchError(DomainError):
    """Operands live in different rings, fields or lengths."""


class DesignError(DomainError):
    pass


class CodeError(DomainError):
    pass


class AmbiguousDecoding(CodeError):
    """Raised by nearest-codeword decoding when the minimum distance is tied."""

    def __init__(self, word, candidates):
        self.word = tuple(word)
        self.candidates = tuple(candidates)
        super().__init__(
            "ambiguous decoding of %s: tied between %s"
            % ("".join(map(str, self.word)),
               ", ".join("".join(map(str, c)) for c in self.candidates)))


class FixtureError(DomainError):
    pass
