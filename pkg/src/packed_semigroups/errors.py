"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SemigroupError(ValueError):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class EmptyInput(SemigroupError):
    pass


class NotCoprime(SemigroupError):
    pass


class NotMember(SemigroupError):
    pass


class ZeroModulus(SemigroupError):
    pass


class TrivialSemigroup(SemigroupError):
    """Raised when an operation needs S != N."""


class BadDimensions(SemigroupError):
    pass


class FamilyTooLarge(BadDimensions):
    pass


class NotPacked(SemigroupError):
    pass


class AllZeroCoefficients(SemigroupError):
    pass


class BadResidue(SemigroupError):
    pass


class TableMismatch(SemigroupError):
    pass


class InconsistentTable(SemigroupError):
    pass
