"""Exception types shared across the toolkit.

The CLI maps these onto its exit-code table, so new failure modes should
reuse one of the classes below rather than raising bare ValueErrors.
"""

from __future__ import annotations


class BolError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatch(BolError):
    """Operands live in different ambient spaces."""


class NotAnIdeal(BolError):
    """A subspace failed the ideal test required by an operation."""


class NotASubsystem(BolError):
    """A subspace is not closed under the algebra operations."""


class IllDefinedQuotient(BolError):
    """Quotient products depend on the choice of coset representatives.

    Carries a witness describing the offending product.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionViolation(BolError):
    """A documented precondition of an operation does not hold."""


class FatalInconsistency(BolError):
    """An internal verification failed where the theory guarantees success.

    Indicates a convention bug or a non-Bol input that slipped past
    validation; never downgraded to a warning.
    """


class StrategyDisagreement(FatalInconsistency):
    """Two independently certified radical candidates differ."""


class UnknownExample(BolError):
    """Requested catalog entry does not exist."""


class DocumentError(BolError):
    """An input file failed to parse or validate.

    `field` points at the offending JSON location when known.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field
