"""Exception hierarchy shared by every module in the toolkit."""


class CartanKitError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatch(CartanKitError):
    """A coordinate vector or matrix does not fit the ambient dimension."""


class NotClosed(CartanKitError):
    """A claimed subalgebra is not closed under the bracket."""


class NotIdeal(CartanKitError):
    """A claimed ideal is not stable under bracketing with the ambient algebra."""


class NotCartan(CartanKitError):
    """A subalgebra fails the Cartan axioms (nilpotent and self-normalizing)."""


class NotSolvable(CartanKitError):
    """An operation requiring a solvable algebra was given a non-solvable one."""


class HypothesisViolated(CartanKitError):
    """A stated operation hypothesis does not hold for the given arguments."""


class NonNilpotentIterate(CartanKitError):
    """A normalizer-chain iterate failed the nilpotency check."""


class JacobiViolation(CartanKitError):
    """Structure constants violate the Jacobi identity.

    Carries the offending basis triple and the residual vector.
    """

    def __init__(self, triple, residual, message=None):
        self.triple = tuple(triple)
        self.residual = tuple(residual)
        if message is None:
            message = f"Jacobi identity fails on basis triple {self.triple}: residual {self.residual}"
        super().__init__(message)


class ParseError(CartanKitError):
    """A fixture or instance file is malformed."""


class IndexOutOfRange(ParseError):
    """A bracket entry references a basis index outside the declared dimension."""


class LiftFailure(CartanKitError):
    """A Levi-complement correction system was inconsistent (signals a bug)."""


class SearchExhausted(CartanKitError):
    """The regular-element search budget was exhausted without success."""


class PostconditionFailure(CartanKitError):
    """A guaranteed output property failed verification (never recoverable)."""


class InternalInconsistency(CartanKitError):
    """A computed object failed its own defensive verification."""


class InvalidOrder(CartanKitError):
    """A finite component order below 2 appeared in a Cartan subgroup model."""


class EmptyInstance(CartanKitError):
    """A group density instance carries no Cartan subgroup models."""
