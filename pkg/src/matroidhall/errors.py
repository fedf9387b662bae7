"""Exception hierarchy shared by every module of the package."""


class MatroidError(ValueError):
    """Base class for all mathematical validation errors."""


class InvalidGroundSet(MatroidError):
    pass


class SubsetOutOfRange(MatroidError):
    pass


class SubsetContainsBasepoint(MatroidError):
    pass


class MissingBasepointInFlat(MatroidError):
    def __init__(self, flat):
        super().__init__(f"flat {sorted(flat)} does not contain the basepoint")
        self.flat = flat


class NotIntersectionClosed(MatroidError):
    def __init__(self, first, second):
        super().__init__(
            f"intersection of flats {sorted(first)} and {sorted(second)} is not a flat"
        )
        self.first = first
        self.second = second


class GroundNotFlat(MatroidError):
    pass


class ExchangeAxiomViolated(MatroidError):
    """Closure exchange failure; ``S``, ``x``, ``y`` form the witness."""

    def __init__(self, S, x, y):
        super().__init__(
            f"exchange fails: y={y!r} in cl(S+{x!r}) \\ cl(S) but {x!r} not in cl(S+{y!r}), S={sorted(S)}"
        )
        self.S = S
        self.x = x
        self.y = y


class EmptyBasisFamily(MatroidError):
    pass


class ExchangeViolated(MatroidError):
    """Basis exchange failure."""


class MissingDistinguishedLoop(MatroidError):
    pass


class DanglingEndpoint(MatroidError):
    pass


class RankExceedsSize(MatroidError):
    pass


class BoundExceeded(MatroidError):
    pass


class DegreeBoundExceeded(BoundExceeded):
    pass


class BasepointNotPreserved(MatroidError):
    pass


class FlatPreimageViolated(MatroidError):
    def __init__(self, witness):
        super().__init__(f"preimage of flat {sorted(witness)} is not a flat")
        self.witness = witness


class NotAdmissible(MatroidError):
    pass


class BadNesting(MatroidError):
    pass


class AmbientMismatch(MatroidError):
    pass


class IndexOutOfRange(MatroidError):
    pass


class ParseError(ValueError):
    """Malformed input document; ``where`` locates the offending field."""

    def __init__(self, message, where=None):
        if where is not None:
            message = f"{where}: {message}"
        super().__init__(message)
        self.where = where


class ValidationError(ValueError):
    """A parsed document whose matroid data fails validation."""

    def __init__(self, cause, where=None):
        message = str(cause) if where is None else f"{where}: {cause}"
        super().__init__(message)
        self.cause = cause
        self.where = where
