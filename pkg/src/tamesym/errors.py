"""Exception hierarchy for the package."""


class TamesymError(Exception):
    """Base class for all package errors."""


class FieldMismatch(TamesymError):
    """Operands belong to different fields."""


class InvalidPrime(TamesymError):
    """A prime was required."""


class InvalidField(TamesymError):
    """Bad field parameters (non-prime characteristic, reducible modulus, ...)."""


class AmbientMismatch(TamesymError):
    """Subspaces of different ambient dimension were combined."""


class DimensionMismatch(TamesymError):
    """Vector/element length does not match the expected dimension."""


class DslSyntaxError(TamesymError):
    """Presentation DSL syntax error, with source position."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class UnknownNameError(DslSyntaxError):
    """Unknown arrow or parameter name in a relation."""


class PathError(DslSyntaxError):
    """Non-composable path, or relation terms that are not parallel."""


class QuiverError(TamesymError):
    """Invalid quiver (duplicate arrows, out-of-range vertices, disconnected)."""


class TruncationError(TamesymError):
    """Completion / basis enumeration exceeded its ceiling (algebra too large
    or not finite dimensional)."""


class ConsistencyError(TamesymError):
    """A computed value contradicts an expected value or a theorem-level check."""


class NotSymmetric(TamesymError):
    """No nondegenerate symmetrizing form found in the candidate space."""


class DualBasisFailure(TamesymError):
    """Gram matrix of the symmetrizing form is singular."""


class NotAnIdeal(TamesymError):
    """quotient_comm received a subspace that is not an ideal."""


class KStabilityFailure(TamesymError):
    """A prime-field kernel failed the K-stability verification."""


class CharZero(TamesymError):
    """Operation undefined in characteristic zero."""


class CharMismatch(TamesymError):
    """Comparison across different characteristics/fields."""


class ParameterConstraint(TamesymError):
    """Family parameter constraint violated; message names the inequality."""


class CharConstraint(TamesymError):
    """Family is not defined over the requested characteristic."""
