"""Exception hierarchy shared by the library and the CLI.

Every exception carries the CLI exit code it maps to:
2 validation, 3 budget, 4 theorem precondition, 5 internal invariant.
"""


class LatticeError(Exception):
    """Base exception for all agiform-sos errors."""

    exit_code: int = 1


# Validation (exit 2)


class ValidationError(LatticeError):
    """Raised when user input fails validation."""

    exit_code = 2


class TooFewVertices(ValidationError):
    """Raised when a simplex has fewer than two vertices."""

    pass


class RaggedInput(ValidationError):
    """Raised when points of unequal length are mixed."""

    pass


class DimensionMismatch(ValidationError):
    """Raised when the vertex count differs from the ambient dimension."""

    pass


class OddVertex(ValidationError):
    """Raised when a vertex has an odd coordinate."""

    pass


class NegativeVertex(ValidationError):
    """Raised when a vertex has a negative coordinate."""

    pass


class UnequalDegreeSums(ValidationError):
    """Raised when vertices have different coordinate sums."""

    pass


class AffinelyDependent(ValidationError):
    """Raised when the vertices do not span a simplex."""

    pass


class DuplicateVertex(ValidationError):
    """Raised when a vertex is repeated."""

    pass


class NotInAffineHull(ValidationError):
    """Raised when a point is not in the affine hull of a simplex."""

    pass


class PointOutsideSimplex(ValidationError):
    """Raised when a point lies outside the (dilated) simplex."""

    pass


class NotInSimplex(PointOutsideSimplex):
    """Raised when a witness target is not a lattice point of kU."""

    pass


class VertexMissing(ValidationError):
    """Raised when a candidate mediated set omits a vertex."""

    pass


class IsVertex(ValidationError):
    """Raised when a witness is requested for a vertex."""

    pass


class SumTooLarge(ValidationError):
    """Raised when a bounded sum target exceeds the available total."""

    pass


class NonpositiveScale(ValidationError):
    """Raised when an agiform scale is not positive."""

    pass


class ArityMismatch(ValidationError):
    """Raised when polynomials or points of different arity are combined."""

    pass


class DivisibilityError(ValidationError):
    """Raised when exponents are not divisible by the requested power."""

    pass


class NotSos(ValidationError):
    """Raised when a decomposition is requested for a non-sos agiform."""

    pass


class NotAnAgiform(ValidationError):
    """Raised when a polynomial is not a scaled agiform."""

    pass


class DocumentError(ValidationError):
    """Raised when an input document cannot be parsed."""

    pass


class NotMediated(ValidationError):
    """Raised when a point of a claimed mediated set has no midpoint pair."""

    pass


# Budget (exit 3)


class BudgetExceeded(LatticeError):
    """Raised when an enumeration exceeds its configured budget.

    Attributes:
        limit: The configured cap
        visited: Candidates visited when the cap was hit
    """

    exit_code = 3

    def __init__(self, message: str, limit: int | None = None, visited: int | None = None):
        super().__init__(message)
        self.limit = limit
        self.visited = visited


# Theorem preconditions (exit 4)


class TheoremPreconditionError(LatticeError):
    """Raised when a theorem's hypotheses do not hold."""

    exit_code = 4


class KTooSmall(TheoremPreconditionError):
    """Raised when k < max{2, n-2}.

    Attributes:
        k: Requested dilation factor
        minimum: Smallest dilation covered by the theorem
    """

    def __init__(self, message: str, k: int | None = None, minimum: int | None = None):
        super().__init__(message)
        self.k = k
        self.minimum = minimum


class InsufficientFloorSum(TheoremPreconditionError):
    """Raised when the greedy bead path cannot reach k (sum of floors < k)."""

    pass


# Internal invariants (exit 5)


class InternalInvariantViolation(LatticeError):
    """Raised when a proven invariant fails; indicates a defect."""

    exit_code = 5


class DepthExhausted(InternalInvariantViolation):
    """Raised when the subdivision recursion budget is spent."""

    pass


class DecompositionFailed(InternalInvariantViolation):
    """Raised when no binomial-square combination reproduces an sos agiform."""

    pass
