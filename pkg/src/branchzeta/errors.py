"""Exception hierarchy shared by all branchzeta modules."""


class BranchZetaError(Exception):
    """Base class for every error raised by this package."""


class InvalidCharSeq(BranchZetaError):
    """Characteristic-sequence invariants fail (ordering or gcd chain)."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotPlaneBranchSemigroup(BranchZetaError):
    """Generator list fails the plane-branch semigroup characterization."""

    def __init__(self, failed_condition: str):
        super().__init__(failed_condition)
        self.failed_condition = failed_condition


class NotInSemigroup(BranchZetaError):
    """Requested integer has no representation in the semigroup."""


class IndexOutOfRange(BranchZetaError):
    """Step or contact index outside 1..g (or vector length mismatch)."""


class InvalidIndices(BranchZetaError):
    """Bell-polynomial indices violate 1 <= k <= nu or wrong x length."""


class PreconditionViolated(BranchZetaError):
    """Structural precondition broken (e.g. u + v not an integer)."""


class DomainError(BranchZetaError):
    """Parameters outside the operation's mathematical domain."""


class ConvergenceFailure(BranchZetaError):
    """Quadrature subdivision budget exhausted before reaching tolerance."""


class NegativeCoefficient(BranchZetaError):
    """A finalized exponent multiset came out with a negative multiplicity."""

    def __init__(self, exponent, multiplicity: int):
        super().__init__(f"multiplicity {multiplicity} < 0 at exponent {exponent}")
        self.exponent = exponent
        self.multiplicity = multiplicity


class InvalidCutoff(BranchZetaError):
    """Deformation weight cutoff below the minimum admissible weight."""


class ZeroLambda(BranchZetaError):
    """A deformation family scale factor lambda_i is zero."""
