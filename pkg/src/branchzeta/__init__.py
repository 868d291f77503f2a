"""Plane-branch singularity invariants and the Gamma-ratio residue kernel."""

from .branch import (
    BranchNumerics,
    CharSeq,
    PlaneSemigroup,
    ValidationReport,
    canonical_representation,
    charseq_from_semigroup,
    conductor_and_milnor,
    derive_numerics,
    gaps,
    membership,
    validate_plane_semigroup,
)
from .branch import parse_input
from .errors import (
    BranchZetaError,
    ConvergenceFailure,
    DomainError,
    InvalidCharSeq,
    InvalidCutoff,
    InvalidIndices,
    IndexOutOfRange,
    NegativeCoefficient,
    NotInSemigroup,
    NotPlaneBranchSemigroup,
    PreconditionViolated,
    ZeroLambda,
)
from .poles import (
    BranchReport,
    CandidatePole,
    EigenvalueAnalysis,
    ExponentMultiset,
    PoleStatus,
    Resonance,
    branch_report,
    candidate_pole,
    eigenvalue_analysis,
    log_canonical_threshold,
    pi_multisets,
    residue_numbers,
    yano_multiset,
)
from .toric import (
    DivisorNumerics,
    ToricStep,
    bell_polynomial,
    divisor_numerics,
    linear_forms,
    toric_steps,
)
from .gammaratio import (
    MeromorphicValue,
    RnmParams,
    gamma_pair,
    gamma_ratio,
    hypergeom_sum_at_1,
    log_gamma,
    rnm_closed_form,
    symmetry_check,
)
from .quadrature import (
    QuadConfig,
    radial_mass,
    rnm_quadrature,
    vanishing_integral_check,
    vanishing_symbolic_cancellation,
)
from .curves import (
    DeformationFamily,
    DeformationTerm,
    SparsePoly,
    deformation_family,
    monomial_curve_equations,
    plane_equation,
    weight_of_monomial,
)

__version__ = "0.1.0"
