"""Continuous cancellative triangular subnorms: construction and ordering."""

from .generators import (
    DEFAULT_TOL,
    INF,
    DomainError,
    Generator,
    GeneratorValidationError,
    IntervalGrid,
    NormalizationError,
    ParameterError,
    ToleranceProfile,
    affine_shift,
    closed_form,
    derivative,
    geval,
    ginvert,
    normalize,
    numeric_inverse,
    pseudo_invert,
    validate_generator,
)
from .operators import (
    AxiomReport,
    FamilySpec,
    Fixture,
    TSubnorm,
    catalog,
    check_axioms,
    complete_to_tnorm,
    dual_superconorm,
    evaluate,
    from_generator,
    lukasiewicz_fixture,
    make_family,
    yager_fixture,
)
from .ordering import (
    CRITERION_NAMES,
    ComparisonVerdict,
    ComposedMap,
    CriterionReport,
    compare,
    compose,
    concavity_criterion,
    derivative_ratio_criterion,
    direct_compare,
    dominated_or_equal,
    equality_test,
    family_monotonicity_scan,
    from_callable,
    logarithmic_equality_test,
    nilpotent_guard,
    proper_never_dominates_tnorm_check,
    quasi_homogeneity_criterion,
    ratio_criterion,
    ratio_profile_criterion,
    run_criterion,
    serialize_report,
    serialize_verdict,
    strict_dominance_test,
    subadditivity_test,
)
from .asymptotics import (
    SlopeEstimate,
    asymptotic_slope_A,
    linear_envelope_check,
    section4_equivalences,
    small_slope_B,
)

__version__ = "0.1.0"
