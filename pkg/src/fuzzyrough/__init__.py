"""Exact-rational toolkit for rough approximation spaces and fuzzy rough
relations on finite universes, with an exhaustive small-instance verifier
for the algebra's laws."""

from .errors import (
    ArityError,
    BoundsError,
    ConditionViolation,
    ContextMismatchError,
    CoverageError,
    EmptyBlockError,
    EmptyGridError,
    FuzzyRoughError,
    GradeRangeError,
    InstanceFormatError,
    InternalInvariantError,
    NotRoughError,
    NotSimilitudeError,
    OverlapError,
    UniverseMismatchError,
    UnknownElementError,
    UnknownPropositionError,
    ZeroSupportError,
)
from .frr import (
    ClassStructureReport,
    FrrPredicates,
    FuzzyRoughRelation,
    FuzzyRoughSet,
    PropertyCheck,
    RelationClass,
    ValidationReport,
    Violation,
    check_theorem_49,
    diagonal_order,
    frr_combine,
    frr_compose,
    frr_predicates,
    is_reflexive_frr,
    is_symmetric_transitive,
    is_w_reflexive_frr,
    is_weakly_reflexive_frr,
    make_frr,
    make_frs,
    relation_report,
    similitude_class,
    similitude_order,
    validate_frr,
    validate_frs,
)
from .fuzzy import (
    DominanceCheck,
    FuzzyPredicates,
    FuzzyRelation,
    FuzzySet,
    Grade,
    as_grade,
    dominates,
    fuzzy_predicates,
    grade_combine,
    maxmin_compose,
    pointwise,
    product_set,
)
from .instances import (
    Instance,
    dump_instance,
    format_grade,
    load_instance,
    parse_grade,
    parse_instance,
    serialize_instance,
)
from .rough import (
    ApproxResult,
    ApproximationSpace,
    PairApprox,
    RectRegions,
    Universe,
    approx_relation,
    approx_set,
    eq_class,
    is_rough,
    make_space,
    product_class,
    rect_regions,
)
from .verify import (
    PROPOSITION_IDS,
    PROPOSITIONS,
    CheckOutcome,
    FrrEnumeration,
    Proposition,
    SearchConfig,
    Verdict,
    check,
    enumerate_frr,
    enumerate_frs,
    enumerate_rough_contexts,
    enumerate_spaces,
    random_bundle,
    render_report,
    replay,
    search,
    verdicts_to_json,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
