"""Extremal-weight reduction and the multiplicity-freeness verdict."""

from mfsr.criterion.isotropy import (
    IsotropyDescription,
    IsotropyFormatError,
    classify_root_subsystem,
    generic_isotropy,
    normal_factor,
    parse_isotropy,
)
from mfsr.criterion.linear import (
    combine,
    dependency_witness,
    extends_independently,
    independent,
    rank_of,
)
from mfsr.criterion.reduction import (
    ReductionError,
    ReductionResult,
    StepRecord,
    WeightClass,
    admissible_weights,
    classify_weight,
    positive_half,
    reduction_step,
    run_reduction,
)
from mfsr.criterion.verdict import Verdict, choice_invariant, criterion_A, is_multiplicity_free

__all__ = [
    "IsotropyDescription",
    "IsotropyFormatError",
    "ReductionError",
    "ReductionResult",
    "StepRecord",
    "Verdict",
    "WeightClass",
    "admissible_weights",
    "choice_invariant",
    "classify_root_subsystem",
    "classify_weight",
    "combine",
    "criterion_A",
    "dependency_witness",
    "extends_independently",
    "generic_isotropy",
    "independent",
    "is_multiplicity_free",
    "normal_factor",
    "parse_isotropy",
    "positive_half",
    "rank_of",
    "reduction_step",
    "run_reduction",
]
