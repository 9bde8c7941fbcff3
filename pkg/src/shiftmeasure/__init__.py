"""Exact measure transfer for subshifts under non-erasing free-monoid morphisms."""

from .diagnostics import (
    ViolationReport,
    check_period_preservation,
    check_periodic_orbit_injectivity,
    prolongation_split,
)
from .language import (
    FactorLanguage,
    complexity,
    factorial_closure,
    full_shift_language,
    image_language,
    periodic_orbit_language,
    union,
)
from .measure import (
    FrequencyVector,
    MeasureTable,
    Violation,
    characteristic_measure,
    frequency_vector,
    linear_combination,
    support_words,
    validate,
)
from .morphism import (
    IncidenceMatrix,
    Morphism,
    SubdivisionData,
    apply,
    candidate_lengths,
    canonical_decomposition,
    compose,
    essential_occurrences,
    incidence_matrix,
    norms,
    subdivision_morphism,
)
from .textio import (
    ParseError,
    parse_language,
    parse_measure,
    parse_morphism,
    parse_word,
    render_language,
    render_measure,
    render_morphism,
)
from .transfer import (
    DepthError,
    pushforward_letter_to_letter,
    required_input_depth,
    subdivision_measure,
    transfer_eval,
    transfer_table,
    transfer_via_decomposition,
)
from .words import (
    Alphabet,
    Word,
    count_occurrences,
    factors,
    is_proper_power,
    is_rotation,
    iter_words,
    min_rotation,
    primitive_root,
    rotations,
)

__all__ = [
    "Alphabet",
    "DepthError",
    "FactorLanguage",
    "FrequencyVector",
    "IncidenceMatrix",
    "MeasureTable",
    "Morphism",
    "ParseError",
    "SubdivisionData",
    "Violation",
    "ViolationReport",
    "Word",
    "apply",
    "candidate_lengths",
    "canonical_decomposition",
    "characteristic_measure",
    "check_period_preservation",
    "check_periodic_orbit_injectivity",
    "complexity",
    "compose",
    "count_occurrences",
    "essential_occurrences",
    "factorial_closure",
    "factors",
    "frequency_vector",
    "full_shift_language",
    "image_language",
    "incidence_matrix",
    "is_proper_power",
    "is_rotation",
    "iter_words",
    "linear_combination",
    "min_rotation",
    "norms",
    "parse_language",
    "parse_measure",
    "parse_morphism",
    "parse_word",
    "periodic_orbit_language",
    "primitive_root",
    "prolongation_split",
    "pushforward_letter_to_letter",
    "render_language",
    "render_measure",
    "render_morphism",
    "required_input_depth",
    "rotations",
    "subdivision_measure",
    "subdivision_morphism",
    "support_words",
    "transfer_eval",
    "transfer_table",
    "transfer_via_decomposition",
    "union",
    "validate",
]
