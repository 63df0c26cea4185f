"""Exact ideal arithmetic over Q(t) for the edge rings of framed braid
graphs: sparse lex polynomials, canonical reduced bases, intersections and
quotients, strand closures, and the verification suites built on them."""

from .braid import (
    PRESETS,
    BraidGraphSpec,
    Closure,
    EdgeId,
    EdgeRing,
    SpecError,
    SubsetDescriptor,
    WeightData,
    build_edge_ring,
    close_strand,
    framing_ideal,
    framing_preset,
    framings_at_level,
    linear_ideal,
    nonlocal_ideal,
    preset_framings,
    quadratic_ideal,
    subset_generator,
)
from .coeff import IntLaurentPoly, RationalFunction
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    canonical_basis,
    ideal_contains,
    ideal_equal,
    intersect,
    normal_form,
    quotient,
    quotient_by_product,
    reduce_to_canonical,
)
from .poly import (
    ExactDivisionError,
    ParseError,
    Polynomial,
    VariableOrder,
    exact_divide,
    parse_polynomial,
    poly_text,
    reduce,
    s_polynomial,
)
from .verify import (
    REPORT_SCHEMA,
    VerificationReport,
    corpus_shapes,
    corpus_specs,
    golden_example,
    is_nonzerodivisor,
    verify_corollary,
    verify_corollary_sweep,
    verify_nonzerodivisor,
    verify_nonzerodivisor_matrix,
    verify_open_qn,
    verify_open_qn_sweep,
    verify_theorem_step,
    verify_theorem_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BraidGraphSpec", "Closure", "EdgeId", "EdgeRing", "ExactDivisionError",
    "GroebnerBasis", "Ideal", "IntLaurentPoly", "ParseError", "Polynomial",
    "PRESETS", "RationalFunction", "REPORT_SCHEMA", "SpecError",
    "SubsetDescriptor", "VariableOrder", "VerificationReport", "WeightData",
    "buchberger", "build_edge_ring", "canonical_basis", "close_strand",
    "corpus_shapes", "corpus_specs", "exact_divide", "framing_ideal",
    "framing_preset", "framings_at_level", "golden_example", "ideal_contains",
    "ideal_equal", "intersect", "is_nonzerodivisor", "linear_ideal",
    "nonlocal_ideal", "normal_form", "parse_polynomial", "poly_text",
    "preset_framings", "quadratic_ideal", "quotient", "quotient_by_product",
    "reduce", "reduce_to_canonical", "s_polynomial", "subset_generator",
    "verify_corollary", "verify_corollary_sweep", "verify_nonzerodivisor",
    "verify_nonzerodivisor_matrix", "verify_open_qn", "verify_open_qn_sweep",
    "verify_theorem_step", "verify_theorem_sweep",
]
