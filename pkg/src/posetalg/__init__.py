"""Incidence algebras of finite posets.

Build the algebra of a finite poset over the rationals, classify its
two-sided monomial ideals through the poset of comparable pairs, recover the
poset back from a scrambled multiplication table by two independent routes,
and cross-check all of it against brute-force oracles.
"""

from .algebra import (
    AlgebraElement,
    IncidenceAlgebra,
    MultiplicationTable,
    RESCALE_FACTORS,
    scramble,
)
from .errors import (
    AlgebraMismatch,
    CapExceeded,
    ClosureViolation,
    ConventionError,
    CycleDetected,
    DuplicateLabel,
    NoUnit,
    NotAssociative,
    NotMonomial,
    ParseError,
    PosetAlgebraError,
    RecoveredRelationNotTransitive,
    SizeLimitExceeded,
    UnknownLabel,
    WordLengthExceeded,
)
from .ideals import (
    Ideal,
    Subspace,
    enumerate_ideals,
    format_ideal,
    full_ideal,
    ideal_generated_by,
    ideal_intersect,
    ideal_lattice_dot,
    ideal_product,
    ideal_sum,
    indecomposable_ideals,
    is_indecomposable,
    maximal_ideals,
    maximal_indecomposable_ideals,
    principal_ideal,
    span_of,
    subspace_closure,
    zero_ideal,
)
from .poset import (
    Pair,
    PairPoset,
    Poset,
    all_labeled_posets,
    antichain,
    boolean_lattice,
    chain,
    count_up_sets,
    covers,
    diamond,
    dual,
    enumerate_up_sets,
    find_isomorphism,
    format_poset,
    hasse_dot,
    interval_order,
    is_isomorphic,
    levels,
    longest_chain_length,
    natural_labeling,
    pair_poset,
    pair_poset_dot,
    parse_poset,
    poset_from_relations,
    random_poset,
)
from .recovery import (
    RoundtripReport,
    maximal_abstract_ideals,
    principal_support,
    quasi_idempotents,
    recover_by_ideal_products,
    recover_by_links,
    recovered_links,
    verify_roundtrip,
)
from .rewriting import (
    MAX_PROBE_DEGREE,
    MAX_WORD_LEN,
    RewriteSystem,
    build_rewrite_system,
    confluence_probe,
    dimension_up_to,
    reduce_word,
)
from .rng import LCG

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraMismatch",
    "CapExceeded",
    "ClosureViolation",
    "ConventionError",
    "CycleDetected",
    "DuplicateLabel",
    "Ideal",
    "IncidenceAlgebra",
    "LCG",
    "MAX_PROBE_DEGREE",
    "MAX_WORD_LEN",
    "MultiplicationTable",
    "NoUnit",
    "NotAssociative",
    "NotMonomial",
    "Pair",
    "PairPoset",
    "ParseError",
    "Poset",
    "PosetAlgebraError",
    "RESCALE_FACTORS",
    "RecoveredRelationNotTransitive",
    "RewriteSystem",
    "RoundtripReport",
    "SizeLimitExceeded",
    "Subspace",
    "UnknownLabel",
    "WordLengthExceeded",
    "all_labeled_posets",
    "antichain",
    "boolean_lattice",
    "build_rewrite_system",
    "chain",
    "confluence_probe",
    "count_up_sets",
    "covers",
    "diamond",
    "dimension_up_to",
    "dual",
    "enumerate_ideals",
    "enumerate_up_sets",
    "find_isomorphism",
    "format_ideal",
    "format_poset",
    "full_ideal",
    "hasse_dot",
    "ideal_generated_by",
    "ideal_intersect",
    "ideal_lattice_dot",
    "ideal_product",
    "ideal_sum",
    "indecomposable_ideals",
    "interval_order",
    "is_indecomposable",
    "is_isomorphic",
    "levels",
    "longest_chain_length",
    "maximal_abstract_ideals",
    "maximal_ideals",
    "maximal_indecomposable_ideals",
    "natural_labeling",
    "pair_poset",
    "pair_poset_dot",
    "parse_poset",
    "poset_from_relations",
    "principal_ideal",
    "principal_support",
    "quasi_idempotents",
    "random_poset",
    "recover_by_ideal_products",
    "recover_by_links",
    "recovered_links",
    "reduce_word",
    "scramble",
    "span_of",
    "subspace_closure",
    "verify_roundtrip",
    "zero_ideal",
]
