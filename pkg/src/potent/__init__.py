"""Graphic degree sequences and potentially H-graphic tests for small patterns."""

from .characterize import (
    ConditionId,
    DomainError,
    PotentialVerdict,
    is_potentially_k5p4,
    is_potentially_k6c6,
    is_potentially_k23,
    is_potentially_k33,
    match_exceptional_family,
    predicate_for,
)
from .graph import (
    LabeledGraph,
    TargetPattern,
    build_named,
    degree_sequence_of,
    disjoint_union,
    find_embedding,
    remove_subgraph_edges,
    target_pattern,
)
from .oracle import (
    RealizationWitness,
    complete_under_forbidden,
    enumerate_realizations,
    oracle_potential,
    oracle_search,
)
from .sequence import (
    DegreeSequence,
    enumerate_graphic,
    format_sequence,
    is_graphic,
    lay_off,
    parse_sequence,
    path_cycle_check,
    sequence_stats,
)
from .sigma import SigmaResult, check_sigma_formula, closed_form, extremal_sequence, sigma_value
from .verify import VerificationReport, verify_range

__version__ = "0.1.0"
