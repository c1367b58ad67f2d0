"""Degree-sequence residues, strong Havel-Hakimi graphs, and independent
sets, with exhaustive small-graph checks of the facts tying them together."""

from .catalog import (
    FORBIDDEN_SUBGRAPHS,
    catalog,
    complete,
    complete_bipartite,
    co_domino,
    cycle,
    domino,
    dumbbell_a,
    dumbbell_b,
    empty_graph,
    k23_plus,
    kite,
    p3_plus_k3,
    pan4,
    path,
    stool,
    two_p3,
)
from .degseq import (
    ReductionTrace,
    hh_reduce,
    hh_step,
    is_graphical,
    is_graphical_erdos_gallai,
    residue,
)
from .enumeration import enumerate_graphs, graphs_up_to, isomorphism_class_count_labeled
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import (
    Graph,
    canonical_form,
    complement,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_isomorphic,
    join,
    permute,
)
from .harness import (
    THEOREM_CHECKS,
    TheoremReport,
    Violation,
    minimal_forbidden,
    verify_class_chain,
    verify_forb_equivalence,
    verify_lemma_c4_or_p5,
    verify_minimal_forbidden,
    verify_r_equals_alpha_on_strong_hh,
    verify_residue_bounds,
)
from .independence import (
    MaxineBranchSummary,
    MaxineOutcome,
    independence_number,
    independence_number_bitmask,
    maximum_independent_sets,
    maxine_all_branches,
    maxine_run,
)
from .recognition import (
    ConfigWitness,
    ForbiddenWitness,
    contains_induced,
    find_matrogenic_config,
    has_hh_property,
    is_matrogenic_config_free,
    is_strong_havel_hakimi,
    is_strong_havel_hakimi_definitional,
    is_threshold,
    strong_hh_witness,
)

__all__ = [
    "FORBIDDEN_SUBGRAPHS",
    "ConfigWitness",
    "ForbiddenWitness",
    "Graph",
    "Graph6Error",
    "MaxineBranchSummary",
    "MaxineOutcome",
    "ReductionTrace",
    "THEOREM_CHECKS",
    "TheoremReport",
    "Violation",
    "canonical_form",
    "catalog",
    "co_domino",
    "complement",
    "complete",
    "complete_bipartite",
    "contains_induced",
    "cycle",
    "disjoint_union",
    "domino",
    "dumbbell_a",
    "dumbbell_b",
    "emit_graph6",
    "empty_graph",
    "enumerate_graphs",
    "find_matrogenic_config",
    "from_edges",
    "graphs_up_to",
    "has_hh_property",
    "hh_reduce",
    "hh_step",
    "independence_number",
    "independence_number_bitmask",
    "induced_subgraph",
    "is_graphical",
    "is_graphical_erdos_gallai",
    "is_isomorphic",
    "is_matrogenic_config_free",
    "is_strong_havel_hakimi",
    "is_strong_havel_hakimi_definitional",
    "is_threshold",
    "isomorphism_class_count_labeled",
    "join",
    "k23_plus",
    "kite",
    "maximum_independent_sets",
    "maxine_all_branches",
    "maxine_run",
    "minimal_forbidden",
    "p3_plus_k3",
    "pan4",
    "parse_graph6",
    "path",
    "permute",
    "residue",
    "stool",
    "strong_hh_witness",
    "two_p3",
    "verify_class_chain",
    "verify_forb_equivalence",
    "verify_lemma_c4_or_p5",
    "verify_minimal_forbidden",
    "verify_r_equals_alpha_on_strong_hh",
    "verify_residue_bounds",
]
