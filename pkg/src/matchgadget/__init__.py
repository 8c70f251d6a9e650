"""Matching algorithms, augmentability checkers, and coding-graph gadgets."""

from .analysis import (
    StarReport,
    analysis_report,
    check_condition_a,
    check_star,
    collection_pm,
    condition_a_preserved_after_independent_removal,
    has_nonempty_independent_subgraph,
    is_independent,
    maximal_independent_matching,
    maximal_support_matching,
    sequential_pm,
)
from .doubling import (
    DoublingTreeGraph,
    doubling_matching_to_path,
    doubling_path_to_matching,
    doubling_tree,
)
from .dsl import parse_formula
from .formula import (
    And,
    AndNot,
    Atom,
    Exists,
    Formula,
    Implies,
    Not,
    Or,
    TrueLit,
    eval_formula,
    false_literal,
    format_formula,
)
from .gadgets import (
    CodingGraph,
    HaltingOracle,
    SeparationPath,
    SetCoding,
    compile_andnot,
    compile_connective,
    compile_exists,
    compile_false,
    compile_formula,
    compile_jump_query,
    compile_not,
    compile_set,
    compile_true,
    jump_hierarchy,
    jump_query_formula,
    range_flag_edge,
    range_gadget,
    separation_path,
    validate_coding,
)
from .graph import (
    DisjointUnion,
    Graph,
    LazyGraph,
    Matching,
    Path,
    VertexRegistry,
    augment,
    disjoint_union,
    make_graph,
    truncate,
)
from .matching import (
    EnumerationResult,
    PartialMatchingNode,
    bounded_pm_search,
    enumerate_matchings,
    find_augmenting_path,
    maximum_matching,
    perfect_matching,
    perfect_matchings_up_to,
)
from .verify import (
    RoundtripReport,
    UniquePmReport,
    decode_set,
    decode_truth,
    evaluate_jump_query,
    roundtrip_check,
    verify_unique_pm,
)

__version__ = "0.1.0"
