"""Matching invariants of bipartite graphs, their profile-based
classification, and exact verified counts of the connected bipartite graphs
whose induced and ordered matching numbers both equal 2."""

from .bigraph import (
    BipartiteGraph,
    CanonicalKey,
    StructuralFlags,
    bipartite_complement,
    canonical_form,
    format_graph,
    from_edge_list,
    is_connected,
    parse_graph,
    structural_flags,
    transpose,
)
from .counting import (
    CountBreakdown,
    InclusionExclusionTerm,
    characteristic_form,
    closed_form,
    d_k,
    d_sum,
    disjoint_count,
    equal_split_count,
    recurrence_eval,
    total_count,
)
from .errors import BimatchError, GraphFormatError, LimitError
from .families import build_cycle_path, build_grm
from .invariants import (
    InvariantReport,
    induced_matching_number,
    invariant_report,
    is_unmixed,
    matching_number,
    min_matching_number,
    ordered_matching_number,
)
from .kseq import (
    JSetList,
    KSequence,
    enumerate_ksequences,
    jsets_from_ksequence,
    ksequence_of,
    validate_jsets,
)
from .oracle import (
    EnumerationJob,
    count_tuples,
    enumerate_graphs,
    iter_graph_classes,
    raw_enumerate,
)
from .profile import (
    ClassificationResult,
    NeighborhoodProfile,
    classify_equal_r,
    classify_equal_two,
    compute_profile,
    ind_match_from_profile,
    is_ind_ord_one,
    ord_match_from_profile,
)

__version__ = "0.1.0"
