"""Pinnacle sets of vertex-labeled graphs.

Given a graph on ``n`` vertices and a bijective labeling by ``1 .. n``, a
label is a pinnacle when it beats every neighbouring label.  This package
computes pinnacle sets, enumerates them exhaustively, constructs
labelings realizing target sets for the solved families, rewrites
labelings by label swaps and tree re-rootings, orders the size-``k`` sets
into a dominance poset, and evaluates the closed-form counts, with every
piece cross-checkable against the brute-force oracle.
"""

from .constructions import (
    RealizedInstance,
    basic_labeling,
    complete_bipartite_labeling,
    cycle_labeling,
    path_labeling,
    realize_any_set,
    realize_max_set,
)
from .counting import (
    compositions,
    count_from_bottom,
    count_labelings_cycle_max_set,
    cycle_table,
    multinomial,
    path_table,
    pinn_closed_form,
    pinn_complete_bipartite,
)
from .families import (
    ell,
    has_size_k_pinnacle_set,
    is_complete_bipartite_pinnacle_set,
    is_complete_pinnacle_set,
    is_cycle_pinnacle_set,
    is_path_pinnacle_set,
    is_pinnacle_set_of_family,
    matches_family,
    min_pinnacle_set_size,
    parse_family,
)
from .graphs import (
    Graph,
    Labeling,
    PinnacleSet,
    VertexSet,
    bfs_layers,
    connected_components,
    delete_edge,
    is_connected,
    is_independent,
    pinnacles,
)
from .oracle import (
    GuardExceeded,
    PinnacleCatalog,
    count_labelings_with_pinnacle_set,
    enumerate_pinnacle_sets,
    find_labeling,
)
from .posets import (
    DominancePoset,
    LatticeReport,
    bottom_elements,
    build_poset,
    dominates,
    family_bottom,
    join,
    lattice_report,
    meet,
    min_by_components,
    min_size2,
    remnant_sizes,
)
from .reductions import (
    DecisionInstance,
    add_universal_vertex,
    reduce_to_pinnacle_existence,
    reduce_to_pinnacle_size,
    verify_existence_certificate,
    verify_size_certificate,
)
from .textio import (
    GraphFormatError,
    emit_hasse_dot,
    format_graph,
    parse_graph_file,
    parse_graph_text,
)
from .transforms import (
    OrderedTreePartition,
    RootedTree,
    dominance_steps,
    dominance_transform,
    drop_min_pinnacle,
    labeling_from_otp,
    otp_from_labeling,
    otp_violations,
    swap_down,
    swap_up,
    validate_otp,
)

__version__ = "0.1.0"
