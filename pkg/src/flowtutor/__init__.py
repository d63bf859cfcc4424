"""flowtutor: an interactive max-flow/min-cut tutoring engine.

Build or import a capacitated network, then execute augmenting-path
algorithms by hand with every step validated, or let the engine complete any
step automatically; verify proposed maximum flows and minimum cuts with
per-edge diagnostics.
"""

from .cuts import Cut, CutVerdict, cut_capacity, find_min_cut, validate_cut
from .edgelist import EdgelistError, ParseIssue, parse_edgelist, serialize_edgelist
from .findings import Finding
from .layout import LayoutResult, layered_layout, spring_layout
from .network import (
    BACKWARD,
    FORWARD,
    BottleneckResult,
    Edge,
    Flow,
    FlowError,
    FlowNetwork,
    Path,
    ResidualArc,
    ResidualGraph,
    augment,
    bottleneck,
    check_flow,
    check_path,
    flow_value,
    reachable_from,
    residual_graph,
    validate_network,
)
from .session import (
    CHOOSE_AMOUNT,
    FINALIZED,
    GRAPH_CREATION,
    SELECT_PATH,
    UPDATE_RESIDUAL,
    HistoryEntry,
    SessionState,
    StepFeedback,
    apply_action,
    new_session,
    replay,
    snapshot,
    snapshot_json,
)
from .strategies import (
    Random,
    Shortest,
    SolveResult,
    Widest,
    find_random_path,
    find_shortest_path,
    find_widest_path,
    parse_strategy,
    solve,
)

__all__ = [
    "BACKWARD",
    "BottleneckResult",
    "CHOOSE_AMOUNT",
    "Cut",
    "CutVerdict",
    "Edge",
    "EdgelistError",
    "FINALIZED",
    "FORWARD",
    "Finding",
    "Flow",
    "FlowError",
    "FlowNetwork",
    "GRAPH_CREATION",
    "HistoryEntry",
    "LayoutResult",
    "ParseIssue",
    "Path",
    "Random",
    "ResidualArc",
    "ResidualGraph",
    "SELECT_PATH",
    "SessionState",
    "Shortest",
    "SolveResult",
    "StepFeedback",
    "UPDATE_RESIDUAL",
    "Widest",
    "apply_action",
    "augment",
    "bottleneck",
    "check_flow",
    "check_path",
    "cut_capacity",
    "find_min_cut",
    "find_random_path",
    "find_shortest_path",
    "find_widest_path",
    "flow_value",
    "layered_layout",
    "new_session",
    "parse_edgelist",
    "parse_strategy",
    "reachable_from",
    "replay",
    "residual_graph",
    "serialize_edgelist",
    "snapshot",
    "snapshot_json",
    "solve",
    "spring_layout",
    "validate_cut",
    "validate_network",
]

__version__ = "0.1.0"
