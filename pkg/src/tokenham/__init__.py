"""Token graphs, fan-graph Hamiltonian cycles, and their verification."""

from tokenham.graph_core import (
    Graph,
    is_edge,
    is_spanning_subgraph,
    join,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
    relabel,
)
from tokenham.token_graph import (
    TokenGraph,
    build_token_graph,
    complement_vertex,
    enumerate_k_subsets,
    token_adjacent,
    token_edge_count,
)
from tokenham.fan_cycle import AnchorPair, CycleSeq, fan_ham_cycle
from tokenham.hamiltonicity import (
    SearchOutcome,
    VerificationReport,
    brute_force_ham_cycle,
    certify_lift,
    validate_cycle,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorPair",
    "CycleSeq",
    "Graph",
    "SearchOutcome",
    "TokenGraph",
    "VerificationReport",
    "brute_force_ham_cycle",
    "build_token_graph",
    "certify_lift",
    "complement_vertex",
    "enumerate_k_subsets",
    "fan_ham_cycle",
    "is_edge",
    "is_spanning_subgraph",
    "join",
    "make_complete",
    "make_complete_bipartite",
    "make_cycle",
    "make_fan",
    "make_path",
    "make_wheel",
    "relabel",
    "token_adjacent",
    "token_edge_count",
    "validate_cycle",
]
