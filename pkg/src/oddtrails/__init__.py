"""Odd closed-trail decompositions of eulerian multigraphs and signed graphs."""

from .decomp import (
    Decomposition,
    SplitRecord,
    TreePartitionInstance,
    k_odd,
    lift,
    rooted_2_odd,
    rooted_3_odd,
    signed_rooted_3_odd,
    split_off,
    tree_partition,
)
from .errors import (
    BoundExceeded,
    FlowShortfall,
    GraphError,
    OddTrailsError,
    ParseError,
    PreconditionError,
    TheoremViolation,
)
from .euler import Trail, circuit_decomposition, eulerian_trail
from .factor import odd_circuit_witnesses, two_factorization
from .graph import EdgeSubset, MultiGraph, build, edge_connectivity
from .signed import SignedGraph, is_balanced, switch, two_disjoint_unbalanced_circuits
from .verify import Certificate, verify_decomposition

__version__ = "0.1.0"
