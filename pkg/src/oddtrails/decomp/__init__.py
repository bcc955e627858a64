"""Odd closed-trail decompositions."""

from .base import Decomposition, grow_odd_eulerian, lift_parts, require_eulerian
from .kodd import find_odd_circuits, k_odd
from .rooted2 import absence_reason, rooted_2_odd
from .rooted3 import Rooted3Trace, split_by_cut_paths, rooted_3_odd, split_even_side
from .signed3 import SolveTrace, signed_rooted_3_odd
from .splitting import SplitRecord, lift, pairings, split_child, split_off
from .tree import TreePartitionInstance, tree_partition

__all__ = [
    "Decomposition",
    "Rooted3Trace",
    "SolveTrace",
    "SplitRecord",
    "TreePartitionInstance",
    "absence_reason",
    "split_by_cut_paths",
    "find_odd_circuits",
    "grow_odd_eulerian",
    "k_odd",
    "lift",
    "lift_parts",
    "pairings",
    "require_eulerian",
    "rooted_2_odd",
    "rooted_3_odd",
    "signed_rooted_3_odd",
    "split_child",
    "split_even_side",
    "split_off",
    "tree_partition",
]
