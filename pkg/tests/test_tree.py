from itertools import combinations

import networkx as nx
import pytest

from oddtrails.decomp.tree import TreePartitionInstance, tree_partition
from oddtrails.errors import PreconditionError
from oddtrails.generate import all_trees
from oddtrails.graph import build


def set_partitions(items, k):
    """All partitions of ``items`` into exactly ``k`` nonempty blocks."""
    if not items:
        if k == 0:
            yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest, k - 1):
        yield [[first]] + p
    for p in set_partitions(rest, k):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def valid(tree, B, parts, k):
    h = nx.Graph()
    h.add_nodes_from(range(tree.n))
    h.add_edges_from(tree.edges)
    if len(parts) != k:
        return False
    covered = sorted(v for p in parts for v in p)
    if covered != list(range(tree.n)):
        return False
    return all(nx.is_connected(h.subgraph(p)) and len(set(p) & B) % 2 for p in parts)


def path(n):
    return build(n, [(i, i + 1) for i in range(n - 1)])


def test_path_singletons():
    assert tree_partition(TreePartitionInstance(path(3), frozenset({0, 1, 2}), 3)) == [
        frozenset({0}), frozenset({1}), frozenset({2})
    ]


def test_path_whole():
    assert tree_partition(TreePartitionInstance(path(3), frozenset({0, 1, 2}), 1)) == [frozenset({0, 1, 2})]


def test_star_three_leaves():
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    B = frozenset({1, 2, 3})
    parts = tree_partition(TreePartitionInstance(star, B, 3))
    brute = [p for p in set_partitions(list(range(4)), 3) if valid(star, B, p, 3)]
    # exactly three valid answers: the centre joins one of the leaves
    assert len(brute) == 3
    assert sorted(map(sorted, parts)) in [sorted(map(sorted, p)) for p in brute]
    assert sorted(map(sorted, parts)) == [[0, 3], [1], [2]]


def test_tree_counts():
    # unlabelled trees on 1..8 vertices
    assert [sum(1 for _ in all_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


@pytest.mark.parametrize("n", range(1, 7))
def test_against_brute_force(n):
    for tree in all_trees(n):
        for size in range(n + 1):
            for B in combinations(range(n), size):
                B = frozenset(B)
                for k in range(1, size + 1):
                    if (size - k) % 2:
                        continue
                    parts = tree_partition(TreePartitionInstance(tree, B, k))
                    assert valid(tree, B, parts, k), (tree.edges, B, k, parts)
                    assert any(valid(tree, B, p, k) for p in set_partitions(list(range(n)), k))


def test_rejects_bad_instances():
    with pytest.raises(PreconditionError, match="parity"):
        tree_partition(TreePartitionInstance(path(3), frozenset({0, 1}), 1))
    with pytest.raises(PreconditionError, match="smaller"):
        tree_partition(TreePartitionInstance(path(3), frozenset({0}), 3))
    with pytest.raises(PreconditionError, match="not a tree"):
        tree_partition(TreePartitionInstance(build(3, [(0, 1), (1, 2), (2, 0)]), frozenset({0}), 1))
