import pytest

from anchorkit.enumeration import (
    MAX_ENUM_ORDER,
    MAX_TREE_ORDER,
    class_index,
    enumerate_graphs,
    enumerate_trees,
)
from anchorkit.graphcore import canonical_graph6, canonical_key, write_graph6

import brute

# frozen class counts, long since settled
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
TREE_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6,
    7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551,
}


def test_graph_counts():
    for n, count in GRAPH_COUNTS.items():
        assert len(enumerate_graphs(n)) == count


def test_tree_counts():
    for n, count in TREE_COUNTS.items():
        assert len(enumerate_trees(n)) == count


def test_enumeration_yields_canonical_forms_sorted():
    for n in (3, 4, 5, 6):
        pool = enumerate_graphs(n)
        keys = [canonical_key(g) for g in pool]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        for g in pool:
            assert canonical_graph6(g) == write_graph6(g)


def test_enumeration_pairwise_nonisomorphic_brute():
    pool = enumerate_graphs(4)
    for i, a in enumerate(pool):
        for b in pool[i + 1:]:
            assert not brute.iso_brute(a, b)


def test_trees_match_filtered_graphs():
    for n in range(1, 9):
        from_graphs = {
            canonical_key(g) for g in enumerate_graphs(n) if g.is_tree()
        }
        from_trees = {canonical_key(t) for t in enumerate_trees(n)}
        assert from_trees == from_graphs


def test_trees_are_trees():
    for n in range(1, 10):
        for t in enumerate_trees(n):
            assert t.is_tree()
            assert t.edge_count() == n - 1


def test_class_index():
    idx = class_index(5)
    pool = enumerate_graphs(5)
    for i, g in enumerate(pool):
        assert idx[canonical_key(g)] == i


def test_order_caps():
    with pytest.raises(ValueError):
        enumerate_graphs(MAX_ENUM_ORDER + 1)
    with pytest.raises(ValueError):
        enumerate_trees(MAX_TREE_ORDER + 1)
    with pytest.raises(ValueError):
        enumerate_graphs(0)
