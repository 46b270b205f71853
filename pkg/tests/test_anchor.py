from itertools import combinations

import pytest

from anchorkit.anchor import (
    AnchorVerdict,
    BalanceClass,
    anchor_sizes,
    anchor_verdict,
    balance_class,
    copies_of,
    extend_to_maximal,
    find_anchors,
    is_balanced,
    is_distinguishable_in_deck,
    is_quasi_balanced,
    maximal_anchors,
    orbit_removal_anchors,
)
from anchorkit.enumeration import enumerate_graphs
from anchorkit.graphcore import (
    SimpleGraph,
    canonical_key,
    complete_graph,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    path_graph,
    subgraph_census,
    induced_key,
)
from anchorkit.shadow import build_shadow, shadow_anchors

import brute

# triangle 0,1,2 with pendant 3 attached at 0
PAW = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
K3 = complete_graph(3)


def test_copies_of_counts():
    assert copies_of(PAW, (0, 1, 2)) == [(0, 1, 2)]
    assert len(copies_of(cycle_graph(5), (0, 1))) == 5  # every cycle edge
    assert copies_of(PAW, (0, 3)) == [(0, 1), (0, 2), (0, 3), (1, 2)]


def test_find_anchors_known():
    hits = find_anchors(PAW, 3)
    assert (0, 1, 2) in [w.vertices for w in hits]
    k3_hit = next(w for w in hits if w.vertices == (0, 1, 2))
    assert k3_hit.key == canonical_key(K3)
    for k in range(1, 5):
        assert find_anchors(cycle_graph(5), k) == []
    for k in range(1, 4):
        assert find_anchors(complete_graph(4), k) == []


def test_find_anchors_vs_brute_census():
    for g in enumerate_graphs(5):
        for k in range(1, 5):
            expect = set()
            for verts in combinations(range(5), k):
                sub, _ = induced_subgraph(g, verts)
                if brute.count_induced_brute(sub, g) == 1:
                    expect.add(verts)
            assert {w.vertices for w in find_anchors(g, k)} == expect


def test_anchor_sizes():
    sizes = anchor_sizes(PAW)
    assert sizes == {1: 0, 2: 0, 3: 2}  # the triangle and one other set
    assert all(v == 0 for v in anchor_sizes(cycle_graph(5)).values())


def test_balanced_known():
    assert is_balanced(cycle_graph(5))
    assert is_balanced(path_graph(4))
    assert not is_balanced(PAW)


def test_quasi_balanced_known():
    assert is_quasi_balanced(disjoint_union(K3, complete_graph(1)))
    assert not is_quasi_balanced(cycle_graph(5))
    # the paw's smallest anchors sit at size n-1, so exhaustion says yes
    assert is_quasi_balanced(PAW)


def test_balance_class_partition():
    for n in (4, 5, 6):
        for g in enumerate_graphs(n):
            cls = balance_class(g)
            assert cls in BalanceClass
            if cls is BalanceClass.VERTEX_TRANSITIVE:
                assert is_balanced(g)
            if cls is BalanceClass.BALANCED_NOT_VT:
                assert is_balanced(g)
            if cls is BalanceClass.QUASI_BALANCED:
                assert is_quasi_balanced(g)


def test_verdicts_known():
    p4 = path_graph(4)
    assert anchor_verdict(p4, (0, 3)) is AnchorVerdict.CONNECTIVE
    assert anchor_verdict(PAW, (0, 1, 2)) is AnchorVerdict.STRUCTURAL
    c5 = cycle_graph(5)
    for k in range(1, 5):
        for verts in combinations(range(5), k):
            assert anchor_verdict(c5, verts) is AnchorVerdict.NOT_ANCHOR


def test_orbit_removal_known():
    got = dict(orbit_removal_anchors(path_graph(4)))
    assert got[(0, 3)] is AnchorVerdict.CONNECTIVE
    assert got[(1, 2)] is AnchorVerdict.CONNECTIVE
    got = dict(orbit_removal_anchors(PAW))
    assert got[(3,)] is AnchorVerdict.STRUCTURAL
    with pytest.raises(ValueError):
        orbit_removal_anchors(cycle_graph(5))


def test_orbit_removal_sweep_small():
    from anchorkit.graphcore import is_vertex_transitive

    for n in (4, 5):
        for g in enumerate_graphs(n):
            if is_vertex_transitive(g):
                continue
            verdicts = [v for _, v in orbit_removal_anchors(g)]
            assert any(v is not AnchorVerdict.NOT_ANCHOR for v in verdicts)


def test_extend_to_maximal():
    w = extend_to_maximal(PAW, (0, 1, 2))
    assert w.vertices == (0, 1, 2)  # already at n-1, nothing to add
    p5 = path_graph(5)
    seed = next(
        a.vertices for k in range(1, 5) for a in find_anchors(p5, k)
    )
    grown = extend_to_maximal(p5, seed)
    assert set(seed) <= set(grown.vertices)
    census = subgraph_census(p5)
    mask = sum(1 << v for v in grown.vertices)
    assert census[induced_key(p5, mask)] == 1
    with pytest.raises(ValueError):
        extend_to_maximal(cycle_graph(5), (0, 1))


def test_maximal_anchors_definition():
    for g in enumerate_graphs(5):
        census = subgraph_census(g)
        anchors = {
            m
            for m in range(1, (1 << 5) - 1)
            if census[induced_key(g, m)] == 1
        }
        expect = {
            m
            for m in anchors
            if not any(m2 != m and m2 & m == m for m2 in anchors)
        }
        got = {sum(1 << v for v in t) for t in maximal_anchors(g)}
        assert got == expect


def test_extension_result_has_balanced_shadow():
    # grown anchors small enough to leave three outside vertices have no
    # shadow anchors; spot-check on a slice of the order-7 classes
    for g in enumerate_graphs(7)[::50]:
        for k in range(1, 7):
            seeds = find_anchors(g, k)
            if seeds:
                grown = extend_to_maximal(g, seeds[0].vertices)
                if len(grown.vertices) <= 4:
                    assert shadow_anchors(build_shadow(g, grown.vertices)) == []
                break


def test_deck_distinguishable_cases():
    p4 = path_graph(4)
    assert is_distinguishable_in_deck(p4, (1, 2))
    star = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert is_distinguishable_in_deck(star, (0,))
    # a set with fewer than two holder cards can never qualify
    assert not is_distinguishable_in_deck(PAW, (0, 1, 2))
