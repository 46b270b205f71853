from itertools import combinations

import pytest

from anchorkit.graphcore import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    isomorphic,
    path_graph,
)
from anchorkit.enumeration import enumerate_graphs
from anchorkit.shadow import (
    ShadowGraph,
    build_shadow,
    is_fixed_shadow_vertex,
    is_shadow_vertex_transitive,
    shadow_anchors,
    shadow_automorphisms,
    shadow_deck,
    shadow_from_text,
    shadow_isomorphic,
    shadow_orbits,
    shadow_to_text,
    unbuild_shadow,
)

PAW = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def singletons_on_c4() -> ShadowGraph:
    return ShadowGraph(
        cycle_graph(4),
        (frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3})),
        (),
    )


def test_build_shadow_paw():
    x = build_shadow(PAW, (0, 1, 2))
    assert x.background == complete_graph(3)
    assert x.sets == (frozenset({0}),)
    assert x.edges == ()


def test_build_shadow_p4_endpoints():
    # path 0-1-2-3, keep the endpoint pair {0,3}
    x = build_shadow(path_graph(4), (0, 3))
    assert x.background == empty_graph(2)
    # outside vertices 1, 2 in ascending order: 1 sees {0}, 2 sees {3}
    assert x.sets == (frozenset({0}), frozenset({1}))
    assert x.edges == ((0, 1),)


def test_unbuild_inverts_build_exhaustive():
    for n in (3, 4, 5):
        for g in enumerate_graphs(n):
            for k in range(1, n):
                for verts in combinations(range(n), k):
                    assert isomorphic(unbuild_shadow(build_shadow(g, verts)), g)


def test_shadow_isomorphic_identity():
    x = singletons_on_c4()
    w = shadow_isomorphic(x, x)
    assert w is not None
    assert w.background_map == (0, 1, 2, 3)
    assert w.vertex_map == (0, 1, 2, 3)


def test_shadow_isomorphic_rotation():
    x = singletons_on_c4()
    rot = ShadowGraph(
        cycle_graph(4),
        (frozenset({1}), frozenset({2}), frozenset({3}), frozenset({0})),
        (),
    )
    assert shadow_isomorphic(x, rot) is not None


def test_p4_two_removals_differ():
    p4 = path_graph(4)
    assert shadow_isomorphic(
        build_shadow(p4, (0, 3)), build_shadow(p4, (0, 2))
    ) is None


def test_shadow_iso_respects_sets_and_edges():
    # same background, same set sizes, but shadow adjacency differs
    a = ShadowGraph(
        empty_graph(2),
        (frozenset({0}), frozenset({1})),
        ((0, 1),),
    )
    b = ShadowGraph(
        empty_graph(2),
        (frozenset({0}), frozenset({1})),
        (),
    )
    assert shadow_isomorphic(a, b) is None


def test_shadow_automorphism_orders():
    assert len(shadow_automorphisms(singletons_on_c4())) == 8
    k3_one = build_shadow(PAW, (0, 1, 2))
    assert len(shadow_automorphisms(k3_one)) == 2
    from anchorkit.graphcore import automorphisms

    asym = next(g for g in enumerate_graphs(6) if len(automorphisms(g)) == 1)
    x = ShadowGraph(asym, (frozenset({0}),), ())
    assert len(shadow_automorphisms(x)) == 1


def test_shadow_orbits():
    assert shadow_orbits(singletons_on_c4()) == ((0, 1, 2, 3),)
    # background path 0-1-2 with sets {0} and {1}: the swap 0<->2 cannot
    # carry {0} to {1}, so the two shadow vertices sit in separate orbits
    x = ShadowGraph(path_graph(3), (frozenset({0}), frozenset({1})), ())
    assert shadow_orbits(x) == ((0,), (1,))
    bare = ShadowGraph(path_graph(3), (), ())
    assert shadow_orbits(bare) == ()


def test_shadow_vertex_transitive():
    assert is_shadow_vertex_transitive(singletons_on_c4())
    assert is_shadow_vertex_transitive(build_shadow(path_graph(4), (0, 3)))
    mixed = ShadowGraph(
        path_graph(3), (frozenset({0}), frozenset({0, 1})), ()
    )
    assert not is_shadow_vertex_transitive(mixed)


def test_fixed_shadow_vertex():
    x = ShadowGraph(path_graph(3), (frozenset({1}),), ())
    assert is_fixed_shadow_vertex(x, 0)  # the center is fixed by the swap
    y = ShadowGraph(path_graph(3), (frozenset({0}),), ())
    assert not is_fixed_shadow_vertex(y, 0)


def test_shadow_anchors_cases():
    mixed = ShadowGraph(
        path_graph(3), (frozenset({0}), frozenset({0, 1})), ()
    )
    assert shadow_anchors(mixed) == [(0,), (1,)]
    assert shadow_anchors(singletons_on_c4()) == []


def test_shadow_deck():
    cards = shadow_deck(singletons_on_c4())
    assert len(cards) == 4
    for c in cards[1:]:
        assert shadow_isomorphic(cards[0], c) is not None
    two = build_shadow(path_graph(4), (0, 3))
    ones = shadow_deck(two)
    assert len(ones) == 2 and all(c.m == 1 for c in ones)
    x = build_shadow(PAW, (0, 1, 2))
    (bare,) = shadow_deck(x)
    assert bare.m == 0


def test_text_roundtrip():
    for x in (
        singletons_on_c4(),
        build_shadow(path_graph(4), (0, 3)),
        build_shadow(PAW, (0, 1, 2)),
        ShadowGraph(path_graph(3), (), ()),
    ):
        assert shadow_from_text(shadow_to_text(x)) == x


def test_shadow_validation():
    with pytest.raises(ValueError):
        ShadowGraph(path_graph(3), (frozenset({3}),), ())  # set out of range
    with pytest.raises(ValueError):
        ShadowGraph(path_graph(3), (frozenset({0}),), ((0, 0),))
    with pytest.raises(ValueError):
        ShadowGraph(path_graph(3), (frozenset({0}),), ((0, 1),))  # edge end


def test_unbuild_order_cap():
    big = ShadowGraph(
        complete_graph(16), tuple(frozenset({i}) for i in range(2)), ()
    )
    with pytest.raises(ValueError):
        unbuild_shadow(big)
