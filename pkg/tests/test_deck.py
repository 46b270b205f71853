import pytest

from anchorkit.deck import (
    Deck,
    DeckFormatError,
    IllegitimateDeckError,
    deck_of,
    decks_equal,
    direct_count,
    format_deck,
    kelly_count,
    parse_deck,
    read_deck_file,
    write_deck_file,
)
from anchorkit.graphcore import (
    Graph6Error,
    SimpleGraph,
    canonical_key,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    isomorphic,
    parse_graph6,
    path_graph,
    star_graph,
)

import brute

PAW = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
K2 = complete_graph(2)
K1 = complete_graph(1)


def test_deck_of_known():
    k3 = deck_of(complete_graph(3))
    assert all(isomorphic(c, K2) for c in k3.cards)
    p3 = deck_of(path_graph(3))
    kinds = sorted(canonical_key(c) for c in p3.cards)
    assert kinds.count(canonical_key(K2)) == 2
    assert kinds.count(canonical_key(empty_graph(2))) == 1
    c5 = deck_of(cycle_graph(5))
    assert all(isomorphic(c, path_graph(4)) for c in c5.cards)


def test_deck_shape_validation():
    with pytest.raises(ValueError):
        deck_of(complete_graph(2))  # below the minimum order
    with pytest.raises(ValueError):
        Deck((K2, K2))  # fewer cards than order demands
    with pytest.raises(ValueError):
        Deck((K2, K2, path_graph(3)))  # mixed card orders


def test_decks_equal():
    g = PAW
    relabeled = SimpleGraph.from_edges(4, [(3, 2), (3, 1), (2, 1), (3, 0)])
    assert decks_equal(deck_of(g), deck_of(relabeled))
    assert not decks_equal(
        deck_of(cycle_graph(4)), deck_of(disjoint_union(K2, K2))
    )
    assert not decks_equal(deck_of(complete_graph(3)), deck_of(path_graph(3)))


def test_deck_signature_order_free():
    d = deck_of(PAW)
    shuffled = Deck(tuple(reversed(d.cards)))
    assert d.signature() == shuffled.signature()
    assert decks_equal(d, shuffled)


def test_kelly_known_counts():
    assert kelly_count(K2, deck_of(cycle_graph(4))) == 4
    assert kelly_count(path_graph(3), deck_of(cycle_graph(5))) == 5
    for g in (PAW, cycle_graph(5), star_graph(3)):
        assert kelly_count(K1, deck_of(g)) == g.n


def test_kelly_matches_direct_count():
    for g in (PAW, cycle_graph(5), path_graph(5), disjoint_union(K2, path_graph(3))):
        d = deck_of(g)
        for h in (K1, K2, path_graph(3), complete_graph(3), empty_graph(2)):
            if h.n < g.n:
                assert kelly_count(h, d) == direct_count(h, g)


def test_kelly_rejects_illegitimate():
    cards = list(deck_of(cycle_graph(4)).cards)
    cards[0] = disjoint_union(K2, K1)  # one bogus card
    with pytest.raises(IllegitimateDeckError):
        kelly_count(K2, Deck(tuple(cards)))


def test_direct_count_known():
    assert direct_count(complete_graph(3), complete_graph(4)) == 4
    assert direct_count(path_graph(4), cycle_graph(5)) == 5
    assert direct_count(K2, PAW) == 4


def test_direct_count_vs_brute():
    for g in (PAW, cycle_graph(5), star_graph(4)):
        for h in (K1, K2, path_graph(3), complete_graph(3)):
            assert direct_count(h, g) == brute.count_induced_brute(h, g)


def test_format_roundtrip(tmp_path):
    d = deck_of(PAW)
    text = format_deck(d)
    assert text.splitlines()[0] == "n=4"
    assert len(text.splitlines()) == 5
    back = parse_deck(text)
    assert decks_equal(back, d)
    path = tmp_path / "paw.deck"
    write_deck_file(path, d)
    assert decks_equal(read_deck_file(path), d)


@pytest.mark.parametrize(
    "text",
    [
        "",  # no header
        "n=four\nA_\nA_\nA_\nA_",  # unparseable order
        "n=4\nA_\nA_\nA_",  # too few cards
        "n=4\nA_\nA_\nA_\nA_\nA_",  # too many cards
        "n=4\nBw\nA_\nA_\nA_",  # card order mismatch
        "n=4\nA_\nA_\nA_\n!!",  # bad graph6 inside
    ],
)
def test_parse_deck_errors(text):
    with pytest.raises((DeckFormatError, Graph6Error)):
        parse_deck(text)


def test_parse_deck_error_types():
    with pytest.raises(DeckFormatError):
        parse_deck("n=4\nA_\nA_\nA_")
    with pytest.raises(DeckFormatError):
        parse_deck("first line\nA_\nA_\nA_")


def test_card_and_graph6_integration():
    text = format_deck(deck_of(parse_graph6("DQc")))
    d = parse_deck(text)
    assert d.order == 5
    assert len(d.cards) == 5
