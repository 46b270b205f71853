"""Decks of one-vertex-deleted cards, subgraph counting, and deck files.

A deck of an order-n graph is the multiset of its n cards; card i is the
induced subgraph on all vertices except i, so original vertex v maps to card
index v when v < i and v - 1 when v > i.

The counting identity used throughout: for a proper shape h with k < n
vertices, every induced copy of h in g survives in exactly n - k cards, so
the copy count of h in g equals the card total divided by n - k.  A deck
whose card total is not divisible by n - k cannot come from any graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphcore import (
    SimpleGraph,
    canonical_key,
    induced_subgraph,
    parse_graph6,
    subgraph_census,
    write_graph6,
)


class IllegitimateDeckError(ValueError):
    """The deck is inconsistent with every graph (divisibility failure)."""


class DeckFormatError(ValueError):
    """Malformed deck file."""


@dataclass(frozen=True)
class Deck:
    """A multiset of cards; order is the number of cards (= original order).

    Cards are stored concretely (not just as keys) because locating anchors
    inside cards needs actual vertex sets.
    """

    cards: tuple[SimpleGraph, ...]

    def __post_init__(self) -> None:
        if len(self.cards) < 3:
            raise ValueError("a deck needs at least 3 cards")
        n = len(self.cards)
        for c in self.cards:
            if c.n != n - 1:
                raise ValueError(
                    f"card of order {c.n} in a deck of {n} cards (want {n - 1})"
                )

    @property
    def order(self) -> int:
        return len(self.cards)

    @cached_property
    def key_counts(self) -> dict[bytes, int]:
        counts: dict[bytes, int] = {}
        for c in self.cards:
            k = canonical_key(c)
            counts[k] = counts.get(k, 0) + 1
        return counts

    def signature(self) -> bytes:
        """Order-independent fingerprint: sorted card keys, concatenated."""
        return b"".join(sorted(canonical_key(c) for c in self.cards))


def deck_of(g: SimpleGraph) -> Deck:
    """The deck of g; card i is g minus vertex i.  Requires order >= 3."""
    if g.n < 3:
        raise ValueError(f"deck needs order >= 3, got {g.n}")
    full = (1 << g.n) - 1
    cards = []
    for v in range(g.n):
        sub, _ = induced_subgraph(g, _mask_verts(full ^ (1 << v)))
        cards.append(sub)
    return Deck(tuple(cards))


def _mask_verts(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & (-mask)
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def decks_equal(a: Deck, b: Deck) -> bool:
    """Multiset equality up to isomorphism of the cards."""
    return a.order == b.order and a.key_counts == b.key_counts


def direct_count(h: SimpleGraph, g: SimpleGraph) -> int:
    """Number of vertex subsets of g inducing a graph isomorphic to h."""
    if h.n > g.n:
        return 0
    return subgraph_census(g).get(canonical_key(h), 0)


def kelly_count(h: SimpleGraph, d: Deck) -> int:
    """Copy count of the shape h in the deck's unknown source graph.

    Exact integer division; a remainder means no graph has this deck.
    """
    n = d.order
    if not 1 <= h.n <= n - 1:
        raise ValueError(f"shape order must be in 1..{n - 1}, got {h.n}")
    total = sum(direct_count(h, card) for card in d.cards)
    div = n - h.n
    if total % div:
        raise IllegitimateDeckError(
            f"card total {total} for a {h.n}-vertex shape is not divisible "
            f"by {div}; no order-{n} graph has this deck"
        )
    return total // div


# ---------------------------------------------------------------------------
# deck files: header line "n=<order>", then n graph6 card lines
# ---------------------------------------------------------------------------


def format_deck(d: Deck) -> str:
    lines = [f"n={d.order}"]
    lines.extend(write_graph6(c) for c in d.cards)
    return "\n".join(lines) + "\n"


def parse_deck(text: str) -> Deck:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DeckFormatError("deck file: empty")
    head = lines[0]
    if not head.startswith("n="):
        raise DeckFormatError("deck file: first line must be n=<order>")
    try:
        n = int(head[2:])
    except ValueError as exc:
        raise DeckFormatError(f"deck file: bad order {head[2:]!r}") from exc
    body = lines[1:]
    if len(body) != n:
        raise DeckFormatError(
            f"deck file: expected {n} cards, found {len(body)}"
        )
    cards = tuple(parse_graph6(ln) for ln in body)
    try:
        return Deck(cards)
    except ValueError as exc:
        raise DeckFormatError(f"deck file: {exc}") from exc


def read_deck_file(path) -> Deck:
    with open(path, encoding="ascii") as fh:
        return parse_deck(fh.read())


def write_deck_file(path, d: Deck) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_deck(d))
