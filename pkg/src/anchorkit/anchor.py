"""Anchors: induced subgraphs pinned down by structure or by connection.

A vertex set is a structural anchor when no other subset induces an
isomorphic graph.  When copies exist, the set is still a connective anchor if
its shadow graph is isomorphic to no other copy's shadow graph: the copy is
identified by how the rest of the graph hangs onto it.  Graphs with no
anchor of any size are balanced; graphs whose anchors all have n-1 vertices
(with at least one) are quasi-balanced.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

from .graphcore import (
    SimpleGraph,
    automorphisms,
    induced_key,
    induced_subgraph,
    is_vertex_transitive,
    orbits,
    subgraph_census,
)
from .shadow import build_shadow, shadow_isomorphic


class AnchorVerdict(str, Enum):
    STRUCTURAL = "structural"
    CONNECTIVE = "connective"
    NOT_ANCHOR = "not_anchor"


class BalanceClass(str, Enum):
    VERTEX_TRANSITIVE = "vertex_transitive"
    BALANCED_NOT_VT = "balanced_not_vt"
    QUASI_BALANCED = "quasi_balanced"
    HAS_SMALL_ANCHOR = "has_small_anchor"


@dataclass(frozen=True)
class AnchorWitness:
    vertices: tuple[int, ...]
    kind: AnchorVerdict
    key: bytes


def _mask_of(s) -> int:
    return sum(1 << v for v in s)


def copies_of(g: SimpleGraph, s) -> list[tuple[int, ...]]:
    """All vertex subsets of g inducing a graph isomorphic to g[s],
    lexicographic, including s itself."""
    verts = tuple(sorted(s))
    key = induced_key(g, _mask_of(verts))
    return [
        c for c in combinations(range(g.n), len(verts))
        if induced_key(g, _mask_of(c)) == key
    ]


def find_anchors(g: SimpleGraph, k: int) -> list[AnchorWitness]:
    """Structural anchors with k vertices, in lexicographic vertex order."""
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"anchor size must be in 1..{g.n - 1}, got {k}")
    census = subgraph_census(g)
    out = []
    for c in combinations(range(g.n), k):
        key = induced_key(g, _mask_of(c))
        if census[key] == 1:
            out.append(AnchorWitness(c, AnchorVerdict.STRUCTURAL, key))
    return out


def anchor_sizes(g: SimpleGraph) -> dict[int, int]:
    """Number of structural anchors at each size 1..n-1 (zeros included)."""
    census = subgraph_census(g)
    sizes = dict.fromkeys(range(1, g.n), 0)
    for mask in range(1, (1 << g.n) - 1):
        k = bin(mask).count("1")
        if k < g.n and census[induced_key(g, mask)] == 1:
            sizes[k] += 1
    return sizes


@lru_cache(maxsize=4096)
def _smallest_anchor_size(g: SimpleGraph) -> int | None:
    """Smallest size with a structural anchor, None when balanced."""
    census = subgraph_census(g)
    best: int | None = None
    for mask in range(1, (1 << g.n) - 1):
        if census[induced_key(g, mask)] == 1:
            k = bin(mask).count("1")
            if best is None or k < best:
                best = k
    return best


def is_balanced(g: SimpleGraph) -> bool:
    """No structural anchor at any size."""
    return _smallest_anchor_size(g) is None


def is_quasi_balanced(g: SimpleGraph) -> bool:
    """Anchors exist and all of them have n-1 vertices."""
    return _smallest_anchor_size(g) == g.n - 1


def balance_class(g: SimpleGraph) -> BalanceClass:
    if is_vertex_transitive(g):
        return BalanceClass.VERTEX_TRANSITIVE
    k = _smallest_anchor_size(g)
    if k is None:
        return BalanceClass.BALANCED_NOT_VT
    if k == g.n - 1:
        return BalanceClass.QUASI_BALANCED
    return BalanceClass.HAS_SMALL_ANCHOR


def anchor_verdict(g: SimpleGraph, s) -> AnchorVerdict:
    """Classify the copy of g[s] at s: structural when it is the only copy,
    connective when no other copy's shadow graph matches this one's."""
    verts = tuple(sorted(s))
    if not 1 <= len(verts) <= g.n - 1:
        raise ValueError("anchor candidate must be proper and nonempty")
    copies = copies_of(g, verts)
    if len(copies) == 1:
        return AnchorVerdict.STRUCTURAL
    mine = build_shadow(g, verts)
    for other in copies:
        if other == verts:
            continue
        if shadow_isomorphic(mine, build_shadow(g, other)) is not None:
            return AnchorVerdict.NOT_ANCHOR
    return AnchorVerdict.CONNECTIVE


def orbit_removal_anchors(
    g: SimpleGraph,
) -> list[tuple[tuple[int, ...], AnchorVerdict]]:
    """Verdict of g minus each orbit.  A NOT_ANCHOR entry is a counterexample
    to the orbit-removal property and is returned rather than suppressed.
    Rejects vertex-transitive input (removal would empty the graph)."""
    if is_vertex_transitive(g):
        raise ValueError("orbit removal needs a non-vertex-transitive graph")
    out = []
    everything = set(range(g.n))
    for orb in orbits(g):
        rest = tuple(sorted(everything - set(orb)))
        out.append((orb, anchor_verdict(g, rest)))
    return out


def maximal_anchors(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Every structural anchor not strictly contained in another structural
    anchor, sorted by size then lexicographically."""
    census = subgraph_census(g)
    masks = [
        m
        for m in range(1, (1 << g.n) - 1)
        if census[induced_key(g, m)] == 1
    ]
    out = []
    for m in masks:
        if not any(m2 != m and m2 & m == m for m2 in masks):
            verts = tuple(v for v in range(g.n) if (m >> v) & 1)
            out.append(verts)
    out.sort(key=lambda t: (len(t), t))
    return out


def extend_to_maximal(g: SimpleGraph, seed) -> AnchorWitness:
    """Grow a structural anchor until no structural anchor strictly contains
    it.  Each step adds the smallest vertex set (ties broken lexicographically)
    whose union with the current anchor is again a structural anchor."""
    current = tuple(sorted(seed))
    census = subgraph_census(g)
    if census[induced_key(g, _mask_of(current))] != 1:
        raise ValueError("seed is not a structural anchor")
    while len(current) < g.n - 1:
        rest = [v for v in range(g.n) if v not in current]
        grown = None
        for add in range(1, len(rest) + 1):
            if len(current) + add > g.n - 1:
                break
            for extra in combinations(rest, add):
                cand = tuple(sorted(current + extra))
                if census[induced_key(g, _mask_of(cand))] == 1:
                    grown = cand
                    break
            if grown:
                break
        if grown is None:
            break
        current = grown
    return AnchorWitness(
        current, AnchorVerdict.STRUCTURAL, induced_key(g, _mask_of(current))
    )


def is_distinguishable_in_deck(g: SimpleGraph, s) -> bool:
    """Conservative deck-level check for a connective anchor at s: the anchor
    set must survive whole in at least two cards, and inside each such card
    the copy must be identifiable up to card automorphism by its shadow
    graph.  Sufficient, not necessary; reports should flag it as such."""
    verts = tuple(sorted(s))
    holders = [v for v in range(g.n) if v not in verts]
    if len(holders) < 2:
        return False
    for dropped in holders:
        keep = [v for v in range(g.n) if v != dropped]
        card, cmap = induced_subgraph(g, keep)
        back = {v: i for i, v in enumerate(cmap)}
        s_in_card = tuple(sorted(back[v] for v in verts))
        copies = copies_of(card, s_in_card)
        mine = build_shadow(card, s_in_card)
        matching = [
            c for c in copies
            if c == s_in_card
            or shadow_isomorphic(mine, build_shadow(card, c)) is not None
        ]
        orbit_imgs = {
            tuple(sorted(a[v] for v in s_in_card)) for a in automorphisms(card)
        }
        if any(c not in orbit_imgs for c in matching):
            return False
    return True
