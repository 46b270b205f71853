"""Exhaustive isomorphism-class enumeration for small orders.

Graphs of order n are produced by extending every order n-1 class with one
new vertex over all 2^(n-1) attachment masks and deduplicating by canonical
key.  Every order-n graph arises this way because deleting any vertex of it
leaves an order n-1 class that was enumerated.  Free trees grow the same way
but only by attaching a leaf, since deleting a leaf of a tree is again a
tree.  Results are canonical forms sorted by key, so the order is stable.

Class counts, frozen as test oracles: 1, 2, 4, 11, 34, 156, 1044, 12346,
274668 for n = 1..9; free trees 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551
for n = 1..12.
"""

from __future__ import annotations

from . import canon
from .graphcore import SimpleGraph, _graph_from_code, canonical_key

MAX_ENUM_ORDER = 10
MAX_TREE_ORDER = 12

_graph_cache: dict[int, tuple[SimpleGraph, ...]] = {}
_tree_cache: dict[int, tuple[SimpleGraph, ...]] = {}


def enumerate_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """All isomorphism classes of order n, as canonical forms sorted by key.

    Order 9 takes minutes of CPU and a few hundred MB; order 10 is the hard
    cap and only sensible on generous hardware.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"enumeration supports orders 1..{MAX_ENUM_ORDER}")
    got = _graph_cache.get(n)
    if got is not None:
        return got
    if n == 1:
        out = (SimpleGraph(1, (0,)),)
    else:
        parents = enumerate_graphs(n - 1)
        search = canon.search
        seen = set()
        codes = []
        top = n - 1
        for p in parents:
            base = p.adj
            for mask in range(1 << top):
                adj = tuple(
                    base[v] | (((mask >> v) & 1) << top) for v in range(top)
                ) + (mask,)
                code, _, _ = search(n, adj)
                if code not in seen:
                    seen.add(code)
                    codes.append(code)
        codes.sort()
        out = tuple(_graph_from_code(n, c) for c in codes)
    _graph_cache[n] = out
    return out


def enumerate_trees(n: int) -> tuple[SimpleGraph, ...]:
    """All free trees of order n, as canonical forms sorted by key."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree enumeration supports orders 1..{MAX_TREE_ORDER}")
    got = _tree_cache.get(n)
    if got is not None:
        return got
    if n == 1:
        out = (SimpleGraph(1, (0,)),)
    else:
        parents = enumerate_trees(n - 1)
        top = n - 1
        seen = set()
        codes = []
        for p in parents:
            for v in range(top):
                adj = tuple(
                    p.adj[u] | ((1 << top) if u == v else 0) for u in range(top)
                ) + (1 << v,)
                code, _, _ = canon.search(n, adj)
                if code not in seen:
                    seen.add(code)
                    codes.append(code)
        codes.sort()
        out = tuple(_graph_from_code(n, c) for c in codes)
    _tree_cache[n] = out
    return out


def class_index(n: int) -> dict[bytes, int]:
    """Canonical key -> position in enumerate_graphs(n)."""
    return {canonical_key(g): i for i, g in enumerate(enumerate_graphs(n))}
