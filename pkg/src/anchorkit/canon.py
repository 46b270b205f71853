"""Kernel selection and canonical-labeling primitives.

The compiled kernel (anchorkit._fastcanon) is preferred; the pure-Python twin
(anchorkit._purecanon) is used when the extension is unavailable or when
ANCHORKIT_PURE is set in the environment.  Both expose the same ``search``
and return byte-identical results.

Key formats produced here:

* plain key:    bytes([n]) + minimal upper-triangle code
* colored key:  bytes([n]) + 0xff + per-position color values of the minimal
                labeling (8 bytes each, big-endian signed) + code

A colored key is equal for two colored graphs iff a color-preserving
isomorphism exists: the code pins the adjacency matrix of the minimal
labeling and the color block pins the color of every position in it.
"""

from __future__ import annotations

import os
import struct
from functools import lru_cache

if os.environ.get("ANCHORKIT_PURE"):
    from ._purecanon import search

    KERNEL = "python"
else:
    try:
        from ._fastcanon import search  # type: ignore[no-redef]

        KERNEL = "cython"
    except ImportError:
        from ._purecanon import search  # type: ignore[no-redef]

        KERNEL = "python"

Permutation = tuple[int, ...]


@lru_cache(maxsize=1 << 15)
def search_plain(n: int, adj: tuple[int, ...]):
    """Cached canonical search with trivial initial coloring."""
    return search(n, adj)


@lru_cache(maxsize=1 << 12)
def search_colored(n: int, adj: tuple[int, ...], colors: tuple[int, ...]):
    """Cached canonical search respecting an initial coloring."""
    return search(n, adj, colors)


def plain_key(n: int, adj: tuple[int, ...]) -> bytes:
    code, _, _ = search_plain(n, adj)
    return bytes([n]) + code


def colored_key(n: int, adj: tuple[int, ...], colors: tuple[int, ...]) -> bytes:
    code, perm, _ = search_colored(n, adj, colors)
    leafcolors = struct.pack(f">{n}q", *(colors[v] for v in perm))
    return bytes([n, 0xFF]) + leafcolors + code


def code_of_key(key: bytes) -> bytes:
    """Strip the order byte from a plain key, returning the packed code."""
    return key[1:]


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(i) = a[b[i]]."""
    return tuple(a[b[i]] for i in range(len(a)))


def invert(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def close_group(n: int, gens: tuple[Permutation, ...]) -> tuple[Permutation, ...]:
    """Full group generated by gens, as a sorted tuple (identity included)."""
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                c = compose(a, g)
                if c not in group:
                    group.add(c)
                    fresh.append(c)
        frontier = fresh
    return tuple(sorted(group))


def orbits_from_generators(
    n: int, gens: tuple[Permutation, ...]
) -> tuple[tuple[int, ...], ...]:
    """Vertex orbits of the generated group, sorted by smallest member."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            rv, ru = find(v), find(g[v])
            if rv != ru:
                parent[rv] = ru
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(c)) for c in cells.values()))


def set_orbit(
    gens: tuple[Permutation, ...], s: frozenset[int]
) -> tuple[frozenset[int], ...]:
    """Orbit of a vertex set under the generated group, sorted for determinism."""
    seen = {s}
    frontier = [s]
    while frontier:
        fresh = []
        for t in frontier:
            for g in gens:
                img = frozenset(g[v] for v in t)
                if img not in seen:
                    seen.add(img)
                    fresh.append(img)
        frontier = fresh
    return tuple(sorted(seen, key=sorted))
