"""Simple graphs on at most 16 vertices: bitmask adjacency, graph6 codec,
canonical keys, automorphisms, orbits, induced subgraphs.

Vertices are 0..n-1.  ``adj[v]`` is a bitmask with bit ``u`` set iff v ~ u.
The order cap keeps every adjacency row inside one machine word, which is
what the canonical-labeling kernel is built around.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import canon
from .canon import Permutation

MAX_ORDER = 16

CanonicalKey = bytes


class Graph6Error(ValueError):
    """Raised for malformed or out-of-range graph6 input."""


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"self loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if ((self.adj[v] >> u) & 1) != ((self.adj[u] >> v) & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u in range(self.n) if (self.adj[v] >> u) & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (self.adj[u] >> v) & 1
        )

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(
            self.n, tuple((full ^ self.adj[v]) & ~(1 << v) for v in range(self.n))
        )

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & (-m)
                m ^= b
                grow |= self.adj[b.bit_length() - 1]
            frontier = grow & ~seen
            seen |= grow
        return seen == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.edge_count() == self.n - 1 and self.is_connected()


# ---------------------------------------------------------------------------
# graph6 codec (bit-exact; optional >>graph6<< header; orders 1..16)
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> SimpleGraph:
    """Decode one graph6 line.  Raises Graph6Error with a distinct message for
    bad characters, truncated or surplus data, nonzero padding, and orders
    outside 1..16."""
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if not line:
        raise Graph6Error("graph6: empty input")
    vals = []
    for ch in line:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"graph6: invalid character {ch!r}")
        vals.append(o - 63)
    if vals[0] == 63:
        # multi-byte order encoding starts at n >= 63, beyond our cap
        raise Graph6Error("graph6: order out of supported range (1..16)")
    n = vals[0]
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"graph6: order out of supported range (1..16), got {n}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[1:]
    if len(body) < need:
        raise Graph6Error("graph6: truncated data")
    if len(body) > need:
        raise Graph6Error("graph6: surplus data")
    bits = 0
    for v in body:
        bits = (bits << 6) | v
    pad = 6 * need - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("graph6: nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return SimpleGraph(n, tuple(adj))


def write_graph6(g: SimpleGraph, header: bool = False) -> str:
    """Encode in minimal-length graph6 form, preserving the labeling."""
    n = g.n
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | ((g.adj[i] >> j) & 1)
    need = (nbits + 5) // 6
    bits <<= 6 * need - nbits
    chars = [chr(63 + n)]
    for k in range(need - 1, -1, -1):
        chars.append(chr(63 + ((bits >> (6 * k)) & 63)))
    out = "".join(chars)
    return _HEADER + out if header else out


# ---------------------------------------------------------------------------
# canonical labeling, automorphisms, orbits
# ---------------------------------------------------------------------------


def canonical_key(g: SimpleGraph) -> CanonicalKey:
    """Isomorphism-complete key: equal keys iff isomorphic graphs."""
    return canon.plain_key(g.n, g.adj)


def canonical_label(g: SimpleGraph) -> tuple[SimpleGraph, Permutation]:
    """Canonical form and the permutation mapping positions to g's vertices."""
    code, perm, _ = canon.search_plain(g.n, g.adj)
    return _graph_from_code(g.n, code), perm


def canonical_graph6(g: SimpleGraph) -> str:
    return write_graph6(canonical_label(g)[0])


def _graph_from_code(n: int, code: bytes) -> SimpleGraph:
    bits = int.from_bytes(code, "big")
    nbits = n * (n - 1) // 2
    adj = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return SimpleGraph(n, tuple(adj))


def isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return g.n == h.n and canonical_key(g) == canonical_key(h)


def automorphism_generators(g: SimpleGraph) -> tuple[Permutation, ...]:
    """Generators of Aut(g) as discovered by the canonical search."""
    _, _, gens = canon.search_plain(g.n, g.adj)
    return gens


@lru_cache(maxsize=1 << 12)
def _group_cached(n: int, adj: tuple[int, ...]) -> tuple[Permutation, ...]:
    _, _, gens = canon.search_plain(n, adj)
    return canon.close_group(n, gens)


def automorphisms(g: SimpleGraph) -> tuple[Permutation, ...]:
    """The full automorphism group, sorted; contains the identity and is
    closed under composition and inverse."""
    return _group_cached(g.n, g.adj)


def orbits(g: SimpleGraph) -> tuple[tuple[int, ...], ...]:
    """Vertex orbits under Aut(g), each sorted, ordered by smallest member."""
    return canon.orbits_from_generators(g.n, automorphism_generators(g))


def is_vertex_transitive(g: SimpleGraph) -> bool:
    return len(orbits(g)) == 1


def relabel(g: SimpleGraph, perm: Permutation) -> SimpleGraph:
    """Graph whose position i holds g's vertex perm[i]."""
    n = g.n
    adj = [0] * n
    for i in range(n):
        for j in range(n):
            if (g.adj[perm[i]] >> perm[j]) & 1:
                adj[i] |= 1 << j
    return SimpleGraph(n, tuple(adj))


def induced_subgraph(
    g: SimpleGraph, s
) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Induced subgraph on vertex set s plus the index map back to g:
    new index i corresponds to original vertex map[i] (ascending)."""
    verts = sorted(s)
    if not verts:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n or len(set(verts)) != len(verts):
        raise ValueError("vertex set out of range or with repeats")
    k = len(verts)
    adj = [0] * k
    for i, v in enumerate(verts):
        for j, u in enumerate(verts):
            if (g.adj[v] >> u) & 1:
                adj[i] |= 1 << j
    return SimpleGraph(k, tuple(adj)), tuple(verts)


def _mask_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & (-mask)
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


@lru_cache(maxsize=128)
def _mask_key_table(g: SimpleGraph) -> tuple[bytes, ...]:
    """Canonical key of the induced subgraph for every nonempty vertex mask.
    Index is the mask itself; entry 0 is b''."""
    n = g.n
    table = [b""] * (1 << n)
    for mask in range(1, 1 << n):
        verts = _mask_vertices(mask)
        k = len(verts)
        sub = [0] * k
        for i, v in enumerate(verts):
            row = g.adj[v]
            for j, u in enumerate(verts):
                if (row >> u) & 1:
                    sub[i] |= 1 << j
        code, _, _ = canon.search(k, tuple(sub))
        table[mask] = bytes([k]) + code
    return tuple(table)


def induced_key(g: SimpleGraph, mask: int) -> bytes:
    """Canonical key of the subgraph induced by the vertex bitmask."""
    return _mask_key_table(g)[mask]


@lru_cache(maxsize=128)
def subgraph_census(g: SimpleGraph) -> dict[bytes, int]:
    """Number of vertex subsets inducing each isomorphism class, keyed by
    canonical key (the key embeds the order, so sizes never collide)."""
    counts: dict[bytes, int] = {}
    for key in _mask_key_table(g)[1:]:
        counts[key] = counts.get(key, 0) + 1
    return counts


def distance_matrix(g: SimpleGraph) -> tuple[tuple[int, ...], ...]:
    """All-pairs shortest-path distances; -1 where unreachable."""
    n = g.n
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & (-m)
                m ^= b
                grow |= g.adj[b.bit_length() - 1]
            frontier = grow & ~seen
            seen |= grow
            d += 1
            mm = frontier
            while mm:
                b = mm & (-mm)
                mm ^= b
                dist[b.bit_length() - 1] = d
        rows.append(tuple(dist))
    return tuple(rows)


# small named graphs used across tests and docs


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    n = g.n + h.n
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return SimpleGraph(n, tuple(adj))
