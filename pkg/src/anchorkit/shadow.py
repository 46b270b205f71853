"""Shadow graphs: a background graph decorated with set-valued outer vertices.

A shadow graph is a background graph H plus m shadow vertices.  Shadow vertex
i carries a subset of V(H) (possibly empty) and shadow vertices are joined by
shadow edges that are independent of the background edges.  Built from a host
graph g and an induced copy of H, shadow vertex i stands for the i-th outside
vertex and its set is that vertex's neighborhood inside H; the construction
is reversible.

Isomorphism is two-layered: a background isomorphism f plus a bijection of
shadow vertices such that f maps each carried set onto the image's set and
shadow adjacency is preserved.  Comparisons of sub-shadow-graphs of one
shadow graph use automorphisms of the shared background.  Shadow vertices
with equal sets are distinct objects; matching is at the index level.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import canon
from .canon import Permutation
from .graphcore import (
    MAX_ORDER,
    SimpleGraph,
    automorphisms,
    canonical_label,
    canonical_key,
    induced_subgraph,
    parse_graph6,
    write_graph6,
)


@dataclass(frozen=True)
class ShadowGraph:
    background: SimpleGraph
    sets: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        b = self.background.n
        for s in self.sets:
            for v in s:
                if not 0 <= v < b:
                    raise ValueError(f"shadow set mentions background vertex {v}")
        m = len(self.sets)
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < j < m):
                raise ValueError(f"bad shadow edge ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate shadow edge ({i}, {j})")
            seen.add((i, j))

    @property
    def m(self) -> int:
        return len(self.sets)

    def shadow_adj(self) -> tuple[int, ...]:
        adj = [0] * self.m
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    def set_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in s) for s in self.sets)


@dataclass(frozen=True)
class ShadowIso:
    """Witnessing pair: background vertex map plus shadow-vertex bijection."""

    background_map: Permutation
    vertex_map: tuple[int, ...]


def build_shadow(g: SimpleGraph, s) -> ShadowGraph:
    """Shadow graph of g over the induced copy on vertex set s.

    Shadow vertex i is the i-th outside vertex in ascending order; its set is
    that vertex's neighborhood inside s, in the background's indexing.
    """
    bg, verts = induced_subgraph(g, s)
    pos = {v: i for i, v in enumerate(verts)}
    inside = set(verts)
    outside = [v for v in range(g.n) if v not in inside]
    sets = tuple(
        frozenset(pos[u] for u in range(g.n) if u in inside and g.has_edge(v, u))
        for v in outside
    )
    edges = tuple(
        (i, j)
        for i, j in combinations(range(len(outside)), 2)
        if g.has_edge(outside[i], outside[j])
    )
    return ShadowGraph(bg, sets, edges)


def unbuild_shadow(x: ShadowGraph) -> SimpleGraph:
    """Rebuild the host graph: background vertices first, then one vertex per
    shadow vertex wired to its set, with shadow edges among the new vertices."""
    b, m = x.background.n, x.m
    n = b + m
    if n > MAX_ORDER:
        raise ValueError(f"rebuilt order {n} exceeds {MAX_ORDER}")
    adj = list(x.background.adj) + [0] * m
    for i, s in enumerate(x.sets):
        for v in s:
            adj[b + i] |= 1 << v
            adj[v] |= 1 << (b + i)
    for i, j in x.edges:
        adj[b + i] |= 1 << (b + j)
        adj[b + j] |= 1 << (b + i)
    return SimpleGraph(n, tuple(adj))


def _match_vertices(
    x: ShadowGraph, y: ShadowGraph, mapped_sets: list[frozenset[int]]
) -> tuple[int, ...] | None:
    """First shadow-vertex bijection sending mapped_sets[i] to y.sets and
    preserving shadow adjacency, or None.  Lexicographic backtracking."""
    m = x.m
    xadj = x.shadow_adj()
    yadj = y.shadow_adj()
    assign = [-1] * m
    used = [False] * m

    def backtrack(i: int) -> bool:
        if i == m:
            return True
        for t in range(m):
            if used[t] or y.sets[t] != mapped_sets[i]:
                continue
            ok = True
            for k in range(i):
                if ((xadj[i] >> k) & 1) != ((yadj[t] >> assign[k]) & 1):
                    ok = False
                    break
            if ok:
                assign[i] = t
                used[t] = True
                if backtrack(i + 1):
                    return True
                used[t] = False
                assign[i] = -1
        return False

    return tuple(assign) if backtrack(0) else None


def shadow_isomorphic(x: ShadowGraph, y: ShadowGraph) -> ShadowIso | None:
    """First isomorphism between two shadow graphs, or None.

    Deterministic: background isomorphisms are scanned as the canonical
    relabeling composed with the sorted automorphism group of y's background,
    and the vertex bijection search is lexicographic.
    """
    if x.m != y.m or x.background.n != y.background.n:
        return None
    if canonical_key(x.background) != canonical_key(y.background):
        return None
    if sorted(len(s) for s in x.sets) != sorted(len(s) for s in y.sets):
        return None
    if len(x.edges) != len(y.edges):
        return None
    _, px = canonical_label(x.background)
    _, py = canonical_label(y.background)
    # f0 maps x's background onto y's: x vertex px[i] -> y vertex py[i]
    inv_px = canon.invert(px)
    f0 = tuple(py[inv_px[v]] for v in range(x.background.n))
    for alpha in automorphisms(y.background):
        f = canon.compose(alpha, f0)
        mapped = [frozenset(f[v] for v in s) for s in x.sets]
        if sorted(mapped, key=sorted) != sorted(y.sets, key=sorted):
            continue
        vm = _match_vertices(x, y, mapped)
        if vm is not None:
            return ShadowIso(background_map=f, vertex_map=vm)
    return None


def shadow_automorphisms(x: ShadowGraph) -> tuple[ShadowIso, ...]:
    """All self-isomorphisms (background map, shadow-vertex bijection)."""
    out = []
    m = x.m
    xadj = x.shadow_adj()
    for theta in automorphisms(x.background):
        mapped = [frozenset(theta[v] for v in s) for s in x.sets]
        if sorted(mapped, key=sorted) != sorted(x.sets, key=sorted):
            continue
        assign = [-1] * m
        used = [False] * m

        def backtrack(i: int) -> None:
            if i == m:
                out.append(
                    ShadowIso(background_map=theta, vertex_map=tuple(assign))
                )
                return
            for t in range(m):
                if used[t] or x.sets[t] != mapped[i]:
                    continue
                ok = True
                for k in range(i):
                    if ((xadj[i] >> k) & 1) != ((xadj[t] >> assign[k]) & 1):
                        ok = False
                        break
                if ok:
                    assign[i] = t
                    used[t] = True
                    backtrack(i + 1)
                    used[t] = False
                    assign[i] = -1

        backtrack(0)
    return tuple(out)


def shadow_orbits(x: ShadowGraph) -> tuple[tuple[int, ...], ...]:
    """Orbits of shadow vertices under the shadow automorphism group."""
    m = x.m
    parent = list(range(m))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for iso in shadow_automorphisms(x):
        for i in range(m):
            ri, rj = find(i), find(iso.vertex_map[i])
            if ri != rj:
                parent[ri] = rj
    cells: dict[int, list[int]] = {}
    for i in range(m):
        cells.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(sorted(c)) for c in cells.values()))


def is_shadow_vertex_transitive(x: ShadowGraph) -> bool:
    """Single shadow-vertex orbit; vacuously true with no shadow vertices."""
    return x.m == 0 or len(shadow_orbits(x)) == 1


def is_fixed_shadow_vertex(x: ShadowGraph, i: int) -> bool:
    """True iff every background automorphism maps the i-th set onto itself."""
    if not 0 <= i < x.m:
        raise ValueError(f"no shadow vertex {i}")
    s = x.sets[i]
    _, _, gens = canon.search_plain(x.background.n, x.background.adj)
    return all(frozenset(g[v] for v in s) == s for g in gens)


def _distinct_actions(x: ShadowGraph) -> list[Permutation]:
    """Background automorphisms deduplicated by their action on the carried
    sets; sub-shadow-graph comparisons cannot tell duplicates apart."""
    seen = set()
    out = []
    for theta in automorphisms(x.background):
        act = tuple(frozenset(theta[v] for v in s) for s in x.sets)
        if act not in seen:
            seen.add(act)
            out.append(theta)
    return out


def _subset_signature(
    x: ShadowGraph, idxs: tuple[int, ...], actions: list[Permutation]
) -> bytes:
    """Canonical fingerprint of the sub-shadow-graph on idxs, invariant under
    background automorphisms: minimum over actions of the colored key of the
    shadow subgraph whose vertex colors are the transported set masks."""
    k = len(idxs)
    xadj = x.shadow_adj()
    sub = [0] * k
    for a, i in enumerate(idxs):
        for b, j in enumerate(idxs):
            if (xadj[i] >> j) & 1:
                sub[a] |= 1 << b
    sub_t = tuple(sub)
    best = None
    for theta in actions:
        colors = tuple(
            sum(1 << theta[v] for v in x.sets[i]) for i in idxs
        )
        key = canon.colored_key(k, sub_t, colors)
        if best is None or key < best:
            best = key
    return best


def shadow_anchors(x: ShadowGraph) -> list[tuple[int, ...]]:
    """Proper nonempty shadow-vertex subsets whose sub-shadow-graph is
    isomorphic (under background automorphisms) to no other subset of the
    same size.  Sorted by size then lexicographically."""
    m = x.m
    out = []
    actions = _distinct_actions(x)
    for size in range(1, m):
        sigs: dict[bytes, int] = {}
        per_subset = []
        for idxs in combinations(range(m), size):
            sig = _subset_signature(x, idxs, actions)
            sigs[sig] = sigs.get(sig, 0) + 1
            per_subset.append((idxs, sig))
        for idxs, sig in per_subset:
            if sigs[sig] == 1:
                out.append(idxs)
    return out


def shadow_deck(x: ShadowGraph) -> tuple[ShadowGraph, ...]:
    """One-shadow-vertex-deleted shadow graphs, in deletion order.  The
    background is kept whole."""
    out = []
    for i in range(x.m):
        keep = [j for j in range(x.m) if j != i]
        pos = {j: a for a, j in enumerate(keep)}
        out.append(
            ShadowGraph(
                x.background,
                tuple(x.sets[j] for j in keep),
                tuple(
                    (min(pos[a], pos[b]), max(pos[a], pos[b]))
                    for a, b in x.edges
                    if a != i and b != i
                ),
            )
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# text serialization: background graph6 line, then one "v ..." line per
# shadow vertex (background indices, ascending), then "e i j" edge lines
# ---------------------------------------------------------------------------


def shadow_to_text(x: ShadowGraph) -> str:
    lines = [write_graph6(x.background)]
    for s in x.sets:
        lines.append("v" + "".join(f" {v}" for v in sorted(s)))
    for i, j in sorted(x.edges):
        lines.append(f"e {i} {j}")
    return "\n".join(lines) + "\n"


def shadow_from_text(text: str) -> ShadowGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("shadow text: empty")
    bg = parse_graph6(lines[0])
    sets = []
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "v":
            sets.append(frozenset(int(p) for p in parts[1:]))
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ValueError(f"shadow text: bad edge line {ln!r}")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"shadow text: unrecognized line {ln!r}")
    return ShadowGraph(bg, tuple(sets), tuple(edges))
