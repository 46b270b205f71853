"""Pure-Python canonical labeling kernel for bitmask graphs on at most 16 vertices.

This is the reference implementation of the search that anchorkit._fastcanon
reimplements in Cython.  Both must return byte-identical results; the test
suite compares them on exhaustive small-order sweeps.

A graph is given as ``adj``, a tuple of ``n`` ints where bit ``u`` of
``adj[v]`` says ``v ~ u``.  The search explores colorings produced by
iterated equitable refinement and individualization.  Each discrete coloring
is a candidate labeling; its code is the upper-triangle adjacency bit string
read column by column (the graph6 bit order).  The minimum code over all
reachable labelings is a complete isomorphism invariant: equal codes mean the
two graphs relabel to the same adjacency matrix.

Labelings that tie with the current best yield automorphisms.  Those are
collected and reused to prune branches that are images of already-explored
ones under an automorphism fixing the individualized prefix pointwise, which
keeps highly symmetric inputs (complete graphs, unions of isolated vertices)
polynomial instead of factorial.
"""

from __future__ import annotations

__all__ = ["search"]


def _rank(values: list) -> list[int]:
    # Dense ranks, smallest value -> 0.  Ranking keeps color ids canonical:
    # isomorphic colored graphs produce identical rank sequences.
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    # 1-dimensional Weisfeiler-Leman refinement to a stable (equitable)
    # coloring.  Signature of v = (its color, multiset of neighbor colors).
    while True:
        sigs = []
        for v in range(n):
            counts = [0] * n
            m = adj[v]
            while m:
                b = m & (-m)
                m ^= b
                counts[colors[b.bit_length() - 1]] += 1
            sigs.append((colors[v], *counts))
        new = _rank(sigs)
        if new == colors:
            return colors
        colors = new


def search(
    n: int,
    adj: tuple[int, ...],
    colors: tuple[int, ...] | None = None,
) -> tuple[bytes, tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Canonical search.  Returns (code, perm, generators).

    code: packed big-endian upper-triangle bits of the minimal labeling,
    ceil(n(n-1)/2 / 8) bytes.  perm: perm[i] is the original vertex placed at
    canonical position i.  generators: automorphism vertex maps discovered by
    the search; they generate the full (color-preserving) automorphism group.
    """
    if not 1 <= n <= 16:
        raise ValueError(f"order out of range for kernel: {n}")
    init = [0] * n if colors is None else _rank(list(colors))
    start = _refine(n, adj, init)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8

    best_code: list = [None]
    best_perm: list = [None]
    first_code: list = [None]
    first_perm: list = [None]
    gens: list[tuple[int, ...]] = []

    def record(ref_perm: list[int], perm: list[int]) -> None:
        sigma = [0] * n
        for i in range(n):
            sigma[ref_perm[i]] = perm[i]
        tup = tuple(sigma)
        if tup != tuple(range(n)) and tup not in gens:
            gens.append(tup)

    def leaf(colors: list[int]) -> None:
        perm = [0] * n
        for v in range(n):
            perm[colors[v]] = v
        code = 0
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                code = (code << 1) | ((adj[perm[i]] >> pj) & 1)
        # automorphisms are detected against the first leaf ever seen (a
        # stable reference) and against the current best; comparing with the
        # best alone misses generators when the minimum improves midway
        if first_code[0] is None:
            first_code[0] = code
            first_perm[0] = perm
        elif code == first_code[0]:
            record(first_perm[0], perm)
        if best_code[0] is None or code < best_code[0]:
            best_code[0] = code
            best_perm[0] = perm
        elif code == best_code[0]:
            record(best_perm[0], perm)

    def pruned(v: int, tried: list[int], prefix: list[int]) -> bool:
        # v is redundant if some known automorphism fixing the prefix
        # pointwise maps it into the orbit of an already-tried sibling.
        if not tried:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            if all(g[p] == p for p in prefix):
                for x in range(n):
                    rx, ry = find(x), find(g[x])
                    if rx != ry:
                        parent[rx] = ry
        rv = find(v)
        return any(find(u) == rv for u in tried)

    def dfs(colors: list[int], prefix: list[int]) -> None:
        # branch on the first cell (in color order) holding >1 vertex
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target_color = -1
        for c in sorted(sizes):
            if sizes[c] > 1:
                target_color = c
                break
        if target_color == -1:
            leaf(colors)
            return
        cands = [v for v in range(n) if colors[v] == target_color]
        tried: list[int] = []
        for v in cands:
            if pruned(v, tried, prefix):
                continue
            child = [2 * c for c in colors]
            child[v] -= 1
            dfs(_refine(n, adj, _rank(child)), prefix + [v])
            tried.append(v)

    dfs(start, [])
    code_bytes = best_code[0].to_bytes(nbytes, "big") if nbytes else b""
    return code_bytes, tuple(best_perm[0]), tuple(gens)
