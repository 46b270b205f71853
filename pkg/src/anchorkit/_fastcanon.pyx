# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython canonical labeling kernel for bitmask graphs on at most 16 vertices.

Mirrors anchorkit._purecanon.search exactly; the two must return
byte-identical results.  See the pure module for the algorithm notes.
"""

from libc.string cimport memcpy

cdef extern from *:
    int __builtin_ctz(unsigned int) nogil

__all__ = ["search"]

ctypedef unsigned long long u64

cdef int MAXN = 16


cdef void _rank_inplace(int n, int* colors) noexcept:
    # dense ranks, smallest value -> 0
    cdef int i, j, v, r
    cdef int vals[16]
    cdef int order[16]
    cdef int k = 0
    cdef bint seen
    for i in range(n):
        seen = False
        for j in range(k):
            if vals[j] == colors[i]:
                seen = True
                break
        if not seen:
            vals[k] = colors[i]
            k += 1
    # insertion sort the distinct values
    for i in range(1, k):
        v = vals[i]
        j = i - 1
        while j >= 0 and vals[j] > v:
            vals[j + 1] = vals[j]
            j -= 1
        vals[j + 1] = v
    for i in range(n):
        for r in range(k):
            if vals[r] == colors[i]:
                colors[i] = r
                break


cdef void _refine(int n, unsigned int* adj, int* colors) noexcept:
    # equitable refinement; signature of v = (color, neighbor color counts)
    cdef int sig[16][17]
    cdef int idx[16]
    cdef int ranks[16]
    cdef int v, u, i, j, c, t, cmp_res, r
    cdef unsigned int m
    cdef bint changed = True
    _rank_inplace(n, colors)
    while changed:
        for v in range(n):
            sig[v][0] = colors[v]
            for c in range(n):
                sig[v][1 + c] = 0
            m = adj[v]
            while m:
                u = __builtin_ctz(m)
                m &= m - 1
                sig[v][1 + colors[u]] += 1
        # insertion sort vertex indices by signature (lex over 1+n ints)
        for v in range(n):
            idx[v] = v
        for i in range(1, n):
            t = idx[i]
            j = i - 1
            while j >= 0:
                cmp_res = 0
                for c in range(n + 1):
                    if sig[idx[j]][c] != sig[t][c]:
                        cmp_res = 1 if sig[idx[j]][c] > sig[t][c] else -1
                        break
                if cmp_res > 0:
                    idx[j + 1] = idx[j]
                    j -= 1
                else:
                    break
            idx[j + 1] = t
        # assign dense ranks along the sorted order
        r = 0
        ranks[idx[0]] = 0
        for i in range(1, n):
            cmp_res = 0
            for c in range(n + 1):
                if sig[idx[i]][c] != sig[idx[i - 1]][c]:
                    cmp_res = 1
                    break
            if cmp_res:
                r += 1
            ranks[idx[i]] = r
        changed = False
        for v in range(n):
            if ranks[v] != colors[v]:
                changed = True
            colors[v] = ranks[v]


cdef class _Searcher:
    cdef int n
    cdef unsigned int adj[16]
    cdef bint has_best, has_first
    cdef u64 best_hi, best_lo, first_hi, first_lo
    cdef int best_perm[16]
    cdef int first_perm[16]
    cdef list gens

    cdef void record(self, int* ref_perm, int* perm):
        cdef int i
        cdef int sigma[16]
        cdef bint ident = True
        for i in range(self.n):
            sigma[ref_perm[i]] = perm[i]
        for i in range(self.n):
            if sigma[i] != i:
                ident = False
                break
        if ident:
            return
        tup = tuple([sigma[i] for i in range(self.n)])
        if tup not in self.gens:
            self.gens.append(tup)

    cdef void leaf(self, int* colors):
        cdef int n = self.n
        cdef int perm[16]
        cdef int v, i, j, pj
        cdef u64 hi = 0, lo = 0
        cdef u64 bit
        for v in range(n):
            perm[colors[v]] = v
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                bit = (self.adj[perm[i]] >> pj) & 1
                hi = (hi << 1) | (lo >> 63)
                lo = (lo << 1) | bit
        if not self.has_first:
            self.has_first = True
            self.first_hi = hi
            self.first_lo = lo
            memcpy(self.first_perm, perm, n * sizeof(int))
        elif hi == self.first_hi and lo == self.first_lo:
            self.record(self.first_perm, perm)
        if (not self.has_best) or hi < self.best_hi or (
            hi == self.best_hi and lo < self.best_lo
        ):
            self.has_best = True
            self.best_hi = hi
            self.best_lo = lo
            memcpy(self.best_perm, perm, n * sizeof(int))
        elif hi == self.best_hi and lo == self.best_lo:
            self.record(self.best_perm, perm)

    cdef bint pruned(self, int v, int* tried, int ntried, int* prefix, int depth):
        cdef int n = self.n
        cdef int parent[16]
        cdef int i, x, rx, ry, p
        cdef bint fixes
        if ntried == 0:
            return False
        for i in range(n):
            parent[i] = i
        for g in self.gens:
            fixes = True
            for i in range(depth):
                p = prefix[i]
                if <int> g[p] != p:
                    fixes = False
                    break
            if not fixes:
                continue
            for x in range(n):
                rx = x
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = <int> g[x]
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
        rx = v
        while parent[rx] != rx:
            rx = parent[rx]
        for i in range(ntried):
            ry = tried[i]
            while parent[ry] != ry:
                ry = parent[ry]
            if ry == rx:
                return True
        return False

    cdef void dfs(self, int* colors, int* prefix, int depth):
        cdef int n = self.n
        cdef int sizes[16]
        cdef int child[16]
        cdef int tried[16]
        cdef int newprefix[16]
        cdef int c, v, target, ntried
        for c in range(n):
            sizes[c] = 0
        for v in range(n):
            sizes[colors[v]] += 1
        target = -1
        for c in range(n):
            if sizes[c] > 1:
                target = c
                break
        if target == -1:
            self.leaf(colors)
            return
        ntried = 0
        memcpy(newprefix, prefix, depth * sizeof(int))
        for v in range(n):
            if colors[v] != target:
                continue
            if self.pruned(v, tried, ntried, prefix, depth):
                continue
            for c in range(n):
                child[c] = 2 * colors[c]
            child[v] -= 1
            _refine(n, self.adj, child)
            newprefix[depth] = v
            self.dfs(child, newprefix, depth + 1)
            tried[ntried] = v
            ntried += 1


def search(int n, adj, colors=None):
    """Canonical search.  Returns (code, perm, generators).

    Same contract as anchorkit._purecanon.search.
    """
    if not 1 <= n <= MAXN:
        raise ValueError(f"order out of range for kernel: {n}")
    cdef _Searcher s = _Searcher()
    cdef int start[16]
    cdef int prefix[16]
    cdef int i
    s.n = n
    for i in range(n):
        s.adj[i] = <unsigned int> adj[i]
    s.gens = []
    s.has_best = False
    s.has_first = False
    if colors is None:
        for i in range(n):
            start[i] = 0
    else:
        for i in range(n):
            start[i] = <int> colors[i]
    _refine(n, s.adj, start)
    s.dfs(start, prefix, 0)
    cdef int nbits = n * (n - 1) // 2
    cdef int nbytes = (nbits + 7) // 8
    code_int = (int(s.best_hi) << 64) | int(s.best_lo)
    code = code_int.to_bytes(nbytes, "big") if nbytes else b""
    perm = tuple([s.best_perm[i] for i in range(n)])
    return code, perm, tuple(s.gens)
