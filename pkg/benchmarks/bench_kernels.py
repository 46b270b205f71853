"""Compare the compiled canonical-labeling kernel with the pure-Python one.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

The two kernels are interchangeable (the test suite asserts byte-identical
output); this script only measures throughput, since kernel speed decides
whether the exhaustive sweeps finish in seconds or in hours.
"""

import random
import time
from itertools import combinations

from anchorkit import _purecanon

try:
    from anchorkit import _fastcanon
except ImportError:
    _fastcanon = None


def random_adj(rng: random.Random, n: int, p: float) -> tuple[int, ...]:
    adj = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return tuple(adj)


def workload(seed: int = 20240813):
    rng = random.Random(seed)
    plain = []
    for n, count in ((4, 300), (6, 300), (8, 300), (10, 200), (12, 100)):
        for _ in range(count):
            plain.append((n, random_adj(rng, n, rng.uniform(0.2, 0.8))))
    colored = [
        (n, adj, tuple(rng.randint(0, 2) for _ in range(n)))
        for n, adj in plain[::4]
    ]
    return plain, colored


def bench(label, fn, items, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in items:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    per_call = best / len(items) * 1e6
    print(f"{label:28s} {best:8.3f}s total   {per_call:9.2f} us/call")
    return best


def main() -> None:
    plain, colored = workload()
    print(f"workload: {len(plain)} plain calls, {len(colored)} colored calls")
    pure_plain = bench("pure python, plain", _purecanon.search, plain)
    pure_col = bench("pure python, colored", _purecanon.search, colored)
    if _fastcanon is None:
        print("compiled kernel not built; nothing to compare against")
        return
    fast_plain = bench("compiled, plain", _fastcanon.search, plain)
    fast_col = bench("compiled, colored", _fastcanon.search, colored)
    print(f"speedup, plain:   {pure_plain / fast_plain:6.1f}x")
    print(f"speedup, colored: {pure_col / fast_col:6.1f}x")


if __name__ == "__main__":
    main()
