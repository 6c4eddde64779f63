"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python benchmarks/bench_kernels.py [--orders 7,8,9] [--samples 2000]

Times the two hot kernels (canonical labeling and the isolating-set
decision) on identical random graph batches, plus one end-to-end
enumeration at a small order through each backend.
"""

from __future__ import annotations

import argparse
import random
import time

from isolab import _core, _pykernels


def random_batch(n: int, count: int, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        adj = [0] * n
        p = rng.choice([0.2, 0.4, 0.6])
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        out.append(tuple(adj))
    return out


def time_kernel(fn, batch, n, reps=1) -> float:
    t0 = time.perf_counter()
    for _ in range(reps):
        for adj in batch:
            fn(adj, n)
    return (time.perf_counter() - t0) / (len(batch) * reps)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--orders", default="7,8,9")
    ap.add_argument("--samples", type=int, default=2000)
    args = ap.parse_args()
    orders = [int(s) for s in args.orders.split(",")]

    print(f"{'kernel':<24}{'n':>3}{'python':>12}{'compiled':>12}{'speedup':>9}")
    for n in orders:
        batch = random_batch(n, args.samples, seed=n)
        tp = time_kernel(lambda a, m: _pykernels.canon_form(a, m), batch, n)
        tc = time_kernel(lambda a, m: _core.canon_form(a, m), batch, n)
        print(f"{'canon_form':<24}{n:>3}{tp*1e6:>10.1f}us{tc*1e6:>10.1f}us{tp/tc:>8.1f}x")
        # sanity: identical output on the batch head
        for adj in batch[:50]:
            assert _pykernels.canon_form(adj, n) == _core.canon_form(adj, n)
        k = n // 3
        tp = time_kernel(lambda a, m: _pykernels.has_isolating_set(a, m, k), batch, n)
        tc = time_kernel(lambda a, m: _core.has_isolating_set(a, m, k), batch, n)
        print(f"{'has_isolating_set k=' + str(k):<24}{n:>3}{tp*1e6:>10.1f}us{tc*1e6:>10.1f}us{tp/tc:>8.1f}x")

    # end-to-end: enumerate connected graphs of order 7 through each backend
    import os

    import isolab._backend as backend
    import isolab.lab as lab

    os.environ.pop("ISOLAB_CACHE_DIR", None)
    for name, mod in (("python", _pykernels), ("compiled", _core)):
        backend.kernels = mod
        backend.canon_form = mod.canon_form
        backend.has_isolating_set = mod.has_isolating_set
        backend.has_dominating_set = mod.has_dominating_set
        lab._ALL_LEVELS.clear()
        lab._CONNECTED.clear()
        t0 = time.perf_counter()
        count = len(lab.enumerate_connected(7))
        dt = time.perf_counter() - t0
        print(f"{'enumerate_connected(7)':<24}{'':>3}{name:>10}{dt:>10.2f}s  ({count} graphs)")


if __name__ == "__main__":
    main()
