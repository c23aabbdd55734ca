"""Compare the compiled and pure-Python dense expansion kernels.

    python benchmarks/bench_ct.py [--max-n 6] [--repeat 3]

For each n and parity the canonical table is expanded with every available
backend; the grids must agree exactly and the best wall time is reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qkzstrip.ctengine import available_backends, canonical_caps, expand


def best_time(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'n':>2} {'parity':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in range(1, args.max_n + 1):
        for odd in (False, True):
            caps = canonical_caps(n, odd)
            times, grids = [], []
            for b in backends:
                dt, g = best_time(lambda: expand(caps, odd, backend=b), args.repeat)
                times.append(dt)
                grids.append(g)
            if any(not np.array_equal(grids[0], g) for g in grids[1:]):
                print(f"MISMATCH at n={n} odd={odd}")
                return 1
            speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
            print(f"{n:>2} {'odd' if odd else 'even':>6} " + " ".join(f"{t:10.4f}" for t in times) + "  " + speed)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
