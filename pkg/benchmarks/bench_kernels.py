"""Time the numba kernels against the numpy fallbacks on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The first numba call of each kernel includes compilation (cached on disk
afterwards); it is reported separately as ``warmup``. Results of the two
backends are compared before anything is timed.
"""
import argparse
import time

import numpy as np

from nscs.kernels import _numba as nb
from nscs.kernels import _numpy as npk

G1 = np.array([4, 14, 63], dtype=np.int64)
G2 = np.array([49, 119, 374], dtype=np.int64)
G3 = np.array([165, 176, 208], dtype=np.int64)

CASES = [
    ("membership_table <49,119,374> to 10^6", "membership_table", (G2, 1_000_000)),
    ("factorizations <4,14,63> n=5000", "factorizations", (G1, 5000, 10**6)),
    ("scan_catenary <49,119,374> to 2618", "scan_catenary", (G2, 2618, 50_000)),
    ("scan_delta <49,119,374> to 6000", "scan_delta", (G2, 6000, 50_000)),
    ("scan_tame <165,176,208> to 2000", "scan_tame", (G3, 2000, 50_000)),
    ("fibers_csr <4,14,63> [0, 146)", "fibers_csr", (G1, 0, 146, 50_000)),
]


def _same(x, y):
    if isinstance(x, tuple):
        return all(_same(u, v) for u, v in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def _best(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':44s} {'warmup':>9s} {'numba':>9s} {'numpy':>9s} {'speedup':>8s}")
    for label, name, call in CASES:
        t = time.perf_counter()
        out_nb = getattr(nb, name)(*call)
        warm = time.perf_counter() - t
        out_np = getattr(npk, name)(*call)
        if not _same(out_nb, out_np):
            raise SystemExit(f"{label}: backends disagree")
        t_nb = _best(getattr(nb, name), call, args.repeat)
        t_np = _best(getattr(npk, name), call, args.repeat)
        print(f"{label:44s} {warm:9.3f} {t_nb:9.4f} {t_np:9.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
