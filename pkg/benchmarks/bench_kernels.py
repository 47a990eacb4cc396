"""Time each hot kernel under the numba and numpy backends.

    python benchmarks/bench_kernels.py [--repeat N]

The numba column excludes compilation (one warm-up call first).
"""
import argparse
import time

import numpy as np

from slce_lab import kernels
from slce_lab.gf import field_of_order, make_field
from slce_lab.seq import build_family_L, gen_slce


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    rng = np.random.default_rng(0)
    s = gen_slce(make_field(1021)).terms
    yield "diff_histogram v=1020 M=2", "diff_histogram", (s, np.roll(s, 7), 2)
    a = rng.integers(0, 12, 2000)
    yield "diff_histogram v=2000 M=12", "diff_histogram", (a, a[::-1].copy(), 12)
    b = rng.integers(0, 2, 4000)
    yield "least_translate v=4000 (last shift)", "least_translate", (b, np.roll(b, 3999))
    fam = np.stack([x.terms for x in build_family_L(field_of_order(49), 4)])
    rows, cols = np.triu_indices(min(len(fam), 120), 1)
    ang = 2 * np.pi * np.arange(4) / 4
    yield (f"pair_max_magnitude {rows.size} pairs v=48", "pair_max_magnitude",
           (fam, 4, np.cos(ang), np.sin(ang), rows.astype(np.int64), cols.astype(np.int64)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.numba_impl is None:
        print("numba is not installed; only the numpy backend can be timed")
    print(f"{'kernel':40s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s}")
    for label, name, inputs in cases():
        t_np = best_of(lambda: getattr(kernels.numpy_impl, name)(*inputs), args.repeat)
        if kernels.numba_impl is None:
            print(f"{label:40s} {t_np * 1e3:11.2f}")
            continue
        fn = getattr(kernels.numba_impl, name)
        fn(*inputs)  # compile
        t_nb = best_of(lambda: fn(*inputs), args.repeat)
        print(f"{label:40s} {t_np * 1e3:11.2f} {t_nb * 1e3:11.2f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
