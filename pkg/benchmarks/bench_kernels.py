#!/usr/bin/env python3
"""Benchmark the compiled character kernel against the pure-Python twin.

Builds each character table cold (memo cleared) per degree and checks the
two kernels agree entry for entry.  `plethy bench` wraps the same loop; this
script adds a plethysm timing so the other hot path is visible too.

    python benchmarks/bench_kernels.py --max-n 16
"""

from __future__ import annotations

import argparse
import time

from plethy.partitions import partitions_of
from plethy.schur import available_kernels
from plethy.series import SeriesContext, apply_series


def bench_characters(min_n: int, max_n: int) -> None:
    kernels = available_kernels()
    print("character-table build, cold memo")
    print(f"{'n':>4}  {'classes':>8}  " + "  ".join(f"{name:>14}" for name in kernels))
    for n in range(min_n, max_n + 1):
        parts = partitions_of(n)
        row = [f"{n:>4}", f"{len(parts):>8}"]
        tables = []
        for mod in kernels.values():
            mod.clear_memo()
            t0 = time.perf_counter()
            tables.append(mod.mn_table(parts))
            row.append(f"{time.perf_counter() - t0:>13.3f}s")
        print("  ".join(row))
        assert all(t == tables[0] for t in tables), f"kernel mismatch at n={n}"
    if len(kernels) > 1:
        print("kernels agree on every degree benchmarked")
    else:
        print("(compiled kernel not built; showing pure-python only)")


def bench_series(cap: int) -> None:
    print(f"\nouter-power series at cap {cap} (pure python either way)")
    for name in ("lie", "lie2"):
        ctx = SeriesContext(cap)
        t0 = time.perf_counter()
        apply_series("H", ctx.family(name))
        apply_series("E", ctx.family(name))
        print(f"  H,E applied to {name:5}  {time.perf_counter() - t0:.3f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=10)
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--cap", type=int, default=12)
    args = parser.parse_args()
    bench_characters(args.min_n, args.max_n)
    bench_series(args.cap)


if __name__ == "__main__":
    main()
