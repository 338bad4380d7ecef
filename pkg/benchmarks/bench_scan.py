#!/usr/bin/env python3
"""Benchmark the scan kernels: compiled extension vs pure-Python fallback.

Times the three kernel entry points on the bundled 11-player instance
(42,875 assignments) and on the group-size-5 witness (2,000,376), plus one
end-to-end impossibility verification.  Run from a built checkout:

    python benchmarks/bench_scan.py
"""

import time

from fairplay import _scan_py
from fairplay.impossibility import build_witness
from fairplay.model import reduce_problem
from fairplay.oracle import _combo_lists, count_efficient
from fairplay.fixtures import table1

try:
    from fairplay import _scan_c
    BACKENDS = [_scan_c, _scan_py]
except ImportError:
    print("compiled kernel not built; benchmarking the pure backend only\n")
    BACKENDS = [_scan_py]

BUDGET = 50_000_000


def bench(label, fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    dt = time.perf_counter() - t0
    return dt, result


def main():
    red_t1, _ = reduce_problem(table1())
    instances = [
        ("table1 reduced", red_t1),
        ("witness g=4", build_witness(4)),
        ("witness g=5", build_witness(5)),
    ]

    print(f"{'instance':<16} {'kernel':<12} {'backend':<12} {'leaves':>10} "
          f"{'seconds':>9} {'leaves/s':>12}")
    for name, p in instances:
        combos = _combo_lists(p, BUDGET)
        avail = p.availability_counts()
        total = count_efficient(p)
        for backend in BACKENDS:
            for kernel, args in [
                ("scan_fair", (combos, p.n, BUDGET)),
                ("scan_verify", (combos, p.n, avail, BUDGET)),
            ]:
                dt, result = bench(kernel, getattr(backend, kernel), *args)
                scanned = result[0]
                assert scanned == total or result[1]  # full cover or conclusive
                print(f"{name:<16} {kernel:<12} {backend.NAME:<12} "
                      f"{scanned:>10} {dt:>9.3f} {scanned / dt:>12.0f}")
        if len(BACKENDS) == 2:
            fast, r1 = bench("scan_verify", BACKENDS[0].scan_verify, combos, p.n, avail, BUDGET)
            slow, _ = bench("scan_verify", BACKENDS[1].scan_verify, combos, p.n, avail, BUDGET)
            if r1[0] == total:  # full scan, meaningful to compare
                print(f"{name:<16} speedup (scan_verify): {slow / fast:.0f}x")
            print()


if __name__ == "__main__":
    main()
