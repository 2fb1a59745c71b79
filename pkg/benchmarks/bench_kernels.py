#!/usr/bin/env python3
"""Benchmark the hot kernels under both backends.

Runs each workload twice in subprocesses: once with numba JIT (default) and
once with LAPCENT_NO_NUMBA=1 (interpreted numpy fallback). Both paths execute
the same kernel source and produce bit-identical outputs; this script reports
the wall-clock difference.

    python benchmarks/bench_kernels.py [--runs 100000] [--tree-n 8]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from lapcent import _kernels
from lapcent.verify import complete_graph, path_graph

runs = int(sys.argv[1])
tree_n = int(sys.argv[2])

results = {"backend": "numba" if _kernels.USING_NUMBA else "numpy"}

# warm up (and JIT-compile when applicable), then time
g = complete_graph(6)
indptr, nbrs, cumw = g.csr()
_kernels.walk_steps(indptr, nbrs, cumw, 0, 1, 16, 42)
t0 = time.perf_counter()
steps = _kernels.walk_steps(indptr, nbrs, cumw, 0, 1, runs, 42)
results["walk_steps_s"] = time.perf_counter() - t0
results["walk_steps_mean"] = float(steps.mean())

_kernels.walk_visits(indptr, nbrs, cumw, g.n, 0, 1, 16, 42)
t0 = time.perf_counter()
sums, sumsq, capped = _kernels.walk_visits(indptr, nbrs, cumw, g.n, 0, 1, runs, 42)
results["walk_visits_s"] = time.perf_counter() - t0
results["walk_visits_sum0"] = float(sums[0])

_kernels.tree_scan(5)
t0 = time.perf_counter()
scan = _kernels.tree_scan(tree_n)
results["tree_scan_s"] = time.perf_counter() - t0
results["tree_scan"] = [int(x) for x in scan]

print(json.dumps(results))
"""


def run_backend(disable_numba: bool, runs: int, tree_n: int) -> dict:
    env = dict(os.environ)
    env["LAPCENT_NO_NUMBA"] = "1" if disable_numba else ""
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(runs), str(tree_n)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=100000, help="Monte Carlo runs")
    ap.add_argument("--tree-n", type=int, default=8, help="tree-scan node count")
    args = ap.parse_args()

    jit = run_backend(False, args.runs, args.tree_n)
    py = run_backend(True, args.runs, args.tree_n)

    for a, b, key in ((jit, py, "walk_steps_mean"),
                      (jit, py, "walk_visits_sum0"),
                      (jit, py, "tree_scan")):
        if a[key] != b[key]:
            print(f"BACKEND MISMATCH on {key}: {a[key]} vs {b[key]}")
            return 1

    print(f"{'kernel':<14} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for key, label in (("walk_steps_s", "walk_steps"),
                       ("walk_visits_s", "walk_visits"),
                       ("tree_scan_s", "tree_scan")):
        tj, tp = jit[key], py[key]
        print(f"{label:<14} {tj:>9.3f}s {tp:>9.3f}s {tp / tj:>8.1f}x")
    print("outputs bit-identical across backends")
    return 0


if __name__ == "__main__":
    sys.exit(main())
