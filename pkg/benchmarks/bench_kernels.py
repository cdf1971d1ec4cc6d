"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Both backends must return identical results; the script exits 1 otherwise.
"""

import argparse
import random
import sys
import time

from topocode import _backend, _pykernels
from topocode._search import _as_graph, logical_basis
from topocode.families import complete_selfdual, kitaev_toric, optimal_toric


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def rref_cases(quick):
    rng = random.Random(1)
    sizes = [(128, 256), (512, 512)] if quick else [(128, 256), (512, 512), (1024, 1536)]
    for rows, cols in sizes:
        yield f"rref {rows}x{cols}", ([rng.getrandbits(cols) for _ in range(rows)], cols)


def cycle_cases(quick):
    embs = [("kitaev_toric(16)", kitaev_toric(16)), ("optimal_toric(21)", optimal_toric(21)), ("K_17", complete_selfdual(17))]
    if not quick:
        embs += [("kitaev_toric(32)", kitaev_toric(32)), ("optimal_toric(41)", optimal_toric(41))]
    for name, c in embs:
        checks, stabs = c.vertex_incidence(), c.face_incidence()
        labels = [0] * checks.cols
        for i, lv in enumerate(logical_basis(checks, stabs)):
            for j in lv.support():
                labels[j] |= 1 << i
        nv, tails, heads = _as_graph(checks)
        yield f"cycle search {name}", (nv, tails, heads, labels)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    fast = _backend._ckernels
    if fast is None:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
        return 1
    print(f"threads: {_backend.thread_count()}")
    print(f"{'case':36s} {'python (s)':>11s} {'cython (s)':>11s} {'speedup':>8s}")
    mismatch = False
    jobs = [(name, lambda m, a=a: _backend.rref(*a, module=m)) for name, a in rref_cases(args.quick)]
    jobs += [(name, lambda m, a=a: _backend.shortest_nontrivial_cycle(*a, module=m)) for name, a in cycle_cases(args.quick)]
    for name, job in jobs:
        tp, rp = best_of(lambda: job(_pykernels), args.repeat)
        tc, rc = best_of(lambda: job(fast), args.repeat)
        mismatch |= rp != rc
        print(f"{name:36s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x{'  MISMATCH' if rp != rc else ''}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
