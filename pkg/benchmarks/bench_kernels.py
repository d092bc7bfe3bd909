"""Compare the compiled and pure-Python kernels.

Times the individual kernels on random rectangles, then a pruned
enumeration run in a subprocess per backend.  Usage:

    python3 benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from rectangle_forge import _pykernels, kernels
from rectangle_forge.core import _plans
from rectangle_forge.prune.patterns import BY_NAME


def random_match(n, m, rnd, complete):
    cells = list(range(n * m))
    rnd.shuffle(cells)
    k = n * m // 2 if complete else rnd.randint(1, n * m // 2)
    match = [-1] * (n * m)
    for t in range(k):
        a, b = cells[2 * t], cells[2 * t + 1]
        match[a], match[b] = b, a
    return tuple(match)


def kernel_calls(backend, cases):
    pat = BY_NAME["staircase-cyclic"].rect
    plans = _plans(pat.n, pat.m, tuple(pat.match), False)
    return {
        "scan": lambda: [backend.scan(mt, n, m) for n, m, mt in cases],
        "proper_subrectangle": lambda: [backend.proper_subrectangle(mt, n, m) for n, m, mt in cases],
        "spanning_seed": lambda: [backend.spanning_seed(mt, n, m) for n, m, mt in cases],
        "conflict_seed": lambda: [backend.conflict_seed(mt, n, m) for n, m, mt in cases],
        "periodic_cycle": lambda: [backend.periodic_cycle(mt, n, m, m, [x for x, y in enumerate(mt) if y >= 0])
                                   for n, m, mt in cases],
        "mismatched_parallel": lambda: [backend.mismatched_parallel(mt, n, m, m) for n, m, mt in cases],
        "embed_search": lambda: [backend.embed_search(mt, n, m, pat.n, pat.m, plans, -1, -1)
                                 for n, m, mt in cases if n >= 3 and m >= 4],
    }


ENUM = (
    "import sys, time\n"
    "from rectangle_forge.enumeration import enumerate_rectangles\n"
    "from rectangle_forge.prune import Pruner\n"
    "t = time.perf_counter(); s = enumerate_rectangles({n}, {m}, Pruner())\n"
    "print(time.perf_counter() - t, s.nodes, s.survivors)\n"
)


def enum_time(n, m, pure):
    env = dict(os.environ, RECTANGLE_FORGE_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", ENUM.format(n=n, m=m)], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return float(out[0]), int(out[1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="fewer cases and smaller enumerations")
    args = ap.parse_args(argv)
    if kernels.compiled_backend is None:
        sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    rnd = random.Random(1)
    count = 200 if args.quick else 1000
    cases = [(n, m, random_match(n, m, rnd, complete=rnd.random() < 0.5))
             for n, m in (rnd.choice([(3, 8), (4, 6), (5, 4), (3, 12)]) for _ in range(count))]
    py = kernel_calls(_pykernels, cases)
    cy = kernel_calls(kernels.compiled_backend, cases)
    print(f"{'kernel':<22}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name in py:
        tp = min(timeit.repeat(py[name], number=1, repeat=3)) * 1e3
        tc = min(timeit.repeat(cy[name], number=1, repeat=3)) * 1e3
        print(f"{name:<22}{tp:>12.1f}{tc:>12.1f}{tp / tc:>9.1f}x")

    print()
    print(f"{'enumeration':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}{'nodes':>10}")
    for n, m in ([(3, 6), (4, 4)] if args.quick else [(3, 6), (4, 4), (3, 8), (5, 4)]):
        tp, nodes = enum_time(n, m, pure=True)
        tc, nodes_c = enum_time(n, m, pure=False)
        assert nodes == nodes_c
        print(f"{f'{n}x{m}':<22}{tp:>12.2f}{tc:>12.2f}{tp / tc:>9.1f}x{nodes:>10}")


if __name__ == "__main__":
    main()
