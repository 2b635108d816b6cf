"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--large]

Times cell enumeration and the GF(2) column reduction on a few battery
instances with each backend, checks that both return identical results,
and prints the speedup.
"""

import argparse
import time

import numpy as np

from nkconfig import kernels
from nkconfig.battery import NAMED
from nkconfig.complex import ComplexView, enumerate_dconf
from nkconfig.homology import boundary_matrix
from nkconfig.subdivision import barycentric_tower

CASES = [("P5", 0, 3, 4), ("theta", 0, 3, 4), ("C4", 1, 3, 4), ("K13", 2, 2, 3)]
LARGE = [("theta", 2, 3, 3), ("C6", 1, 4, 4)]


def _closures(g):
    vidx = {v: i for i, v in enumerate(g.vertices)}
    return [tuple(sorted(vidx[v] for v in g.closures[x])) for x in ComplexView.items_of(g)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench_case(name, level, k, n, repeat, backends):
    g = barycentric_tower(NAMED[name](), level)[-1]
    cl = _closures(g)
    row = {"case": f"{name} B{level} k={k} n={n}"}
    enum = {}
    for b in backends:
        t, out = best_of(lambda: kernels.enumerate_codes(n, k, len(g.vertices), cl, 10**8, backend=b, workers=1), repeat)
        row[f"enum_{b}"] = t
        enum[b] = out
    ref = next(iter(enum.values()))
    assert all(np.array_equal(ref, v) for v in enum.values()), "enumeration mismatch"
    row["cells"] = len(ref)

    cv = enumerate_dconf(g, k, n, 10**8)
    mats = [boundary_matrix(cv, d, "f2").csc() for d in range(1, n + 1)]
    red = {}
    for b in backends:
        def run():
            return [kernels.gf2_reduce(p, r, np.zeros(len(p) - 1, dtype=np.uint8), backend=b)[0] for p, r, _ in mats]
        t, out = best_of(run, repeat)
        row[f"gf2_{b}"] = t
        red[b] = out
    assert len({tuple(v) for v in red.values()}) == 1, "rank mismatch"
    return row


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--large", action="store_true", help="add cases with 10^5-10^6 cells")
    args = ap.parse_args(argv)
    backends = sorted(kernels.BACKENDS)
    if "compiled" not in backends:
        print("compiled extension not built; only the Python backend is available")
    cases = CASES + (LARGE if args.large else [])
    head = f"{'case':<24}{'cells':>10}"
    for kind in ("enum", "gf2"):
        for b in backends:
            head += f"{kind + '_' + b:>16}"
        if len(backends) == 2:
            head += f"{kind + ' x':>10}"
    print(head)
    for case in cases:
        row = bench_case(*case, args.repeat, backends)
        line = f"{row['case']:<24}{row['cells']:>10}"
        for kind in ("enum", "gf2"):
            for b in backends:
                line += f"{row[kind + '_' + b]:>15.4f}s"
            if len(backends) == 2:
                line += f"{row[kind + '_python'] / max(row[kind + '_compiled'], 1e-9):>9.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()
