"""Time the compiled exchange scan against the pure-Python one.

Each case is a saturated index on a box, which satisfies every exchange
condition, so both scans walk every (xi, xi_tilde, cell) triple.

    python3 benchmarks/bench_kernels.py [--sides 2 3 4] [--repeat 3]
"""
import argparse
import statistics
import time

from divmat import kernels
from divmat.concavity import _MODES, _Table
from divmat.core import Grid
from divmat.feasible import Box
from divmat.indices import SaturatedIndex


def timed(fn, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        runs.append(time.perf_counter() - start)
    return statistics.median(runs), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sides", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--modes", nargs="+", default=["ordinal", "mnat", "pseudo_plus"],
                    choices=sorted(_MODES))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled_scan is None:
        raise SystemExit("compiled kernel not available; build with pip install -e .")
    grid = Grid(["c0", "c1"], ["a", "b"])
    print(f"{'points':>7} {'mode':>12} {'python s':>10} {'compiled s':>11} {'speed-up':>9}")
    for side in args.sides:
        f = SaturatedIndex((1, 2, 1, 2), Box(grid, (side,) * 4))
        table = _Table(f, 10 ** 6)
        for prop in args.modes:
            mode, enc = _MODES[prop]
            vals = table.ranks() if enc == "ranks" else table.scaled()
            call = (mode, table.coords, table.lin, table.pos, vals, table.strides)
            tp, a = timed(lambda: kernels.python_scan(*call), args.repeat)
            tc, b = timed(lambda: kernels.compiled_scan(*call), args.repeat)
            assert a == b
            print(f"{len(table.points):>7} {prop:>12} {tp:>10.4f} {tc:>11.5f} {tp / tc:>8.0f}x")


if __name__ == "__main__":
    main()
