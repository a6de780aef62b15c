"""Time the compiled sweep against the pure-Python one.

    python3 benchmarks/bench_kernels.py [--min 6] [--max 9] [--cython-max 11]

Both backends must return identical histograms; the script checks this
before reporting timings.
"""

import argparse
import sys
import timeit

from dessins import _pykernels

try:
    from dessins import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, N, repeat):
    return min(timeit.repeat(lambda: fn(N), number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=6)
    ap.add_argument("--max", type=int, default=9, help="largest N for both backends")
    ap.add_argument("--cython-max", type=int, default=11, help="largest N for the compiled backend")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled extension not built; timing the Python backend only")

    print(f"{'N':>3}  {'python [s]':>11}  {'cython [s]':>11}  {'speedup':>8}")
    for N in range(args.min, max(args.max, args.cython_max) + 1):
        py = cy = None
        if N <= args.max:
            py = best_of(_pykernels.sweep, N, args.repeat)
        if _ckernels is not None and N <= args.cython_max:
            cy = best_of(_ckernels.sweep, N, args.repeat if N < 11 else 1)
        if py is not None and cy is not None and _ckernels.sweep(N) != _pykernels.sweep(N):
            print(f"backends disagree at N={N}", file=sys.stderr)
            return 1
        fmt = lambda t: f"{t:11.4f}" if t is not None else f"{'-':>11}"
        ratio = f"{py / cy:8.1f}" if py and cy else f"{'-':>8}"
        print(f"{N:>3}  {fmt(py)}  {fmt(cy)}  {ratio}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
