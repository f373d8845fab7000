"""Time the compiled and pure-Python elimination kernels on oracle builds.

    python benchmarks/bench_kernels.py            # (1,4) and (0,5)
    python benchmarks/bench_kernels.py 0,4 2,5    # chosen bidegrees
"""
import argparse
import time

from prop_rewriter.elimination import DEFAULT_BACKEND
from prop_rewriter.oracle import QuotientOracle


def bidegree(text: str) -> tuple[int, int]:
    n, t = map(int, text.split(","))
    return n, t


def timed(side: str, n: int, t: int, backend: str) -> tuple[int, float]:
    start = time.perf_counter()
    dim = QuotientOracle(side, n, t, backend=backend).quotient_dimension
    return dim, time.perf_counter() - start


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("bidegrees", nargs="*", type=bidegree, default=[(1, 4), (0, 5)])
    ap.add_argument("--side", choices=("leib", "leibop"), default="leib")
    args = ap.parse_args()
    if DEFAULT_BACKEND != "cython":
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    print(f"{'bidegree':>9} {'dim':>6} {'cython s':>9} {'python s':>9} {'speedup':>8}")
    for n, t in args.bidegrees:
        dc, tc = timed(args.side, n, t, "cython")
        dp, tp = timed(args.side, n, t, "python")
        assert dc == dp, (dc, dp)
        print(f"{f'({n},{t})':>9} {dc:>6} {tc:>9.2f} {tp:>9.2f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
