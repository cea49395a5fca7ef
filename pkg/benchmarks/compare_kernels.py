"""Compare the compiled flow/cut kernels against the pure-Python ones.

Runs the same randomly generated capacity matrices through both
backends, asserts they agree call by call, and reports per-operation
timings.  Usage:

    python3 benchmarks/compare_kernels.py [--sizes 10,20,40,60]
                                          [--samples 40] [--seed 7]
                                          [--csv out.csv]
"""

import argparse
import csv
import random
import sys
import time

from arcinvert._kernels import _pyimpl

try:
    from arcinvert._kernels import _cimpl
except ImportError:
    _cimpl = None


def rand_caps(rng, n, density=0.35, mult_max=2):
    caps = [0] * (n * n)
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                caps[u * n + v] = rng.randint(1, mult_max)
    return caps


def bench_op(name, call, instances):
    """Times one backend-agnostic closure over prebuilt instances and
    checks both backends return identical answers."""
    rows = []
    for impl in (_pyimpl, _cimpl):
        if impl is None:
            rows.append(None)
            continue
        start = time.perf_counter()
        results = [call(impl, inst) for inst in instances]
        rows.append((time.perf_counter() - start, results))
    if rows[1] is not None and rows[0][1] != rows[1][1]:
        raise AssertionError(f"{name}: backends disagree")
    return rows[0][0], None if rows[1] is None else rows[1][0]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10,20,40,60")
    parser.add_argument("--samples", type=int, default=40)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--csv", default=None)
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",") if s]
    if _cimpl is None:
        print("compiled kernel not built; timing the pure backend only")
    else:
        bad = [n for n in sizes if n > _cimpl.MAX_N]
        if bad:
            print(f"skipping sizes {bad}: compiled masks stop at n={_cimpl.MAX_N}")
            sizes = [n for n in sizes if n <= _cimpl.MAX_N]

    rng = random.Random(args.seed)
    table = []
    for n in sizes:
        caps_list = [rand_caps(rng, n) for _ in range(args.samples)]
        pairs = [tuple(rng.sample(range(n), 2)) for _ in range(args.samples)]
        ops = [
            (
                "st_max_flow",
                lambda impl, inst: impl.st_max_flow(n, inst[0], *inst[1], -1),
                list(zip(caps_list, pairs)),
            ),
            (
                "global_min_cut",
                lambda impl, caps: impl.global_min_cut(n, caps),
                caps_list,
            ),
            (
                "karc_deficient_cut",
                lambda impl, caps: impl.karc_deficient_cut(n, caps, 2),
                caps_list,
            ),
        ]
        for name, call, instances in ops:
            py_s, c_s = bench_op(name, call, instances)
            table.append((name, n, args.samples, py_s * 1000, c_s and c_s * 1000))

    header = f"{'op':<20} {'n':>4} {'samples':>7} {'py ms':>9} {'c ms':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, n, samples, py_ms, c_ms in table:
        c_txt = "-" if c_ms is None else f"{c_ms:9.2f}"
        ratio = "-" if c_ms is None else f"{py_ms / c_ms:7.1f}x"
        print(f"{name:<20} {n:>4} {samples:>7} {py_ms:9.2f} {c_txt:>9} {ratio:>8}")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["op", "n", "samples", "py_ms", "c_ms"])
            for name, n, samples, py_ms, c_ms in table:
                writer.writerow([name, n, samples, f"{py_ms:.3f}",
                                 "" if c_ms is None else f"{c_ms:.3f}"])
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
