"""Run every exhaustive sweep at its acceptance size and print the summaries.

    python scripts/run_sweeps.py [--workers 4] [--out sweeps.txt]
"""
import argparse
import time

from fallgraph.sweeps import run_sweep

PLAN = [("1", 6), ("2", 8), ("3", 6), ("conjecture", 7)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", help="write full failure listings here")
    args = parser.parse_args()

    lines = []
    for theorem, max_n in PLAN:
        start = time.perf_counter()
        report = run_sweep(theorem, max_n, workers=args.workers)
        elapsed = time.perf_counter() - start
        print(f"theorem={theorem:<10} max_n={max_n} {report.summary()} skipped={report.skipped} ({elapsed:.1f}s)")
        lines += [f"## theorem={theorem} max_n={max_n}"] + report.lines()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
