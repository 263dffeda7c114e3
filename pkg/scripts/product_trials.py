"""Seeded random trials of both product colorings.

Any failure is written to the archive file as a potential counterexample
(factor graphs and colorings in the standard text formats).

    python scripts/product_trials.py --sum 200 --pair 100 --seed 2024
"""
import argparse

from fallgraph.formats import serialize_coloring, serialize_graph
from fallgraph.products import pair_product_trials, sum_product_trials


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sum", type=int, default=200)
    parser.add_argument("--pair", type=int, default=100)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--archive", default="product_counterexamples.txt")
    args = parser.parse_args()

    failures = sum_product_trials(args.sum, args.seed) + pair_product_trials(args.pair, args.seed)
    print(f"sum trials={args.sum} pair trials={args.pair} failures={len(failures)}")
    if failures:
        with open(args.archive, "w") as fh:
            for f in failures:
                fh.write(f"# {f.kind} seed={f.seed}: {f.reason}\n")
                for text in (serialize_graph(f.G), serialize_coloring(f.fG),
                             serialize_graph(f.H), serialize_coloring(f.fH)):
                    fh.write(text)
        print(f"archived to {args.archive}")


if __name__ == "__main__":
    main()
