"""Look for connected 4-colorable graphs with no distance-3 fall 4-coloring.

Exploration only: walks labeled connected graphs of order n (n <= 7) and
reports any graph that has a proper 4-coloring but where the oracle finds
no 4-coloring with every vertex within distance 3 of every color.

    python scripts/explore_four_colors.py --n 6
"""
import argparse

from fallgraph.formats import graph_line
from fallgraph.oracle import LABELED_CONNECTED_GRAPHS, NOT_EXISTS, enumerate_instances, exists_distance_fall
from fallgraph.solvers import find_proper_k_coloring


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--d", type=int, default=3)
    args = parser.parse_args()

    checked = found = 0
    for G in enumerate_instances(LABELED_CONNECTED_GRAPHS, args.n):
        if find_proper_k_coloring(G, 4) is None:
            continue
        checked += 1
        if exists_distance_fall(G, 4, args.d).kind == NOT_EXISTS:
            found += 1
            print(graph_line(G))
    print(f"checked={checked} without_distance_{args.d}_fall_4coloring={found}")


if __name__ == "__main__":
    main()
