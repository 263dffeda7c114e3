"""Command-line interface.

stdout carries exactly one machine-readable artifact; prose goes to stderr.
Exit codes: 0 success, 1 verified-false, 2 bad input or precondition,
3 resource cap, 4 proof violation.
"""
from __future__ import annotations

import argparse
import sys

from .coloring import goodness_partial, improper_edges
from .errors import FallGraphError, PreconditionError, SizeMismatch
from .formats import parse_coloring, parse_graph, read_text, serialize_coloring, serialize_graph
from .graph import FAMILIES, generate
from .oracle import NOT_EXISTS, exists_distance_fall, min_independent_distance_dominating
from .products import pair_product_coloring, sum_product_coloring
from .solvers import distance2_fall_3coloring, partial_3coloring_distance3, tree_k_coloring
from .sweeps import THEOREMS, run_sweep

EXIT_OK = 0
EXIT_FALSE = 1


def _out(text: str) -> None:
    sys.stdout.write(text)


def _err(text: str) -> None:
    print(text, file=sys.stderr)


def cmd_gen(args) -> int:
    params = {"n": args.n, "clique": args.clique, "tail": args.tail, "p": args.p}
    params = {k: v for k, v in params.items() if k in FAMILIES.get(args.family, ())}
    G = generate(args.family, seed=args.seed, **params)
    desc = " ".join(f"{k}={v}" for k, v in params.items())
    if args.seed is not None:
        desc += f" seed={args.seed}"
    _out(serialize_graph(G, [f"family={args.family} {desc}".strip()]))
    return EXIT_OK


def cmd_solve(args) -> int:
    G = parse_graph(read_text(args.input))
    if args.algorithm == "thm1":
        c, k, d = distance2_fall_3coloring(G), 3, 2
    elif args.algorithm == "thm2":
        if args.k is None:
            raise PreconditionError("thm2 needs --k")
        c, k, d = tree_k_coloring(G, args.k), args.k, args.k - 1
    else:
        c, k, d = partial_3coloring_distance3(G), 3, 3
    # every solver verifies its own output before returning
    _out(serialize_coloring(c, [f"algorithm={args.algorithm} k={k} d={d} verified=true"]))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = parse_graph(read_text(args.graph))
    c = parse_coloring(read_text(args.coloring))
    if len(c) != G.n:
        raise SizeMismatch(f"coloring has {len(c)} entries, graph has {G.n} vertices")
    if not c.is_total and not args.partial:
        raise PreconditionError("coloring has uncolored vertices; pass --partial")
    bad_edges = improper_edges(G, c)
    report = goodness_partial(G, c, args.d)
    lines = [f"improper {u} {v}" for u, v in bad_edges]
    lines += [
        f"bad {v} missing {','.join(map(str, sorted(report.missing[v])))}"
        for v in report.bad_vertices
    ]
    ok = not bad_edges and report.bad_count == 0
    lines.append(f"d={args.d} proper={str(not bad_edges).lower()} bad_count={report.bad_count} "
                 f"verdict={'fall' if ok else 'not-fall'}")
    _out("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_oracle(args) -> int:
    G = parse_graph(read_text(args.input))
    if args.sub == "exists":
        res = exists_distance_fall(G, args.k, args.d)
        _err(f"nodes_explored={res.nodes_explored}")
        if res.kind == NOT_EXISTS:
            _out("NOT_EXISTS\n")
            return EXIT_FALSE
        _out(serialize_coloring(res.witness, [f"EXISTS k={args.k} d={args.d}"]))
        return EXIT_OK
    res = min_independent_distance_dominating(G, args.d)
    _err(f"nodes_explored={res.nodes_explored}")
    _out(f"{res.value}\n{' '.join(map(str, sorted(res.witness)))}\n")
    return EXIT_OK


def cmd_product(args) -> int:
    G = parse_graph(read_text(args.G))
    fG = parse_coloring(read_text(args.fG))
    H = parse_graph(read_text(args.H))
    fH = parse_coloring(read_text(args.fH))
    if args.construction == "sum":
        P, c = sum_product_coloring(G, fG, H, fH, d=args.d)
        notes = [f"sum product: vertex (g,h) = g*{H.n}+h, color = (fG(g)+fH(h)) mod {c.k}"]
        if args.d is not None:
            notes.append(f"verified distance-{args.d} fall")
    else:
        if (args.dG is None) != (args.dH is None):
            raise PreconditionError("pass both --dG and --dH or neither")
        P, c = pair_product_coloring(G, fG, H, fH, d_G=args.dG, d_H=args.dH)
        notes = [f"pair product: vertex (g,h) = g*{H.n}+h, color = fG(g)*{fH.k}+fH(h)"]
        if args.dG is not None:
            notes.append(f"verified distance-{args.dG + args.dH} fall")
    if args.graph_out:
        with open(args.graph_out, "w") as fh:
            fh.write(serialize_graph(P, [notes[0].split(":")[0]]))
    _out(serialize_coloring(c, notes))
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = run_sweep(args.theorem, args.max_n, workers=args.workers)
    _out("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.failed == 0 else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fallgraph", description="Distance-k fall colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph edge list")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--clique", type=int)
    p.add_argument("--tail", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="build a coloring with one of the constructions")
    p.add_argument("--algorithm", required=True, choices=["thm1", "thm2", "thm3"])
    p.add_argument("--k", type=int)
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring for the distance-d fall property")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--partial", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search")
    oracle_sub = p.add_subparsers(dest="sub", required=True)
    for name, needs_k in (("exists", True), ("min-idd", False)):
        q = oracle_sub.add_parser(name)
        q.add_argument("input", nargs="?", default="-")
        if needs_k:
            q.add_argument("--k", type=int, required=True)
        q.add_argument("--d", type=int, required=True)
        q.set_defaults(func=cmd_oracle)

    p = sub.add_parser("product", help="color a Cartesian product from factor colorings")
    p.add_argument("construction", choices=["sum", "pair"])
    p.add_argument("G")
    p.add_argument("fG")
    p.add_argument("H")
    p.add_argument("fH")
    p.add_argument("--d", type=int, help="sum: distance to verify")
    p.add_argument("--dG", type=int, help="pair: fall distance of fG")
    p.add_argument("--dH", type=int, help="pair: fall distance of fH")
    p.add_argument("--graph-out", help="also write the product graph here")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("sweep", help="exhaustive theorem sweep over small labeled instances")
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FallGraphError as exc:
        _err(f"error: {type(exc).__name__}: {exc}")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
