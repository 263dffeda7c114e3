"""Exit criteria, one test per criterion.

Every test records a PASS/FAIL line that pytest prints in its terminal
summary. Tolerances are the stated ones: exhaustive sweeps must report zero
failures, boolean fixtures must match exactly, runtimes must stay under the
stated limits.
"""
import subprocess
import sys
import time

import pytest

from fallgraph.coloring import (
    Coloring,
    is_distance_fall,
    is_independent_distance_dominating,
    smallest_class,
)
from fallgraph.formats import graph_line, parse_coloring, parse_graph, serialize_coloring, serialize_graph
from fallgraph.graph import (
    build_graph,
    cycle_graph,
    path_complete_graph,
    path_graph,
    random_tree,
    random_tripartite_connected,
)
from fallgraph.oracle import (
    EXISTS,
    LABELED_CONNECTED_GRAPHS,
    NOT_EXISTS,
    enumerate_instances,
    exists_distance_fall,
)
from fallgraph.products import pair_product_trials, sum_product_trials
from fallgraph.solvers import (
    find_proper_k_coloring,
    partial_3coloring_distance3,
    solve_distance2_fall,
    tree_k_coloring,
)
from fallgraph.sweeps import run_sweep

pytestmark = pytest.mark.slow


def _timed_sweep(theorem, max_n):
    start = time.perf_counter()
    report = run_sweep(theorem, max_n)
    return report, time.perf_counter() - start


def test_criterion_1_theorem1_sweep(criterion):
    report, elapsed = _timed_sweep("1", 6)
    ok = report.failed == 0 and report.checked > 0 and elapsed < 120
    criterion(1, ok, f"thm1 sweep n<=6 {report.summary()} in {elapsed:.1f}s (limit 120s)")
    assert ok, report.lines()[:20]


def test_criterion_2_theorem2_sweep(criterion):
    report, elapsed = _timed_sweep("2", 8)
    expected = sum(n ** max(n - 2, 0) * (n - 1) for n in range(2, 9))
    ok = report.failed == 0 and report.checked == expected and elapsed < 300
    criterion(2, ok, f"thm2 sweep trees n<=8, all k {report.summary()} in {elapsed:.1f}s (limit 300s)")
    assert ok, report.lines()[:20]


def test_criterion_3_beineke_henning_bound(criterion):
    report, elapsed = _timed_sweep("conjecture", 7)
    ok = report.failed == 0 and report.checked > 0
    criterion(3, ok, f"tree bound n/(kdist+1), trees n<=7 {report.summary()} in {elapsed:.1f}s")
    assert ok, report.lines()[:20]


def test_criterion_4_theorem3_sweep(criterion):
    report, elapsed = _timed_sweep("3", 6)
    ok = report.failed == 0 and report.checked == 4 + 38 + 728 + 26704
    criterion(4, ok, f"thm3 sweep n<=6 {report.summary()} in {elapsed:.1f}s")
    assert ok, report.lines()[:20]


def _bipartition(G):
    col = [None] * G.n
    col[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G.adj[u]:
            if col[w] is None:
                col[w] = 1 - col[u]
                stack.append(w)
    return Coloring(2, tuple(col))


def test_criterion_5_extremal_fixtures(criterion):
    C5 = cycle_graph(5)
    checks = {
        "C5 k=3 d=1 NOT_EXISTS": exists_distance_fall(C5, 3, 1).kind == NOT_EXISTS,
        "C5 k=3 d=2 EXISTS": exists_distance_fall(C5, 3, 2).kind == EXISTS,
        "path_complete(4,3) k=4 d=2 NOT_EXISTS":
            exists_distance_fall(path_complete_graph(4, 3), 4, 2).kind == NOT_EXISTS,
    }
    bipartite = [path_graph(n) for n in range(2, 10)] + [cycle_graph(n) for n in range(4, 14, 2)]
    bipartite += [random_tree(n, seed) for n in range(2, 20) for seed in range(5)]
    bipartite.append(build_graph(7, [(0, 4), (0, 5), (1, 5), (1, 6), (2, 6), (2, 4), (3, 4), (3, 6)]))
    checks["bipartition is a fall coloring"] = all(
        is_distance_fall(G, _bipartition(G), 1) for G in bipartite
    )
    ok = all(checks.values())
    criterion(5, ok, "; ".join(f"{k}={'ok' if v else 'WRONG'}" for k, v in checks.items()))
    assert ok, checks


def test_criterion_6_n_over_3_corollary(criterion):
    checked, failures = 0, []
    for n in range(3, 7):
        for G in enumerate_instances(LABELED_CONNECTED_GRAPHS, n):
            if find_proper_k_coloring(G, 3) is None:
                continue
            checked += 1
            c, _ = solve_distance2_fall(G)
            S = smallest_class(c)
            if len(S) > n // 3 or not is_independent_distance_dominating(G, S, 2):
                failures.append(graph_line(G))
    ok = checked > 0 and not failures
    criterion(6, ok, f"smallest class <= floor(n/3) and independent 2-dominating: checked={checked} failed={len(failures)}")
    assert ok, failures[:20]


def test_criterion_7_product_contracts(criterion, tmp_path):
    sum_failures = sum_product_trials(count=200, seed=2024)
    pair_failures = pair_product_trials(count=100, seed=2024)
    failures = sum_failures + pair_failures
    archive = tmp_path / "product_counterexamples.txt"
    if failures:
        with open(archive, "w") as fh:
            for f in failures:
                fh.write(f"# {f.kind} seed={f.seed}: {f.reason}\n")
                fh.write(serialize_graph(f.G) + serialize_coloring(f.fG))
                fh.write(serialize_graph(f.H) + serialize_coloring(f.fH))
    ok = not failures
    criterion(7, ok, f"sum product 200 trials failed={len(sum_failures)}; pair product 100 trials failed={len(pair_failures)}")
    assert ok, f"counterexamples archived at {archive}"


CLI_EXAMPLES = [
    (["gen", "--family", "cycle", "--n", "5"], None, 0),
    (["gen", "--family", "path_complete", "--clique", "4", "--tail", "3"], None, 0),
    (["gen", "--family", "random_tree", "--n", "8", "--seed", "1"], None, 0),
    (["solve", "--algorithm", "thm1", "{c5}"], None, 0),
    (["solve", "--algorithm", "thm2", "--k", "3", "{p6}"], None, 0),
    (["solve", "--algorithm", "thm2", "--k", "9", "{p6}"], None, 2),
    (["verify", "{c5}", "{c5col}", "--d", "2"], None, 0),
    (["verify", "{c5}", "{c5col}", "--d", "1"], None, 1),
    (["verify", "{k2}", "{k2same}", "--d", "1"], None, 1),
    (["oracle", "exists", "--k", "3", "--d", "1", "{c5}"], None, 1),
    (["oracle", "min-idd", "--d", "2", "{p7}"], None, 0),
    (["oracle", "exists", "--k", "4", "--d", "2", "{lollipop}"], None, 1),
    (["sweep", "--theorem", "1", "--max-n", "5"], None, 0),
    (["sweep", "--theorem", "conjecture", "--max-n", "7"], None, 0),
    (["sweep", "--theorem", "2", "--max-n", "2"], "checked=1 failed=0\n", 0),
]


def test_criterion_8_determinism_and_roundtrip(criterion, tmp_path):
    paths = {}
    for name, text in {
        "c5": serialize_graph(cycle_graph(5)),
        "p6": serialize_graph(path_graph(6)),
        "p7": serialize_graph(path_graph(7)),
        "k2": serialize_graph(path_graph(2)),
        "lollipop": serialize_graph(path_complete_graph(4, 3)),
        "c5col": serialize_coloring(Coloring(3, (0, 1, 0, 1, 2))),
        "k2same": serialize_coloring(Coloring(1, (0, 0))),
    }.items():
        path = tmp_path / f"{name}.txt"
        path.write_text(text)
        paths[name] = str(path)

    problems = []
    for argv, expected_out, expected_code in CLI_EXAMPLES:
        argv = [a.format(**paths) for a in argv]
        runs = [
            subprocess.run([sys.executable, "-m", "fallgraph", *argv], capture_output=True)
            for _ in range(2)
        ]
        if runs[0].stdout != runs[1].stdout or runs[0].returncode != runs[1].returncode:
            problems.append(f"nondeterministic: {argv}")
        if runs[0].returncode != expected_code:
            problems.append(f"exit {runs[0].returncode} != {expected_code}: {argv}")
        if expected_out is not None and runs[0].stdout.decode() != expected_out:
            problems.append(f"unexpected stdout for {argv}")

    roundtrip_bad = 0
    for i in range(1000):
        if i % 2:
            G = random_tripartite_connected(3 + i % 9, 0.4, seed=i)
            c = partial_3coloring_distance3(G) if i % 4 == 1 else solve_distance2_fall(G)[0]
        else:
            G = random_tree(2 + i % 13, seed=i)
            c = tree_k_coloring(G, 2 + i % (G.n - 1) if G.n > 2 else 2)
        if parse_graph(serialize_graph(G, ["roundtrip"])) != G:
            roundtrip_bad += 1
        if parse_coloring(serialize_coloring(c)) != c:
            roundtrip_bad += 1
    ok = not problems and roundtrip_bad == 0
    criterion(8, ok, f"{len(CLI_EXAMPLES)} CLI examples run twice, problems={len(problems)}; "
                     f"1000 instances round-tripped, mismatches={roundtrip_bad}")
    assert ok, problems
