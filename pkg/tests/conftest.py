import itertools

import pytest
from hypothesis import strategies as st

from fallgraph.graph import build_graph, prufer_decode


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # chain the components through a random spanning path
        order = draw(st.permutations(range(n)))
        extra = {tuple(sorted(e)) for e in zip(order, order[1:])}
        chosen = sorted(set(chosen) | extra)
    return build_graph(n, chosen)


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return prufer_decode(seq, n)


def floyd_warshall(G):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(G.n)] for i in range(G.n)]
    for u, v in G.edges():
        d[u][v] = d[v][u] = 1
    for m in range(G.n):
        for i in range(G.n):
            for j in range(G.n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def brute_fall(G, colors, k, d):
    """Definition-level check, independent of the bitmask verifier."""
    dist = floyd_warshall(G)
    for u, v in G.edges():
        if colors[u] is not None and colors[u] == colors[v]:
            return False
    for v in range(G.n):
        seen = {colors[u] for u in range(G.n) if dist[v][u] <= d and colors[u] is not None}
        if len(seen) < k:
            return False
    return True


@pytest.fixture
def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(number, ok, detail)``."""
    def record(number, ok, detail):
        _ACCEPTANCE.append((number, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_ACCEPTANCE, key=lambda r: str(r[0])):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
