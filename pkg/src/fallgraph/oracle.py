"""Brute-force ground truth: exhaustive searches and labeled enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Union

from .coloring import Coloring, is_distance_fall, is_independent_distance_dominating
from .config import node_cap
from .errors import CapExceeded, PreconditionError, ProofViolation
from .graph import Graph, build_graph, prufer_decode

EXISTS = "EXISTS"
NOT_EXISTS = "NOT_EXISTS"
OPTIMUM = "OPTIMUM"

LABELED_CONNECTED_GRAPHS = "LABELED_CONNECTED_GRAPHS"
LABELED_TREES = "LABELED_TREES"

MAX_GRAPH_ORDER = 7
MAX_TREE_ORDER = 8


@dataclass(frozen=True)
class OracleResult:
    kind: str
    witness: Union[Coloring, frozenset, None] = None
    value: Optional[int] = None
    nodes_explored: int = 0


class _Counter:
    def __init__(self, cap: int):
        self.cap = cap
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise CapExceeded(f"search exceeded {self.cap} nodes")


def exists_distance_fall(
    G: Graph, k: int, d: int, cap: int | None = None, prune: bool = True
) -> OracleResult:
    """Decide whether ``G`` has a distance-``d`` fall ``k``-coloring.

    Vertices are assigned in id order. With ``prune`` on, vertex 0 is fixed
    to color 0, new colors appear in ascending order, and a branch dies as
    soon as some vertex has fewer unassigned vertices in its ball than
    colors it still lacks. With ``prune`` off every one of the ``k**n``
    assignments is checked directly.
    """
    if k < 1 or d < 0:
        raise PreconditionError("need k >= 1 and d >= 0")
    counter = _Counter(node_cap() if cap is None else cap)
    n = G.n
    if not prune:
        for colors in product(range(k), repeat=n):
            counter.tick()
            c = Coloring(k, colors)
            if is_distance_fall(G, c, d):
                return OracleResult(EXISTS, c, nodes_explored=counter.nodes)
        return OracleResult(NOT_EXISTS, nodes_explored=counter.nodes)

    if k > n:
        return OracleResult(NOT_EXISTS, nodes_explored=0)
    balls = G.ball_masks(d)
    adj = G.adj
    masks = [0] * k
    col = [0] * n

    def feasible(i: int, used: int) -> bool:
        if k - used > n - i - 1:
            return False
        assigned = (1 << (i + 1)) - 1
        for v in range(n):
            ball = balls[v]
            free = bin(ball & ~assigned).count("1")
            lacking = sum(1 for m in masks if not m & ball)
            if lacking > free:
                return False
        return True

    def search(i: int, used: int) -> bool:
        if i == n:
            return True
        v = i
        taken = {col[w] for w in adj[v] if w < v}
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            counter.tick()
            col[v] = c
            masks[c] |= 1 << v
            new_used = max(used, c + 1)
            if feasible(i, new_used) and search(i + 1, new_used):
                return True
            masks[c] &= ~(1 << v)
        return False

    if search(0, 0):
        c = Coloring(k, tuple(col))
        if not is_distance_fall(G, c, d):
            raise ProofViolation("oracle witness failed re-verification", c)
        return OracleResult(EXISTS, c, nodes_explored=counter.nodes)
    return OracleResult(NOT_EXISTS, nodes_explored=counter.nodes)


def min_independent_distance_dominating(G: Graph, kdist: int, cap: int | None = None) -> OracleResult:
    """Exact independent distance-``kdist`` domination number with a witness.

    Iterative deepening on the set size. Each level branches on the ways to
    cover the smallest-id vertex not yet covered, so every branch adds a
    vertex from that vertex's ball.
    """
    if kdist < 1:
        raise PreconditionError("kdist must be at least 1")
    counter = _Counter(node_cap() if cap is None else cap)
    n = G.n
    if n == 0:
        return OracleResult(OPTIMUM, frozenset(), 0, 0)
    balls = G.ball_masks(kdist)
    adj = G.adj_masks
    full = (1 << n) - 1
    # a vertex s covers every u whose ball contains s; balls are symmetric
    cover = balls

    def search(size_left: int, chosen: int, blocked: int, covered: int) -> Optional[int]:
        if covered == full:
            return chosen
        if size_left == 0:
            return None
        uncovered = full & ~covered
        u = (uncovered & -uncovered).bit_length() - 1
        candidates = balls[u] & ~blocked
        while candidates:
            low = candidates & -candidates
            s = low.bit_length() - 1
            candidates ^= low
            counter.tick()
            found = search(size_left - 1, chosen | low, blocked | low | adj[s], covered | cover[s])
            if found is not None:
                return found
        return None

    for size in range(1, n + 1):
        found = search(size, 0, 0, 0)
        if found is not None:
            S = frozenset(v for v in range(n) if found >> v & 1)
            if not is_independent_distance_dominating(G, S, kdist):
                raise ProofViolation("oracle witness failed re-verification", S)
            return OracleResult(OPTIMUM, S, len(S), counter.nodes)
    raise ProofViolation("no independent dominating set found; maximal independent sets always dominate")


def _connected_mask(n: int, adj: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, by edge-subset bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        edges = []
        for idx, (u, v) in enumerate(pairs):
            if mask >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                edges.append((u, v))
        if n == 0 or _connected_mask(n, adj):
            yield build_graph(n, edges)


def labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, in lexicographic Prüfer order."""
    if n < 1:
        return
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def enumerate_instances(kind: str, n: int, max_order: int | None = None) -> Iterator[Graph]:
    if kind == LABELED_TREES:
        limit = MAX_TREE_ORDER if max_order is None else max_order
        gen = labeled_trees
    elif kind == LABELED_CONNECTED_GRAPHS:
        limit = MAX_GRAPH_ORDER if max_order is None else max_order
        gen = labeled_connected_graphs
    else:
        raise PreconditionError(f"unknown instance kind {kind!r}")
    if n > limit:
        raise CapExceeded(f"{kind} enumeration capped at n={limit}, asked for {n}")
    return gen(n)
