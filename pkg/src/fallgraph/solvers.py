"""Constructive solvers for distance-fall colorings.

Three constructions live here:

* ``repair_distance2_fall`` turns any proper 3-coloring of a connected graph
  into one where every vertex is 2-good, by repeatedly recoloring either a
  2-bad vertex or a pendant neighbour of it.
* ``tree_k_coloring`` colors a tree along a diametral path so that every
  vertex sees all ``k`` colors within distance ``k - 1``.
* ``partial_3coloring_distance3`` runs extend/repair local search to a
  partial 3-coloring in which every vertex is 3-good.

Each solver re-verifies its output and raises ``ProofViolation`` instead of
returning something that does not meet its contract.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coloring import (
    Coloring,
    bad_count,
    goodness,
    goodness_partial,
    improper_edges,
    is_blocked,
    is_independent_distance_dominating,
    is_proper,
    smallest_class,
)
from .config import node_cap
from .errors import (
    BudgetExceeded,
    NotATree,
    NotThreeColorable,
    OrderTooSmall,
    PreconditionError,
    ProofViolation,
)
from .graph import Graph, diametral_decomposition, is_connected, is_tree


@dataclass(frozen=True)
class RepairStep:
    vertex: int
    old: Optional[int]
    new: Optional[int]
    bad_count: int


@dataclass
class RepairTrace:
    initial_bad_count: int
    steps: list[RepairStep] = field(default_factory=list)

    @property
    def final_bad_count(self) -> int:
        return self.steps[-1].bad_count if self.steps else self.initial_bad_count

    def is_strictly_decreasing(self) -> bool:
        counts = [self.initial_bad_count] + [s.bad_count for s in self.steps]
        return all(a > b for a, b in zip(counts, counts[1:]))

    def replay(self, start: Coloring) -> list[Coloring]:
        """Colorings after each step, starting from ``start``."""
        out = []
        c = start
        for step in self.steps:
            if c.colors[step.vertex] != step.old:
                raise ValueError(f"trace does not match coloring at vertex {step.vertex}")
            c = c.recolored(step.vertex, step.new)
            out.append(c)
        return out


# -- proper colorings by backtracking ----------------------------------------

def degeneracy_order(G: Graph) -> list[int]:
    """Smallest-last order: reverse of repeatedly deleting a min-degree vertex."""
    deg = [len(nbrs) for nbrs in G.adj]
    alive = [True] * G.n
    removed = []
    for _ in range(G.n):
        v = min((u for u in range(G.n) if alive[u]), key=lambda u: (deg[u], u))
        alive[v] = False
        removed.append(v)
        for w in G.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return removed[::-1]


def find_proper_k_coloring(G: Graph, k: int, budget: int | None = None) -> Optional[Coloring]:
    """Backtracking search for a proper ``k``-coloring.

    Returns ``None`` when the search space is exhausted. Raises
    ``BudgetExceeded`` if more than ``budget`` assignments are tried first.
    Colors are introduced in ascending order of first use, which prunes
    palette permutations without losing any solution.
    """
    if k < 1:
        raise PreconditionError("palette size must be at least 1")
    if budget is None:
        budget = node_cap()
    n = G.n
    if n == 0:
        return Coloring(k, ())
    order = degeneracy_order(G)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    earlier = [[w for w in G.adj[v] if pos[w] < i] for i, v in enumerate(order)]

    col = [-1] * n
    tried = [-1] * n
    used = [0] * (n + 1)  # used[i]: number of distinct colors among order[:i]
    nodes = 0
    i = 0
    while i >= 0:
        if i == n:
            return Coloring(k, tuple(col))
        v = order[i]
        forbidden = {col[w] for w in earlier[i]}
        limit = min(k, used[i] + 1)
        c = tried[i] + 1
        while c < limit and c in forbidden:
            c += 1
        if c >= limit:
            tried[i] = -1
            col[v] = -1
            i -= 1
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"no answer within {budget} backtracking nodes")
        tried[i] = c
        col[v] = c
        used[i + 1] = max(used[i], c + 1)
        i += 1
    return None


# -- distance-2 fall 3-colorings ---------------------------------------------

def _require_connected_order3(G: Graph) -> None:
    if G.n < 3:
        raise PreconditionError(f"need order at least 3, got {G.n}")
    if not is_connected(G):
        raise PreconditionError("graph must be connected")


def _recolor_target(G: Graph, colors: list, v: int, missing: frozenset, trace) -> tuple[int, int]:
    """Pick the vertex to recolor for a 2-bad vertex ``v`` whose 2-ball is fully colored.

    ``N(v)`` must be a single color and exactly one color is missing. A
    pendant neighbour gets the missing color if there is one; otherwise
    ``v`` does.
    """
    nbr_colors = {colors[w] for w in G.adj[v]}
    if len(nbr_colors) != 1 or len(missing) != 1:
        raise ProofViolation(
            f"2-bad vertex {v}: neighbour colors {sorted(nbr_colors)}, missing {sorted(missing)}",
            trace,
        )
    (mu,) = missing
    for w in G.adj[v]:
        if len(G.adj[w]) == 1:
            return w, mu
    return v, mu


def repair_distance2_fall(G: Graph, c0: Coloring) -> tuple[Coloring, RepairTrace]:
    """Recolor a proper 3-coloring until no vertex is 2-bad.

    The number of 2-bad vertices must drop on every step; a step that fails
    to do so raises ``ProofViolation`` carrying the trace so far.
    """
    _require_connected_order3(G)
    if c0.k != 3 or not c0.is_total:
        raise PreconditionError("need a total coloring with palette size 3")
    if len(c0) != G.n:
        raise PreconditionError("coloring size does not match graph")
    if not is_proper(G, c0):
        raise PreconditionError(f"initial coloring is improper on {improper_edges(G, c0)}")

    c = c0
    report = goodness(G, c, 2)
    trace = RepairTrace(report.bad_count)
    for _ in range(G.n + 1):
        bad = report.bad_vertices
        if not bad:
            break
        v = bad[0]
        colors = list(c.colors)
        target, mu = _recolor_target(G, colors, v, report.missing[v], trace)
        prev = report.bad_count
        old = colors[target]
        c = c.recolored(target, mu)
        report = goodness(G, c, 2)
        trace.steps.append(RepairStep(target, old, mu, report.bad_count))
        if report.bad_count >= prev or not is_proper(G, c):
            raise ProofViolation(
                f"recoloring {target} {old}->{mu} did not reduce the 2-bad count ({prev} -> {report.bad_count})",
                trace,
            )
    if report.bad_count:
        raise ProofViolation("repair did not terminate within n steps", trace)
    return c, trace


def distance2_fall_3coloring(G: Graph, budget: int | None = None) -> Coloring:
    return solve_distance2_fall(G, budget)[0]


def solve_distance2_fall(G: Graph, budget: int | None = None) -> tuple[Coloring, RepairTrace]:
    """Backtracking 3-coloring followed by ``repair_distance2_fall``."""
    _require_connected_order3(G)
    c0 = find_proper_k_coloring(G, 3, budget)
    if c0 is None:
        raise NotThreeColorable("graph has no proper 3-coloring")
    c, trace = repair_distance2_fall(G, c0)
    if not is_proper(G, c) or bad_count(G, c, 2):
        raise ProofViolation("output is not a distance-2 fall 3-coloring", trace)
    return c, trace


# -- trees --------------------------------------------------------------------

def _preorder(T: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    parent = [-1] * T.n
    order = []
    seen = [False] * T.n
    stack = [root]
    seen[root] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in reversed(T.adj[u]):
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    return order, parent


def tree_k_coloring(T: Graph, k: int) -> Coloring:
    """Proper ``k``-coloring of a tree with every vertex ``(k-1)``-good.

    Long trees (diameter >= k) are colored by position along a diametral
    path: path vertex ``i`` gets ``i mod k`` and everything hanging off the
    path copies the path vertex at the same distance from its side's end of
    the central edge. Short trees get the first ``k`` preorder vertices
    colored ``0..k-1`` and every later vertex its parent's color plus one.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    if not is_tree(T):
        raise NotATree("input is not a tree")
    if T.n < k:
        raise OrderTooSmall(f"tree of order {T.n} cannot use {k} colors")

    dec = diametral_decomposition(T)
    d = dec.diameter
    colors = [0] * T.n
    if d >= k:
        m = dec.central_index
        for w in range(T.n):
            j = dec.anchor_distance[w]
            colors[w] = (m - j) % k if dec.side[w] == "U" else (m + 1 + j) % k
    else:
        order, parent = _preorder(T)
        for i, w in enumerate(order):
            colors[w] = i if i < k else (colors[parent[w]] + 1) % k

    c = Coloring(k, tuple(colors))
    if not is_proper(T, c) or bad_count(T, c, k - 1):
        raise ProofViolation(f"tree coloring {colors} is not distance-{k - 1} fall", dec)
    return c


def tree_idd_witness(T: Graph, kdist: int) -> set[int]:
    """Independent distance-``kdist`` dominating set of size at most ``n // (kdist + 1)``."""
    if kdist < 1:
        raise PreconditionError("kdist must be at least 1")
    c = tree_k_coloring(T, kdist + 1)
    S = smallest_class(c)
    if len(S) > T.n // (kdist + 1) or not is_independent_distance_dominating(T, S, kdist):
        raise ProofViolation(f"color class {sorted(S)} fails the domination bound", c)
    return S


# -- partial 3-colorings, distance 3 ------------------------------------------

def _free_color(G: Graph, colors: list, v: int) -> Optional[int]:
    taken = {colors[w] for w in G.adj[v]}
    for c in range(3):
        if c not in taken:
            return c
    return None


def _repairable(G: Graph, colors: list) -> tuple[list[int], list[frozenset]]:
    """Colored 2-bad vertices whose closed 2-ball is entirely colored."""
    c = Coloring(3, tuple(colors))
    report = goodness_partial(G, c, 2)
    uncolored = 0
    for v, col in enumerate(colors):
        if col is None:
            uncolored |= 1 << v
    balls = G.ball_masks(2)
    out = [
        v for v in report.bad_vertices
        if colors[v] is not None and not balls[v] & uncolored
    ]
    return out, list(report.missing)


def partial_3coloring_trace(G: Graph) -> tuple[Coloring, RepairTrace]:
    """Extend/repair local search; the trace logs every step.

    For extension steps ``old`` is ``None``. ``bad_count`` in each step is
    the number of repairable vertices afterwards; progress is measured by
    the pair (colored count, -repairable count), which must strictly
    increase lexicographically.
    """
    _require_connected_order3(G)
    n = G.n
    colors: list = [None] * n
    repairable, _ = _repairable(G, colors)
    trace = RepairTrace(len(repairable))
    potential = (0, -len(repairable))
    for _ in range(n * (n + 2)):
        step = None
        for v in range(n):
            if colors[v] is None:
                free = _free_color(G, colors, v)
                if free is not None:
                    step = (v, free)
                    break
        if step is None:
            repairable, missing = _repairable(G, colors)
            if not repairable:
                break
            v = repairable[0]
            step = _recolor_target(G, colors, v, missing[v], trace)
        target, new = step
        old = colors[target]
        colors[target] = new
        repairable, _ = _repairable(G, colors)
        trace.steps.append(RepairStep(target, old, new, len(repairable)))
        colored = n - colors.count(None)
        now = (colored, -len(repairable))
        if now <= potential or not is_proper(G, Coloring(3, tuple(colors))):
            raise ProofViolation(f"step {target}: {old}->{new} did not improve {potential} -> {now}", trace)
        potential = now
    else:
        raise ProofViolation("local search hit its iteration cap", trace)

    c = Coloring(3, tuple(colors))
    blocked = all(is_blocked(G, c, v) for v in c.uncolored())
    if not blocked or not is_proper(G, c) or goodness_partial(G, c, 3).bad_count:
        raise ProofViolation(f"final partial coloring {colors} is not 3-good everywhere", trace)
    return c, trace


def partial_3coloring_distance3(G: Graph) -> Coloring:
    return partial_3coloring_trace(G)[0]

