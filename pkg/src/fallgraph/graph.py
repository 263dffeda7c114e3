"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable. Hop distances, ball bitmasks and structural facts are
computed lazily and cached on the instance, so a graph can be shared freely
between verifiers and solvers.
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT_SIZE_CAP
from .errors import BadParams, CapExceeded, InvalidGraph, NotATree

UNREACHABLE = math.inf

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def edge_count(self) -> int:
        m = self._cache.get("m")
        if m is None:
            m = self._cache["m"] = sum(len(nbrs) for nbrs in self.adj) // 2
        return m

    def edges(self) -> Iterator[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_neighborhood(self, v: int) -> set[int]:
        return {v, *self.adj[v]}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def adj_masks(self) -> tuple[int, ...]:
        masks = self._cache.get("adj_masks")
        if masks is None:
            masks = tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)
            self._cache["adj_masks"] = masks
        return masks

    @property
    def distances(self) -> DistanceMatrix:
        dm = self._cache.get("dist")
        if dm is None:
            dm = DistanceMatrix(tuple(bfs_distances(self, s) for s in range(self.n)))
            self._cache["dist"] = dm
        return dm

    def ball_masks(self, d: int) -> tuple[int, ...]:
        """Bitmask of the closed distance-``d`` ball around every vertex."""
        layers = self._cache.get("balls")
        if layers is None:
            layers = []
            for row in self.distances.rows:
                ecc = int(max((x for x in row if x != UNREACHABLE), default=0))
                cum = [0] * (ecc + 1)
                for u, du in enumerate(row):
                    if du != UNREACHABLE:
                        cum[int(du)] |= 1 << u
                for r in range(1, ecc + 1):
                    cum[r] |= cum[r - 1]
                layers.append(cum)
            self._cache["balls"] = layers
        if d < 0:
            return (0,) * self.n
        return tuple(cum[d] if d < len(cum) else cum[-1] for cum in layers)

    def ball(self, v: int, d: int) -> list[int]:
        row = self.distances.rows[v]
        return [u for u in range(self.n) if row[u] <= d]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances; ``UNREACHABLE`` (infinity) across components."""

    rows: tuple[tuple[float, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self.rows[u][v]

    @property
    def n(self) -> int:
        return len(self.rows)

    def eccentricity(self, v: int) -> float:
        return max(self.rows[v], default=0)

    def diameter(self) -> float:
        return max((self.eccentricity(v) for v in range(self.n)), default=0)


@dataclass(frozen=True)
class Structure:
    is_connected: bool
    is_tree: bool
    diameter: int | None


@dataclass(frozen=True)
class DiametralDecomposition:
    path: tuple[int, ...]
    central_edge: tuple[int, int]
    side: tuple[str, ...]  # "U" or "V" per vertex
    anchor_distance: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.path) - 1

    @property
    def central_index(self) -> int:
        """Index ``m`` with ``central_edge == (path[m], path[m + 1])``."""
        return math.ceil(self.diameter / 2) - 1


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise InvalidGraph(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        a, b = int(e[0]), int(e[1])
        if a == b:
            raise InvalidGraph(f"self-loop at {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidGraph(f"edge ({a}, {b}) out of range for n={n}")
        if b in nbrs[a]:
            raise InvalidGraph(f"duplicate edge ({min(a, b)}, {max(a, b)})")
        nbrs[a].add(b)
        nbrs[b].add(a)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(G: Graph, source: int) -> tuple[float, ...]:
    dist: list[float] = [UNREACHABLE] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in G.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return tuple(dist)


def _bfs_tree(G: Graph, source: int) -> tuple[list[float], list[int]]:
    """Distances and BFS parents; neighbors are scanned in ascending order."""
    dist: list[float] = [UNREACHABLE] * G.n
    parent = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    return G.distances


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return UNREACHABLE not in G.distances.rows[0]


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.edge_count == G.n - 1 and is_connected(G)


def structure_queries(G: Graph) -> Structure:
    connected = is_connected(G)
    diameter = int(G.distances.diameter()) if connected else None
    return Structure(
        is_connected=connected,
        is_tree=connected and G.n >= 1 and G.edge_count == G.n - 1,
        diameter=diameter,
    )


def _farthest(dist: Sequence[float]) -> int:
    best = max(dist)
    return dist.index(best)  # smallest id among the farthest


def diametral_decomposition(T: Graph) -> DiametralDecomposition:
    """Split a tree at the central edge of a double-BFS diametral path.

    BFS from vertex 0 finds ``x``; BFS from ``x`` finds ``y``; the path is
    read off the parent pointers starting at ``y``, so ``path[0] == y``.
    """
    if T.n < 2 or not is_tree(T):
        raise NotATree("diametral decomposition needs a tree with at least 2 vertices")
    cached = T._cache.get("diametral")
    if cached is not None:
        return cached
    x = _farthest(T.distances.rows[0])
    dist_x, parent = _bfs_tree(T, x)
    y = _farthest(dist_x)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    d = len(path) - 1
    m = math.ceil(d / 2) - 1
    u, v = path[m], path[m + 1]

    side = [""] * T.n
    anchor = [0] * T.n
    for anchor_vertex, tag, blocked in ((u, "U", v), (v, "V", u)):
        side[anchor_vertex] = tag
        queue = deque([anchor_vertex])
        while queue:
            a = queue.popleft()
            for w in T.adj[a]:
                if w != blocked and not side[w]:
                    side[w] = tag
                    anchor[w] = anchor[a] + 1
                    queue.append(w)
    dec = DiametralDecomposition(tuple(path), (u, v), tuple(side), tuple(anchor))
    T._cache["diametral"] = dec
    return dec


def cartesian_product(G: Graph, H: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """``G □ H`` with vertex ``(g, h)`` numbered ``g * H.n + h``."""
    size = G.n * H.n
    if size > size_cap:
        raise CapExceeded(f"product order {size} exceeds cap {size_cap}")
    edges = []
    for g in range(G.n):
        for h1, h2 in H.edges():
            edges.append((g * H.n + h1, g * H.n + h2))
    for g1, g2 in G.edges():
        for h in range(H.n):
            edges.append((g1 * H.n + h, g2 * H.n + h))
    return build_graph(size, edges)


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length ``n - 2`` into a labeled tree."""
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                break
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return build_graph(n, edges)


# -- generators -------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices, center 0 (so ``K_{1,4}`` is ``star_graph(5)``)."""
    if n < 2:
        raise BadParams("star needs n >= 2")
    return build_graph(n, [(0, i) for i in range(1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def path_complete_graph(clique: int, tail: int) -> Graph:
    """``K_clique`` on ``0..c-1``, path ``c..c+t-1``, joining edge ``(c-1, c)``."""
    if clique < 1 or tail < 1:
        raise BadParams("path_complete needs clique >= 1 and tail >= 1")
    edges = list(combinations(range(clique), 2))
    edges.append((clique - 1, clique))
    edges += [(i, i + 1) for i in range(clique, clique + tail - 1)]
    return build_graph(clique + tail, edges)


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise BadParams("random_tree needs n >= 1")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_tripartite_connected(n: int, p: float, seed: int) -> Graph:
    """Random connected graph whose edges only join three fixed vertex classes.

    Classes come from a seeded shuffle; edges between different classes are
    kept with probability ``p``, then components are stitched together with
    extra cross-class edges.
    """
    if n < 1 or not 0.0 <= p <= 1.0:
        raise BadParams("random_tripartite_connected needs n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    cls = [0] * n
    for pos, v in enumerate(order):
        cls[v] = pos % 3
    edges = {(u, v) for u, v in combinations(range(n), 2) if cls[u] != cls[v] and rng.random() < p}
    while True:
        G = build_graph(n, sorted(edges))
        reach = bfs_distances(G, 0)
        inside = [v for v in range(n) if reach[v] != UNREACHABLE]
        if len(inside) == n:
            return G
        outside = [v for v in range(n) if reach[v] == UNREACHABLE]
        candidates = [(a, b) for a in inside for b in outside if cls[a] != cls[b]]
        a, b = rng.choice(candidates)
        edges.add((min(a, b), max(a, b)))


FAMILIES = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "star": ("n",),
    "petersen": (),
    "path_complete": ("clique", "tail"),
    "random_tree": ("n",),
    "random_tripartite_connected": ("n", "p"),
}

RANDOM_FAMILIES = {"random_tree", "random_tripartite_connected"}


def generate(family: str, seed: int | None = None, **params) -> Graph:
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}")
    missing = [name for name in FAMILIES[family] if params.get(name) is None]
    if missing:
        raise BadParams(f"family {family} needs {', '.join(missing)}")
    if family in RANDOM_FAMILIES and seed is None:
        raise BadParams(f"family {family} needs a seed")
    if family == "path":
        return path_graph(params["n"])
    if family == "cycle":
        return cycle_graph(params["n"])
    if family == "complete":
        return complete_graph(params["n"])
    if family == "star":
        return star_graph(params["n"])
    if family == "petersen":
        return petersen_graph()
    if family == "path_complete":
        return path_complete_graph(params["clique"], params["tail"])
    if family == "random_tree":
        return random_tree(params["n"], seed)
    return random_tripartite_connected(params["n"], params["p"], seed)
