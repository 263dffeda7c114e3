"""Colorings and the predicates that verify them.

A vertex always represents its own color (distance 0), so the closed ball
of radius ``d`` is what a vertex "sees". Uncolored vertices still need to
see every color but contribute none.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PreconditionError, SizeMismatch
from .graph import Graph

UNCOLORED = None


@dataclass(frozen=True)
class Coloring:
    k: int
    colors: tuple[Optional[int], ...]

    def __post_init__(self):
        if self.k < 0:
            raise PreconditionError(f"palette size must be non-negative, got {self.k}")
        for c in self.colors:
            if c is not None and not (0 <= c < self.k):
                raise PreconditionError(f"color {c} outside palette 0..{self.k - 1}")

    @classmethod
    def of(cls, k: int, colors: Iterable[Optional[int]]) -> "Coloring":
        return cls(k, tuple(colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> Optional[int]:
        return self.colors[v]

    @property
    def is_total(self) -> bool:
        return UNCOLORED not in self.colors

    def uncolored(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c is None]

    def recolored(self, v: int, color: Optional[int]) -> "Coloring":
        colors = list(self.colors)
        colors[v] = color
        return Coloring(self.k, tuple(colors))


@dataclass(frozen=True)
class GoodnessReport:
    d: int
    missing: tuple[frozenset[int], ...]

    @property
    def bad_vertices(self) -> list[int]:
        return [v for v, miss in enumerate(self.missing) if miss]

    @property
    def bad_count(self) -> int:
        return sum(1 for miss in self.missing if miss)


def _check_size(G: Graph, c: Coloring) -> None:
    if len(c.colors) != G.n:
        raise SizeMismatch(f"coloring has {len(c.colors)} entries, graph has {G.n} vertices")


def improper_edges(G: Graph, c: Coloring) -> list[tuple[int, int]]:
    _check_size(G, c)
    col = c.colors
    return [(u, v) for u, v in G.edges() if col[u] is not None and col[u] == col[v]]


def is_proper(G: Graph, c: Coloring) -> bool:
    _check_size(G, c)
    col = c.colors
    for u, nbrs in enumerate(G.adj):
        cu = col[u]
        if cu is None:
            continue
        for v in nbrs:
            if col[v] == cu:
                return False
    return True


def seen_masks(G: Graph, c: Coloring, d: int) -> list[int]:
    """For each color, the set of vertices having it within distance ``d``.

    Balls are symmetric, so this is the union of the balls around the
    vertices of that color.
    """
    balls = G.ball_masks(d)
    seen = [0] * c.k
    for v, color in enumerate(c.colors):
        if color is not None:
            seen[color] |= balls[v]
    return seen


def goodness_partial(G: Graph, c: Coloring, d: int) -> GoodnessReport:
    _check_size(G, c)
    if d < 0:
        raise PreconditionError("distance must be non-negative")
    seen = seen_masks(G, c, d)
    missing = tuple(
        frozenset(color for color, m in enumerate(seen) if not m >> v & 1)
        for v in range(G.n)
    )
    return GoodnessReport(d, missing)


def goodness(G: Graph, c: Coloring, d: int) -> GoodnessReport:
    """Per-vertex colors absent from the closed distance-``d`` ball."""
    if not c.is_total:
        raise PreconditionError("goodness needs a total coloring; use goodness_partial")
    return goodness_partial(G, c, d)


def bad_count(G: Graph, c: Coloring, d: int) -> int:
    _check_size(G, c)
    good = (1 << G.n) - 1
    for m in seen_masks(G, c, d):
        good &= m
    return G.n - bin(good).count("1")


def is_distance_fall(G: Graph, c: Coloring, d: int) -> bool:
    """Proper (on colored pairs) and every vertex ``d``-good."""
    if not is_proper(G, c):
        return False
    return bad_count(G, c, d) == 0


def color_classes(c: Coloring) -> list[set[int]]:
    classes: list[set[int]] = [set() for _ in range(c.k)]
    for v, color in enumerate(c.colors):
        if color is not None:
            classes[color].add(v)
    return classes


def is_independent_distance_dominating(G: Graph, S: Iterable[int], kdist: int) -> bool:
    S = list(S)
    for s in S:
        if not 0 <= s < G.n:
            raise PreconditionError(f"vertex {s} out of range for n={G.n}")
    mask = 0
    for s in S:
        mask |= 1 << s
    adj = G.adj_masks
    if any(adj[s] & mask for s in S):
        return False
    return all(ball & mask for ball in G.ball_masks(kdist))


def is_blocked(G: Graph, c: Coloring, v: int) -> bool:
    """True when every palette color already appears on a neighbor of ``v``."""
    seen = {c.colors[w] for w in G.adj[v]}
    seen.discard(None)
    return len(seen) == c.k


def smallest_class(c: Coloring) -> set[int]:
    return min(color_classes(c), key=len)

