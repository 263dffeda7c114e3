"""Text formats for graphs and colorings.

Edge list::

    # optional comments
    n m
    u v        (m lines, u < v)

Coloring::

    # optional comments
    n k
    v c        (n lines in vertex order, c a color or "-" for uncolored)
"""
from __future__ import annotations

import sys
from typing import Iterable, TextIO

from .coloring import Coloring
from .errors import FormatError, PreconditionError
from .graph import Graph, build_graph


def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(stripped.split())
    return rows


def _ints(fields: list[str], what: str) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"{what}: expected integers, got {' '.join(fields)!r}") from None


def parse_graph(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty graph file")
    header = _ints(rows[0], "header")
    if len(header) != 2:
        raise FormatError("graph header must be 'n m'")
    n, m = header
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        pair = _ints(row, "edge")
        if len(pair) != 2:
            raise FormatError(f"edge line must have two endpoints: {' '.join(row)!r}")
        edges.append((min(pair), max(pair)))
    return build_graph(n, edges)


def serialize_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{G.n} {G.edge_count}")
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def graph_line(G: Graph) -> str:
    """One-line form used in sweep failure reports."""
    return f"n={G.n} edges=" + ",".join(f"{u}-{v}" for u, v in G.edges())


def parse_coloring(text: str) -> Coloring:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty coloring file")
    header = _ints(rows[0], "header")
    if len(header) != 2:
        raise FormatError("coloring header must be 'n k'")
    n, k = header
    if len(rows) - 1 != n:
        raise FormatError(f"header promises {n} vertices, found {len(rows) - 1}")
    colors = []
    for expected, row in enumerate(rows[1:]):
        if len(row) != 2:
            raise FormatError(f"coloring line must be 'v c': {' '.join(row)!r}")
        (v,) = _ints(row[:1], "vertex")
        if v != expected:
            raise FormatError(f"vertex lines out of order: expected {expected}, got {v}")
        colors.append(None if row[1] == "-" else _ints(row[1:], "color")[0])
    try:
        return Coloring(k, tuple(colors))
    except PreconditionError as exc:
        raise FormatError(str(exc)) from None


def serialize_coloring(c: Coloring, comments: Iterable[str] = ()) -> str:
    lines = [f"# {x}" for x in comments]
    lines.append(f"{len(c)} {c.k}")
    lines += [f"{v} {'-' if col is None else col}" for v, col in enumerate(c.colors)]
    return "\n".join(lines) + "\n"


def read_text(path: str, stdin: TextIO | None = None) -> str:
    if path == "-":
        return (stdin or sys.stdin).read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
