"""Exhaustive sweeps over small labeled instances.

Each sweep walks every labeled instance up to ``max_n`` and checks one
theorem-level property, collecting a failure line per violation. Work can
be split across processes: worker ``j`` of ``W`` handles the instances whose
running index is ``j mod W``; results are merged in index order.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import (
    goodness_partial,
    is_blocked,
    is_distance_fall,
    is_independent_distance_dominating,
    is_proper,
    smallest_class,
)
from .errors import FallGraphError
from .formats import graph_line
from .graph import Graph
from .oracle import (
    LABELED_CONNECTED_GRAPHS,
    LABELED_TREES,
    enumerate_instances,
    min_independent_distance_dominating,
)
from .solvers import (
    find_proper_k_coloring,
    partial_3coloring_trace,
    repair_distance2_fall,
    tree_idd_witness,
    tree_k_coloring,
)

THEOREMS = ("1", "2", "3", "conjecture")


@dataclass
class SweepReport:
    theorem: str
    max_n: int
    checked: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)
    skipped: int = 0

    @property
    def failed(self) -> int:
        return len(self.failures)

    def summary(self) -> str:
        return f"checked={self.checked} failed={self.failed}"

    def lines(self) -> list[str]:
        return [f"FAIL {line}" for _, line in sorted(self.failures)] + [self.summary()]


def _fail(G: Graph, reason: str) -> str:
    return f"{graph_line(G)} :: {reason}"


def check_theorem1(G: Graph) -> tuple[int, list[str]]:
    """Distance-2 fall repair plus the n/3 corollary. Returns (checked, failures)."""
    c0 = find_proper_k_coloring(G, 3)
    if c0 is None:
        return 0, []
    try:
        c, trace = repair_distance2_fall(G, c0)
    except FallGraphError as exc:
        return 1, [_fail(G, f"{type(exc).__name__}: {exc}")]
    out = []
    if not is_distance_fall(G, c, 2):
        out.append(_fail(G, "output not distance-2 fall"))
    if not trace.is_strictly_decreasing():
        out.append(_fail(G, "repair trace not strictly decreasing"))
    S = smallest_class(c)
    if len(S) > G.n // 3 or not is_independent_distance_dominating(G, S, 2):
        out.append(_fail(G, f"smallest class {sorted(S)} breaks the n/3 bound"))
    return 1, out


def check_theorem2(T: Graph) -> tuple[int, list[str]]:
    out = []
    checked = 0
    for k in range(2, T.n + 1):
        checked += 1
        try:
            c = tree_k_coloring(T, k)
        except FallGraphError as exc:
            out.append(_fail(T, f"k={k} {type(exc).__name__}: {exc}"))
            continue
        if c.k != k or not c.is_total or not is_distance_fall(T, c, k - 1):
            out.append(_fail(T, f"k={k} coloring not distance-{k - 1} fall"))
    return checked, out


def check_theorem3(G: Graph) -> tuple[int, list[str]]:
    try:
        c, _ = partial_3coloring_trace(G)
    except FallGraphError as exc:
        return 1, [_fail(G, f"{type(exc).__name__}: {exc}")]
    if not is_proper(G, c) or goodness_partial(G, c, 3).bad_count:
        return 1, [_fail(G, "partial coloring not 3-good everywhere")]
    if not all(is_blocked(G, c, v) for v in c.uncolored()):
        return 1, [_fail(G, "an uncolored vertex could still be colored")]
    return 1, []


def check_conjecture(T: Graph) -> tuple[int, list[str]]:
    out = []
    checked = 0
    for kdist in range(1, T.n):
        checked += 1
        bound = T.n // (kdist + 1)
        opt = min_independent_distance_dominating(T, kdist)
        if opt.value > bound:
            out.append(_fail(T, f"kdist={kdist} optimum {opt.value} > {bound}"))
        try:
            S = tree_idd_witness(T, kdist)
        except FallGraphError as exc:
            out.append(_fail(T, f"kdist={kdist} {type(exc).__name__}: {exc}"))
            continue
        if len(S) > bound or len(S) < opt.value or not is_independent_distance_dominating(T, S, kdist):
            out.append(_fail(T, f"kdist={kdist} witness {sorted(S)} invalid"))
    return checked, out


_PLAN = {
    "1": (LABELED_CONNECTED_GRAPHS, 3, check_theorem1),
    "2": (LABELED_TREES, 2, check_theorem2),
    "3": (LABELED_CONNECTED_GRAPHS, 3, check_theorem3),
    "conjecture": (LABELED_TREES, 2, check_conjecture),
}


def _run_share(theorem: str, max_n: int, worker: int, workers: int) -> SweepReport:
    kind, min_n, check = _PLAN[theorem]
    report = SweepReport(theorem, max_n)
    index = 0
    for n in range(min_n, max_n + 1):
        for G in enumerate_instances(kind, n):
            if index % workers == worker:
                checked, failures = check(G)
                report.checked += checked
                if not checked:
                    report.skipped += 1
                report.failures += [(index, f) for f in failures]
            index += 1
    return report


def run_sweep(theorem: str, max_n: int, workers: int = 1) -> SweepReport:
    """Run one exhaustive sweep. Enumeration caps are checked before any work."""
    if theorem not in _PLAN:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")
    kind, min_n, _ = _PLAN[theorem]
    for n in range(min_n, max_n + 1):
        enumerate_instances(kind, n)  # raises CapExceeded up front
    if workers <= 1:
        return _run_share(theorem, max_n, 0, 1)
    with ProcessPoolExecutor(workers) as pool:
        parts = list(pool.map(_run_share, [theorem] * workers, [max_n] * workers,
                              range(workers), [workers] * workers))
    merged = SweepReport(theorem, max_n)
    for part in parts:
        merged.checked += part.checked
        merged.skipped += part.skipped
        merged.failures += part.failures
    merged.failures.sort()
    return merged
