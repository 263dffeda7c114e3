"""Colorings of Cartesian products built from colorings of the factors.

Product vertex ``(g, h)`` is numbered ``g * |H| + h``. The pair coloring
flattens ``(fG(g), fH(h))`` to ``fG(g) * kH + fH(h)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import Coloring, is_distance_fall, is_proper
from .config import DEFAULT_SIZE_CAP
from .errors import ImproperInput, PaletteMismatch, PreconditionError, ProofViolation
from .graph import Graph, cartesian_product, random_tree, random_tripartite_connected
from .solvers import distance2_fall_3coloring, find_proper_k_coloring, tree_k_coloring


def _check_factor(G: Graph, f: Coloring, name: str) -> None:
    if len(f) != G.n:
        raise PreconditionError(f"{name}: coloring size {len(f)} does not match order {G.n}")
    if not f.is_total:
        raise PreconditionError(f"{name}: coloring must be total")
    if not is_proper(G, f):
        raise ImproperInput(f"{name}: coloring is not proper")


def sum_product_coloring(
    G: Graph, fG: Coloring, H: Graph, fH: Coloring, d: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> tuple[Graph, Coloring]:
    """Color ``G □ H`` by ``(fG(g) + fH(h)) mod k``.

    With ``d`` given, ``fG`` must be distance-``d`` fall and the product
    coloring is checked to be distance-``d`` fall as well.
    """
    _check_factor(G, fG, "G")
    _check_factor(H, fH, "H")
    if fG.k != fH.k:
        raise PaletteMismatch(f"palettes differ: {fG.k} vs {fH.k}")
    k = fG.k
    P = cartesian_product(G, H, size_cap)
    colors = tuple((a + b) % k for a in fG.colors for b in fH.colors)
    c = Coloring(k, colors)
    if d is not None:
        if not is_distance_fall(G, fG, d):
            raise PreconditionError(f"fG is not distance-{d} fall")
        if not is_distance_fall(P, c, d):
            raise ProofViolation(f"sum coloring of the product is not distance-{d} fall", (G, fG, H, fH))
    return P, c


def pair_product_coloring(
    G: Graph, fG: Coloring, H: Graph, fH: Coloring,
    d_G: int | None = None, d_H: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> tuple[Graph, Coloring]:
    """Color ``G □ H`` by the flattened pair ``fG(g) * kH + fH(h)``.

    With both distances given, the factors must be distance-``d_G`` and
    distance-``d_H`` fall and the product is checked at ``d_G + d_H``.
    """
    _check_factor(G, fG, "G")
    _check_factor(H, fH, "H")
    P = cartesian_product(G, H, size_cap)
    colors = tuple(a * fH.k + b for a in fG.colors for b in fH.colors)
    c = Coloring(fG.k * fH.k, colors)
    if d_G is not None and d_H is not None:
        if not is_distance_fall(G, fG, d_G) or not is_distance_fall(H, fH, d_H):
            raise PreconditionError("factor colorings are not distance-fall at the given distances")
        if not is_distance_fall(P, c, d_G + d_H):
            raise ProofViolation(
                f"pair coloring of the product is not distance-{d_G + d_H} fall", (G, fG, H, fH)
            )
    return P, c


@dataclass
class TrialFailure:
    seed: int
    kind: str
    G: Graph
    fG: Coloring
    H: Graph
    fH: Coloring
    reason: str


def sum_product_trials(count: int = 200, seed: int = 0) -> list[TrialFailure]:
    """Seeded random trials of the sum construction at distance 2, 3 colors.

    ``G`` gets a solver-built distance-2 fall 3-coloring, ``H`` any proper
    3-coloring from backtracking.
    """
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        trial_seed = rng.randrange(2**32)
        r = random.Random(trial_seed)
        G = random_tripartite_connected(r.randint(3, 8), r.uniform(0.2, 0.8), r.randrange(2**32))
        H = random_tripartite_connected(r.randint(1, 6), r.uniform(0.2, 0.8), r.randrange(2**32))
        fG = distance2_fall_3coloring(G)
        fH = find_proper_k_coloring(H, 3)
        try:
            sum_product_coloring(G, fG, H, fH, d=2)
        except ProofViolation as exc:
            failures.append(TrialFailure(trial_seed, "sum", G, fG, H, fH, str(exc)))
    return failures


def pair_product_trials(count: int = 100, seed: int = 0) -> list[TrialFailure]:
    """Seeded random trials of the pair construction on trees."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        trial_seed = rng.randrange(2**32)
        r = random.Random(trial_seed)
        G = random_tree(r.randint(2, 9), r.randrange(2**32))
        H = random_tree(r.randint(2, 9), r.randrange(2**32))
        kG, kH = r.randint(2, G.n), r.randint(2, H.n)
        fG, fH = tree_k_coloring(G, kG), tree_k_coloring(H, kH)
        try:
            pair_product_coloring(G, fG, H, fH, d_G=kG - 1, d_H=kH - 1)
        except ProofViolation as exc:
            failures.append(TrialFailure(trial_seed, "pair", G, fG, H, fH, str(exc)))
    return failures
