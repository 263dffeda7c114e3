import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fallgraph.coloring import (
    Coloring,
    color_classes,
    goodness,
    goodness_partial,
    is_distance_fall,
    is_independent_distance_dominating,
    is_proper,
)
from fallgraph.errors import PreconditionError, SizeMismatch
from fallgraph.graph import build_graph, complete_graph, cycle_graph, path_graph, petersen_graph

from conftest import brute_fall, floyd_warshall, graphs

C5_WITNESS = Coloring(3, (0, 1, 0, 1, 2))


def test_is_proper_examples(c5):
    K2 = path_graph(2)
    assert is_proper(K2, Coloring(2, (0, 1)))
    assert not is_proper(K2, Coloring(2, (0, 0)))
    assert is_proper(c5, C5_WITNESS)


def test_is_proper_partial_ignores_uncolored():
    P3 = path_graph(3)
    assert is_proper(P3, Coloring(2, (None, None, 0)))


def test_size_mismatch(c5):
    with pytest.raises(SizeMismatch):
        is_proper(c5, Coloring(3, (0, 1)))
    with pytest.raises(SizeMismatch):
        goodness(c5, Coloring(3, (0, 1, 2)), 2)


def test_coloring_rejects_out_of_palette():
    with pytest.raises(PreconditionError):
        Coloring(2, (0, 2))


def test_goodness_c5(c5):
    assert goodness(c5, C5_WITNESS, 2).bad_count == 0
    rep = goodness(c5, C5_WITNESS, 1)
    assert 1 in rep.bad_vertices
    assert rep.missing[1] == {2}


def test_goodness_single_color():
    G = cycle_graph(6)
    for d in range(4):
        assert goodness(G, Coloring(1, (0,) * 6), d).bad_count == 0


def test_goodness_requires_total():
    with pytest.raises(PreconditionError):
        goodness(path_graph(2), Coloring(2, (0, None)), 1)


def test_goodness_partial_examples():
    K4 = complete_graph(4)
    assert goodness_partial(K4, Coloring(3, (0, 1, 2, None)), 1).bad_count == 0
    rep = goodness_partial(path_graph(2), Coloring(2, (0, None)), 5)
    assert rep.bad_vertices == [0, 1]
    assert goodness_partial(path_graph(3), Coloring(3, (0, 1, 2)), 2).bad_count == 0


def test_is_distance_fall_examples(c5):
    # bipartite coloring is a fall coloring
    for G in (path_graph(6), cycle_graph(8), build_graph(5, [(0, 3), (0, 4), (1, 3), (2, 4), (1, 4)])):
        col = [None] * G.n
        col[0] = 0
        stack = [0]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if col[w] is None:
                    col[w] = 1 - col[u]
                    stack.append(w)
        assert is_distance_fall(G, Coloring(2, tuple(col)), 1)
    # no proper 3-coloring of C5 is a fall coloring
    for colors in itertools.product(range(3), repeat=5):
        c = Coloring(3, colors)
        if is_proper(c5, c):
            assert not is_distance_fall(c5, c, 1)
    # every proper coloring of a diameter-2 graph using all colors is distance-2 fall
    P = petersen_graph()
    for colors in itertools.product(range(3), repeat=10):
        if colors[0] != 0 or len(set(colors)) < 3:
            continue
        c = Coloring(3, colors)
        if is_proper(P, c):
            assert is_distance_fall(P, c, 2)


def test_unused_color_is_never_fall(c5):
    c = Coloring(3, (0, 1, 0, 1, 0))
    for d in range(5):
        assert not is_distance_fall(c5, c, d)


def test_color_classes():
    assert color_classes(C5_WITNESS) == [{0, 2}, {1, 3}, {4}]
    assert color_classes(Coloring(3, (None,) * 4)) == [set(), set(), set()]
    assert color_classes(Coloring(2, (0, 1))) == [{0}, {1}]


def test_independent_distance_dominating(c5):
    assert is_independent_distance_dominating(c5, {0, 2}, 1)
    assert not is_independent_distance_dominating(c5, {0, 1}, 1)
    assert is_independent_distance_dominating(path_graph(7), {1, 4}, 2)
    with pytest.raises(PreconditionError):
        is_independent_distance_dominating(c5, {7}, 1)


@st.composite
def graph_and_coloring(draw, partial=False):
    G = draw(graphs(max_n=8))
    k = draw(st.integers(1, 4))
    choices = st.integers(0, k - 1) | st.none() if partial else st.integers(0, k - 1)
    colors = tuple(draw(st.lists(choices, min_size=G.n, max_size=G.n)))
    return G, Coloring(k, colors)


@given(graph_and_coloring(partial=True), st.integers(0, 4))
def test_verifier_matches_definition(gc, d):
    G, c = gc
    assert is_distance_fall(G, c, d) == brute_fall(G, c.colors, c.k, d)
    rep = goodness_partial(G, c, d)
    dist = floyd_warshall(G)
    for v in range(G.n):
        near = {c[u] for u in range(G.n) if dist[v][u] <= d} - {None}
        assert rep.missing[v] == set(range(c.k)) - near
        if c[v] is not None:
            assert c[v] not in rep.missing[v]
    assert set(rep.bad_vertices) == {v for v in range(G.n) if rep.missing[v]}


@given(graph_and_coloring(), st.integers(0, 4))
def test_fall_iff_classes_are_independent_dominating(gc, d):
    G, c = gc
    classes = color_classes(c)
    assert is_distance_fall(G, c, d) == all(
        is_independent_distance_dominating(G, S, d) for S in classes
    )


@given(graph_and_coloring(), st.integers(0, 4))
def test_fall_is_monotone_in_distance(gc, d):
    G, c = gc
    if is_distance_fall(G, c, d):
        assert all(is_distance_fall(G, c, d2) for d2 in range(d, d + 4))


@given(graphs(max_n=8, connected=True), st.integers(1, 4), st.randoms(use_true_random=False))
def test_ball_beyond_diameter_sees_all_used_colors(G, k, rnd):
    if G.n < k:
        return
    colors = [rnd.randrange(k) for _ in range(G.n)]
    colors[:k] = range(k)
    c = Coloring(k, tuple(colors))
    assert goodness(G, c, int(G.distances.diameter())).bad_count == 0


@given(graph_and_coloring(), st.integers(0, 4))
def test_partial_goodness_agrees_on_total(gc, d):
    G, c = gc
    assert goodness(G, c, d) == goodness_partial(G, c, d)
