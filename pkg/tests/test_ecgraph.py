import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorpoly import catalog
from colorpoly.ecgraph import (colors_of, colorset, components_under, delete_color,
                               find_one_factorization, iter_one_factorizations, parse_graph,
                               parse_simple_graph, simple_graph)
from colorpoly.errors import (DuplicateEdge, Infeasible, LoopEdge, MalformedLine, NotConnected,
                              NotProperlyColored, NotRegular, TooManyColors)

from conftest import random_colored_graph

K4_TEXT = "1 2 a\n3 4 a\n1 3 b\n2 4 b\n1 4 c\n2 3 c\n"


def test_parse_k4(k4):
    assert (k4.n, k4.r) == (4, 3)
    assert list(k4.vertex_names) == ["1", "2", "3", "4"]
    assert list(k4.color_names) == ["a", "b", "c"]
    assert k4.nbr[0][0] == 1  # 1 -a- 2


def test_comments_and_blank_lines():
    g = parse_graph("# header\n\n1 2 a  # trailing\n")
    assert (g.n, g.r) == (2, 1)


def test_single_edge_is_valid():
    g = parse_graph("1 2 a\n")
    assert g.edges() == [(0, 1, 0)]


@pytest.mark.parametrize("text, err", [
    ("1 2 a\n2 3 b\n1 3 c\n", NotRegular),
    ("1 2\n", MalformedLine),
    ("1 1 a\n", LoopEdge),
    ("1 2 a\n1 2 b\n", DuplicateEdge),
    ("1 2 a\n3 4 a\n", NotConnected),
    ("1 2 a\n3 4 a\n1 3 b\n2 4 b\n1 4 c\n2 3 a\n", NotProperlyColored),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_graph(text)


def test_not_regular_message():
    with pytest.raises(NotRegular, match="degree 2, expected 3"):
        parse_graph("1 2 a\n2 3 b\n1 3 c\n")


def test_improper_coloring_message():
    with pytest.raises(NotProperlyColored, match=r"colors \{a,a,b\}"):
        parse_graph("1 2 a\n3 4 a\n1 3 b\n2 4 b\n1 4 c\n2 3 a\n")


def test_too_many_colors():
    # 65 colors on a 2-vertex graph is impossible anyway; the cap triggers first
    text = "".join(f"0 {i + 1} c{i}\n" for i in range(65))
    with pytest.raises(TooManyColors):
        parse_graph(text)


def test_colorset_roundtrip():
    assert colors_of(colorset([0, 3, 5])) == (0, 3, 5)


def test_components_under_k4(k4):
    ab = colorset([0, 1])
    assert components_under(k4, ab) == [(0, 1, 2, 3)]
    assert components_under(k4, 0) == [(v,) for v in range(4)]
    assert components_under(k4, k4.all_colors) == [tuple(range(4))]


def test_delete_color_k4(k4):
    comps = delete_color(k4, 0)
    assert len(comps) == 1
    sub = comps[0]
    assert sub.graph.r == 2 and sub.graph.n == 4
    assert list(sub.colors) == [1, 2]


def test_delete_color_cube_and_segment(cube_graph):
    for b in range(3):
        comps = delete_color(cube_graph, b)
        assert [c.graph.n for c in comps] == [4, 4]
    seg = parse_graph("1 2 a\n")
    comps = delete_color(seg, 0)
    assert [c.graph.n for c in comps] == [1, 1]
    assert all(c.graph.r == 0 for c in comps)


def test_one_factorizations_k4():
    sg = catalog.complete_graph(4)
    all_ = list(iter_one_factorizations(sg))
    # one factorization, 3! namings of its colors
    assert len(all_) == 6
    classes = {frozenset(frozenset((u, v) for u, v, c in g.edges() if c == k) for k in range(3))
               for g in all_}
    assert len(classes) == 1


def test_petersen_infeasible():
    with pytest.raises(Infeasible):
        find_one_factorization(catalog.petersen())


def test_six_cycle_alternates():
    g = find_one_factorization(catalog.cycle_graph(6))
    assert g.r == 2
    color = {(u, v): c for u, v, c in g.edges()}
    around = [color[tuple(sorted((i, (i + 1) % 6)))] for i in range(6)]
    assert around == [0, 1] * 3 or around == [1, 0] * 3


def test_factorization_regular_checks():
    with pytest.raises(NotRegular):
        find_one_factorization(catalog.path_graph(2))
    with pytest.raises(NotConnected):
        find_one_factorization(simple_graph(4, [(0, 1), (2, 3)]))


def test_parse_simple_graph_isolated_vertex():
    sg = parse_simple_graph("a b\nc\n")
    assert sg.n == 3 and sg.edges == ((0, 1),)


def test_dot_export(k4):
    dot = k4.to_dot()
    assert dot.startswith("graph G {")
    assert '"1" -- "2" [color="a", label="a"];' in dot


def named_edges(g):
    return {(frozenset((g.vertex_names[u], g.vertex_names[v])), g.color_names[c]) for u, v, c in g.edges()}


def test_text_roundtrip(k4, klein8):
    for g in (k4, klein8):
        h = parse_graph(g.to_text())
        assert named_edges(h) == named_edges(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(3, 12))
def test_random_graph_invariants(seed, r, half):
    g = random_colored_graph(random.Random(seed), 2 * half, r)
    # neighbour maps are fixed-point-free involutions
    for c in range(g.r):
        assert all(g.nbr[g.nbr[v][c]][c] == v and g.nbr[v][c] != v for v in range(g.n))
    # re-serialized output validates again
    assert parse_graph(g.to_text()).n == g.n
    # deleting a color covers every vertex exactly once
    for b in range(r):
        covered = sorted(v for comp in delete_color(g, b) for v in comp.vertices)
        assert covered == list(range(g.n))
    # monotonicity: C subset of D refines
    masks = range(1 << r)
    for C in masks:
        for D in masks:
            if C & ~D:
                continue
            rc, rd = g.rep_map(C), g.rep_map(D)
            assert all(rd[v] == rd[rc[v]] for v in range(g.n))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_found_factorization_is_proper(seed):
    rng = random.Random(seed)
    g = random_colored_graph(rng, 2 * rng.randint(2, 8), 3)
    sg = simple_graph(g.n, [(u, v) for u, v, _ in g.edges()])
    h = find_one_factorization(sg)
    assert sorted((u, v) for u, v, _ in h.edges()) == sorted(sg.edges)
