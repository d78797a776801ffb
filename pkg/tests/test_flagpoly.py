import pytest

from colorpoly import catalog
from colorpoly.autgroup import color_preserving_group
from colorpoly.colorful import polygon_size
from colorpoly.flagpoly import extended_group, flag_adjacency_polytope, flag_graph, layer_hypothesis
from colorpoly.poset import dual, poset_automorphisms, validate_polytope
from colorpoly.topology import classify_surface


def test_triangle_flag_graph_is_six_cycle():
    g = flag_graph(catalog.polygon(3)).graph
    assert (g.n, g.r) == (6, 2)
    assert polygon_size(g, 0, 1, 0) == 6


def test_cube_and_segment_flag_graphs():
    assert flag_graph(catalog.cube()).graph.n == 48
    seg = flag_graph(catalog.segment()).graph
    assert (seg.n, seg.r, seg.edges()) == (2, 1, [(0, 1, 0)])


def test_flag_adjacency_polytopes():
    assert flag_adjacency_polytope(catalog.polygon(3)).f_vector() == (6, 6, 1)
    tet = flag_adjacency_polytope(catalog.tetrahedron())
    assert tet.f_vector()[0] == 24
    assert classify_surface(tet).surface_name == "sphere"
    pyr = flag_adjacency_polytope(catalog.square_pyramid())
    assert pyr.f_vector()[0] == 32
    assert validate_polytope(pyr).ok


@pytest.mark.parametrize("name, expected", [("cube", True), ("triangle", True), ("digon", False),
                                            ("hosohedron", False), ("square-pyramid", True)])
def test_layer_hypothesis(name, expected):
    assert layer_hypothesis(catalog.POLYTOPES[name]()) is expected


@pytest.mark.parametrize("name, autos, duals, gbar", [
    ("cube", 48, 0, 48),
    ("triangle", 6, 6, 12),
    ("tetrahedron", 24, 24, 48),
    ("segment", 2, 2, 2),
])
def test_extended_group(name, autos, duals, gbar):
    group, rep = extended_group(catalog.POLYTOPES[name]())
    assert (rep.automorphisms, rep.dualities, rep.extended_order) == (autos, duals, gbar)
    assert rep.gamma_c_order == gbar and rep.same_elements
    assert group.order() == gbar


@pytest.mark.parametrize("name", ["triangle", "cube", "tetrahedron", "square-pyramid", "octahedron"])
def test_color_preserving_group_of_flag_graph_is_automorphism_group(name):
    p = catalog.POLYTOPES[name]()
    assert color_preserving_group(flag_graph(p).graph).order() == poset_automorphisms(p).order()


@pytest.mark.parametrize("name", ["cube", "tetrahedron", "square-pyramid"])
def test_nonadjacent_colors_give_squares(name):
    g = flag_graph(catalog.POLYTOPES[name]()).graph
    assert all(polygon_size(g, 0, 2, v) == 4 for v in range(g.n))


@pytest.mark.parametrize("name", ["cube", "square-pyramid", "triangle"])
def test_flag_graph_of_dual_reverses_colors(name):
    p = catalog.POLYTOPES[name]()
    fg, fd = flag_graph(p), flag_graph(dual(p))
    n = p.rank
    # the same chains, read in reverse rank order
    for k, f in enumerate(fg.flags):
        m = fd.index.index[tuple(reversed(f))]
        for i in range(n):
            assert fd.index.index[tuple(reversed(fg.flags[fg.graph.nbr[k][i]]))] == fd.graph.nbr[m][n - 1 - i]
