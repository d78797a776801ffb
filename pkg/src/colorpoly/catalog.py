"""Small named polytopes and colored graphs used in examples and tests."""

from __future__ import annotations

from importlib import resources
from itertools import combinations
from typing import Iterator

from .colorful import polygon_size
from .ecgraph import (EdgeColoredGraph, SimpleGraph, iter_one_factorizations, parse_graph,
                      parse_simple_graph, simple_graph)
from .poset import RankedPoset, parse_polytope


def data_text(name: str) -> str:
    return resources.files("colorpoly").joinpath("data").joinpath(name).read_text()


def load_graph(name: str) -> EdgeColoredGraph:
    return parse_graph(data_text(name))


def load_simple_graph(name: str) -> SimpleGraph:
    return parse_simple_graph(data_text(name))


def load_polytope(name: str) -> RankedPoset:
    return parse_polytope(data_text(name))


# -- polytopes -----------------------------------------------------------------------

def polygon(p: int) -> RankedPoset:
    """The p-gon {p}; p = 2 gives the digon."""
    if p < 2:
        raise ValueError("a polygon needs at least 2 vertices")
    edges = [sorted({i, (i + 1) % p}) for i in range(p)]
    return RankedPoset.from_covers(2, [[[] for _ in range(p)], edges, [list(range(p))]])


def segment() -> RankedPoset:
    return RankedPoset.from_covers(1, [[[], []], [[0, 1]]])


def digon() -> RankedPoset:
    return polygon(2)


def tetrahedron() -> RankedPoset:
    return RankedPoset.from_vertex_sets(3, [list(combinations(range(4), 2)), list(combinations(range(4), 3))])


def cube() -> RankedPoset:
    verts = range(8)
    edges = [(u, u | 1 << b) for u in verts for b in range(3) if not u >> b & 1]
    faces = []
    for b in range(3):
        for side in (0, 1):
            faces.append([u for u in verts if (u >> b & 1) == side])
    return RankedPoset.from_vertex_sets(3, [edges, faces])


def octahedron() -> RankedPoset:
    # vertices 2a and 2a+1 are the two ends of axis a
    verts = range(6)
    edges = [(u, v) for u, v in combinations(verts, 2) if u // 2 != v // 2]
    faces = [[2 * 0 + a, 2 * 1 + b, 2 * 2 + c] for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    return RankedPoset.from_vertex_sets(3, [edges, faces])


def square_pyramid() -> RankedPoset:
    # base 0-1-2-3, apex 4
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)] + [(i, 4) for i in range(4)]
    faces = [[0, 1, 2, 3]] + [[i, (i + 1) % 4, 4] for i in range(4)]
    return RankedPoset.from_vertex_sets(3, [edges, faces])


def hosohedron(k: int = 3) -> RankedPoset:
    """Two vertices joined by k edges, with k digonal faces {2, k}."""
    edges = [[0, 1] for _ in range(k)]
    faces = [sorted({i, (i + 1) % k}) for i in range(k)]
    return RankedPoset.from_covers(3, [[[], []], edges, faces, [list(range(k))]])


POLYTOPES = {
    "segment": segment,
    "triangle": lambda: polygon(3),
    "square": lambda: polygon(4),
    "pentagon": lambda: polygon(5),
    "hexagon": lambda: polygon(6),
    "digon": digon,
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "square-pyramid": square_pyramid,
    "hosohedron": hosohedron,
}


# -- colored graphs ------------------------------------------------------------------

def k4() -> EdgeColoredGraph:
    return load_graph("k4.ecg")


def klein_bottle_graph() -> EdgeColoredGraph:
    return load_graph("klein8.ecg")


def cube_graph() -> EdgeColoredGraph:
    """Q3 with color b on the edges flipping coordinate b."""
    edges = [(u, u | 1 << b, b) for u in range(8) for b in range(3) if not u >> b & 1]
    return EdgeColoredGraph.from_edges(8, edges, 3, [format(u, "03b")[::-1] for u in range(8)],
                                       ["x", "y", "z"])


def cube_torus_graph() -> EdgeColoredGraph:
    """Q3 colored so that the y and z colors swap between the two x-layers."""
    edges = []
    for u in range(8):
        for b in range(3):
            if u >> b & 1:
                continue
            if b == 0:
                c = 0
            else:
                c = b if u & 1 == 0 else 3 - b
            edges.append((u, u | 1 << b, c))
    return EdgeColoredGraph.from_edges(8, edges, 3, [format(u, "03b")[::-1] for u in range(8)],
                                       ["0", "1", "2"])


def heawood() -> SimpleGraph:
    edges = set()
    for i in range(14):
        edges.add(tuple(sorted((i, (i + 1) % 14))))
        if i % 2 == 0:
            edges.add(tuple(sorted((i, (i + 5) % 14))))
    return simple_graph(14, sorted(edges))


def petersen() -> SimpleGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + \
        [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return simple_graph(10, edges)


def path_graph(k: int) -> SimpleGraph:
    """A path with k edges."""
    return simple_graph(k + 1, [(i, i + 1) for i in range(k)])


def cycle_graph(k: int) -> SimpleGraph:
    return simple_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> SimpleGraph:
    return simple_graph(k, list(combinations(range(k), 2)))


def colorings_with_polygon_size(sg: SimpleGraph, q: int) -> Iterator[EdgeColoredGraph]:
    """Proper colorings in which every bicolored cycle has length q."""
    for g in iter_one_factorizations(sg):
        if all(polygon_size(g, i, j, v) == q
               for i, j in combinations(range(g.r), 2) for v in range(g.n)):
            yield g


def heawood_type_14_3() -> EdgeColoredGraph:
    g = next(colorings_with_polygon_size(heawood(), 14), None)
    if g is None:
        raise LookupError("no coloring of the Heawood graph with 14-gonal 2-faces")
    return g


GRAPHS = {
    "k4": k4,
    "klein8": klein_bottle_graph,
    "cube": cube_graph,
    "cube-torus": cube_torus_graph,
}
