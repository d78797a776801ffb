"""The colorful polytope of a properly edge-colored regular graph.

A j-face is a pair (C, v) with C a j-set of colors; (C, v) and (C, w) are
the same face when v and w are joined by a path using colors from C.  Faces
are canonicalized to the smallest vertex of their class.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, NamedTuple

from .ecgraph import EdgeColoredGraph, Subgraph, colors_of, colorset, delete_color
from .errors import ScaleExceeded
from .poset import RankedPoset

DEFAULT_MAX_FACES = 10**6


class Face(NamedTuple):
    colors: int  # bitmask
    rep: int     # smallest vertex of the class

    @property
    def rank(self) -> int:
        return bin(self.colors).count("1")


class ColorFlag(NamedTuple):
    """A vertex and an ordering of all colors; C_j is the first j colors."""
    vertex: int
    order: tuple[int, ...]

    def color_sets(self) -> list[int]:
        out = [0]
        for c in self.order:
            out.append(out[-1] | 1 << c)
        return out


def face(g: EdgeColoredGraph, colors: int, v: int) -> Face:
    return Face(colors, g.rep_map(colors)[v])


def leq(f1: Face, f2: Face, g: EdgeColoredGraph) -> bool:
    if f1.colors & ~f2.colors:
        return False
    return g.rep_map(f2.colors)[f1.rep] == f2.rep


def color_subsets(r: int, j: int) -> Iterator[int]:
    """j-subsets of range(r) as masks, in lexicographic order of the sorted tuples."""
    for cs in combinations(range(r), j):
        yield colorset(cs)


def count_faces(g: EdgeColoredGraph, max_faces: int = DEFAULT_MAX_FACES) -> list[int]:
    counts = []
    total = 2  # rank -1 and the top face
    for j in range(g.r + 1):
        k = sum(len(set(g.rep_map(m))) for m in color_subsets(g.r, j))
        counts.append(k)
        total += k
        if total > max_faces:
            raise ScaleExceeded(f"colorful polytope has more than {max_faces} faces")
    return counts


def faces_by_rank(g: EdgeColoredGraph, max_faces: int = DEFAULT_MAX_FACES) -> list[list[Face]]:
    """Faces of rank 0..r ordered by (color tuple, representative)."""
    out: list[list[Face]] = []
    total = 1
    for j in range(g.r + 1):
        level = []
        for mask in color_subsets(g.r, j):
            level.extend(Face(mask, rep) for rep in sorted(set(g.rep_map(mask))))
        total += len(level)
        if total > max_faces:
            raise ScaleExceeded(f"colorful polytope has more than {max_faces} faces")
        out.append(level)
    return out


def build_poset(g: EdgeColoredGraph, max_faces: int = DEFAULT_MAX_FACES) -> RankedPoset:
    """Materialize the colorful polytope; ``labels`` hold the Face of each index."""
    levels = faces_by_rank(g, max_faces)
    index = [{f: i for i, f in enumerate(level)} for level in levels]
    covers: list[list[list[int]]] = [[[] for _ in level] for level in levels]
    for j in range(1, g.r + 1):
        up_index = index[j]
        for low_i, low in enumerate(levels[j - 1]):
            for c in range(g.r):
                if low.colors >> c & 1:
                    continue
                mask = low.colors | 1 << c
                hi = up_index[Face(mask, g.rep_map(mask)[low.rep])]
                covers[j][hi].append(low_i)
    labels = [[None]] + levels
    return RankedPoset.from_covers(g.r, covers, labels)


# -- flags ------------------------------------------------------------------------

def flag_set(g: EdgeColoredGraph) -> Iterator[ColorFlag]:
    for v in range(g.n):
        for order in permutations(range(g.r)):
            yield ColorFlag(v, order)


def cflag_adjacent(g: EdgeColoredGraph, f: ColorFlag, j: int) -> ColorFlag:
    """The j-adjacent flag: j = 0 moves along the edge of color order[0];
    j >= 1 swaps the j-th and (j+1)-th colors, changing only C_j."""
    if not 0 <= j < g.r:
        raise ValueError(f"adjacency rank {j} outside 0..{g.r - 1}")
    if j == 0:
        return ColorFlag(g.nbr[f.vertex][f.order[0]], f.order)
    order = list(f.order)
    order[j - 1], order[j] = order[j], order[j - 1]
    return ColorFlag(f.vertex, tuple(order))


def chain_of(g: EdgeColoredGraph, p: RankedPoset, f: ColorFlag) -> tuple[int, ...]:
    """The poset flag (face index per rank -1..r) of a colorful flag."""
    out = [0]
    for j, mask in enumerate(f.color_sets()):
        out.append(p.label_index(j, face(g, mask, f.vertex)))
    return tuple(out)


# -- facets, vertex figures, 2-faces ---------------------------------------------------

def facets(g: EdgeColoredGraph) -> list[tuple[int, Subgraph]]:
    """One facet per color b and component of g with color b deleted."""
    return [(b, comp) for b in range(g.r) for comp in delete_color(g, b)]


def vertex_figure_check(g: EdgeColoredGraph, v: int, p: RankedPoset | None = None) -> bool:
    """Whether the faces above vertex v form the Boolean lattice on the colors."""
    if p is None:
        p = build_poset(g)
    vi = p.label_index(0, Face(0, v))
    above = [(j, i) for j, i in p.above(0, vi)]
    sets = {}
    for j, i in above:
        fc = p.labels[j + 1][i]
        sets[(j, i)] = fc.colors
    if sorted(sets.values()) != list(range(1 << g.r)):
        return False
    for a in above:
        for b in above:
            if p.leq(a, b) != (sets[a] & ~sets[b] == 0):
                return False
    return True


def two_faces(g: EdgeColoredGraph) -> list[tuple[tuple[int, int], int, int]]:
    """Each 2-face as ((i, j), representative, polygon size)."""
    out = []
    for i, j in combinations(range(g.r), 2):
        reps = g.rep_map(1 << i | 1 << j)
        sizes: dict[int, int] = {}
        for rep in reps:
            sizes[rep] = sizes.get(rep, 0) + 1
        out.extend(((i, j), rep, sizes[rep]) for rep in sorted(sizes))
    return out


def polygon_size(g: EdgeColoredGraph, i: int, j: int, v: int) -> int:
    """Length of the bicolored (i, j) cycle through v."""
    length = 0
    x = v
    while True:
        x = g.nbr[x][i]
        x = g.nbr[x][j]
        length += 2
        if x == v:
            return length


def skeleton_edges(p: RankedPoset) -> set[frozenset[int]]:
    return {frozenset(p.covers(1, e)) for e in p.faces(1)}


def colors_label(g: EdgeColoredGraph, mask: int) -> str:
    return "{" + ",".join(g.color_names[c] for c in colors_of(mask)) + "}"
