"""Color-respecting and color-preserving automorphisms of colored graphs.

A color-respecting automorphism is pinned down by where it sends one vertex
and how it permutes the colors: neighbours must follow
``gamma(nbr(u, c)) == nbr(gamma(u), pi(c))``.  So the whole group is the
stabilizer of vertex 0 (at most r! elements) times one transversal element
for every vertex in the orbit of 0, and none of it needs a general graph
isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

from .colorful import Face, build_poset, face, flag_set, polygon_size
from .ecgraph import EdgeColoredGraph
from .errors import ScaleExceeded
from .perm import PermGroup, compose, identity, inverse, is_identity
from .poset import RankedPoset

MAX_COLORS = 10
MAX_LISTED = 10**5


class ColorRespectingAut(NamedTuple):
    vertex_map: tuple[int, ...]
    color_perm: tuple[int, ...]

    def __matmul__(self, other: "ColorRespectingAut") -> "ColorRespectingAut":
        """``a @ b`` applies b first."""
        return ColorRespectingAut(compose(self.vertex_map, other.vertex_map),
                                  compose(self.color_perm, other.color_perm))

    def inverse(self) -> "ColorRespectingAut":
        return ColorRespectingAut(inverse(self.vertex_map), inverse(self.color_perm))

    def is_identity(self) -> bool:
        return is_identity(self.vertex_map) and is_identity(self.color_perm)


def extend(g: EdgeColoredGraph, h: EdgeColoredGraph, w: int, pi: Sequence[int],
           start: int = 0) -> tuple[int, ...] | None:
    """The colored-graph map g -> h sending ``start`` to w and color c to pi[c], if one exists."""
    if g.n != h.n or g.r != h.r:
        return None
    image = [-1] * g.n
    taken = [False] * h.n
    image[start] = w
    taken[w] = True
    stack = [start]
    gn, hn = g.nbr, h.nbr
    r = g.r
    while stack:
        u = stack.pop()
        gu, hu = gn[u], hn[image[u]]
        for c in range(r):
            x = gu[c]
            y = hu[pi[c]]
            if image[x] < 0:
                if taken[y]:
                    return None
                image[x] = y
                taken[y] = True
                stack.append(x)
            elif image[x] != y:
                return None
    return tuple(image)


def _profile(g: EdgeColoredGraph, v: int) -> dict[tuple[int, int], int]:
    return {(i, j): polygon_size(g, i, j, v) for i in range(g.r) for j in range(i + 1, g.r)}


def _profile_matches(pv: dict, pw: dict, pi: Sequence[int]) -> bool:
    for (i, j), size in pv.items():
        a, b = pi[i], pi[j]
        if pw[(min(a, b), max(a, b))] != size:
            return False
    return True


class ColorAutGroup:
    """Gamma_c(g) as vertex-0 stabilizer times an orbit transversal."""

    def __init__(self, g: EdgeColoredGraph, max_colors: int = MAX_COLORS):
        if g.r > max_colors:
            raise ScaleExceeded(f"{g.r} colors: r! extension candidates exceed budget (r <= {max_colors})")
        self.graph = g
        perms = list(permutations(range(g.r)))
        p0 = _profile(g, 0)
        profiles: dict[int, dict] = {}

        def candidates(w: int) -> Iterator[ColorRespectingAut]:
            pw = profiles.setdefault(w, _profile(g, w))
            for pi in perms:
                if not _profile_matches(p0, pw, pi):
                    continue
                vm = extend(g, g, w, pi)
                if vm is not None:
                    yield ColorRespectingAut(vm, pi)

        self.stabilizer: list[ColorRespectingAut] = sorted(candidates(0))
        # rigidity: the only stabilizer element inducing the identity on colors is the identity
        trivial = [a for a in self.stabilizer if is_identity(a.color_perm)]
        assert len(trivial) == 1 and trivial[0].is_identity(), "rigidity violated"

        # Schreier tree over the orbit of 0: point -> color permutation of the
        # transversal element; rigidity lets extend() rebuild the vertex map
        self._tree: dict[int, tuple[int, ...]] = {0: identity(g.r)}
        self.generators: list[ColorRespectingAut] = [a for a in self.stabilizer if not a.is_identity()]
        self._close_orbit()
        for w in range(g.n):
            if w in self._tree:
                continue
            found = next(candidates(w), None)
            if found is not None:
                self.generators.append(found)
                self._close_orbit()

    def _close_orbit(self) -> None:
        queue = list(self._tree)
        while queue:
            nxt = []
            for x in queue:
                cx = self._tree[x]
                for s in self.generators:
                    y = s.vertex_map[x]
                    if y not in self._tree:
                        self._tree[y] = compose(s.color_perm, cx)
                        nxt.append(y)
            queue = nxt

    def transversal(self, w: int) -> ColorRespectingAut:
        """The chosen element sending vertex 0 to w."""
        pi = self._tree[w]
        vm = extend(self.graph, self.graph, w, pi)
        assert vm is not None
        return ColorRespectingAut(vm, pi)

    @property
    def orbit(self) -> list[int]:
        return sorted(self._tree)

    def order(self) -> int:
        return len(self._tree) * len(self.stabilizer)

    def is_vertex_transitive(self) -> bool:
        return len(self._tree) == self.graph.n

    def iter_elements(self) -> Iterator[ColorRespectingAut]:
        for w in sorted(self._tree):
            t = self.transversal(w)
            for s in self.stabilizer:
                yield t @ s

    def elements(self, limit: int = MAX_LISTED) -> list[ColorRespectingAut]:
        if self.order() > limit:
            raise ScaleExceeded(f"|Gamma_c| = {self.order()} exceeds listing limit {limit}")
        return sorted(self.iter_elements())

    def contains(self, a: ColorRespectingAut) -> bool:
        if a.vertex_map[0] not in self._tree:
            return False
        return (self.transversal(a.vertex_map[0]).inverse() @ a) in set(self.stabilizer)

    def vertex_group(self) -> PermGroup:
        return PermGroup(self.graph.n, [a.vertex_map for a in self.generators])

    def color_image(self) -> set[tuple[int, ...]]:
        """The image of kappa, as the set of induced color permutations."""
        image = {a.color_perm for a in self.stabilizer}
        frontier = list(image)
        gens = [a.color_perm for a in self.generators]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = compose(s, x)
                    if y not in image:
                        image.add(y)
                        nxt.append(y)
            frontier = nxt
        return image


def color_respecting_group(g: EdgeColoredGraph, max_colors: int = MAX_COLORS) -> ColorAutGroup:
    return ColorAutGroup(g, max_colors)


def color_preserving_group(g: EdgeColoredGraph) -> PermGroup:
    """Gamma_p(g) by direct enumeration of identity-color extensions."""
    ident = identity(g.r)
    elems = []
    for w in range(g.n):
        vm = extend(g, g, w, ident)
        if vm is not None:
            elems.append(vm)
    return PermGroup(g.n, elements=elems)


@dataclass
class KappaReport:
    order: int
    image: PermGroup       # on the colors
    kernel_order: int
    surjective: bool


def kappa(group: ColorAutGroup) -> KappaReport:
    """The color-permutation homomorphism: image, kernel order, and the first-isomorphism check."""
    img = group.color_image()
    r = group.graph.r
    image = PermGroup(r, elements=img)
    order = group.order()
    if order % len(img):
        raise AssertionError("|image| does not divide |Gamma_c|")
    kernel = order // len(img)
    from math import factorial

    return KappaReport(order, image, kernel, len(img) == factorial(r))


def lift_face(aut: ColorRespectingAut, g: EdgeColoredGraph, f: Face) -> Face:
    mask = 0
    for c in range(g.r):
        if f.colors >> c & 1:
            mask |= 1 << aut.color_perm[c]
    return face(g, mask, aut.vertex_map[f.rep])


def lift_to_polytope(aut: ColorRespectingAut, g: EdgeColoredGraph,
                     p: RankedPoset | None = None) -> tuple[int, ...]:
    """The induced face permutation of the colorful polytope, on global face numbers."""
    if p is None:
        p = build_poset(g)
    out = []
    for j in range(-1, p.rank + 1):
        for i in p.faces(j):
            if j == -1:
                out.append(p.face_number(-1, i))
                continue
            img = lift_face(aut, g, p.labels[j + 1][i])
            out.append(p.face_number(j, p.label_index(j, img)))
    return tuple(out)


def lifted_group(group: ColorAutGroup, p: RankedPoset | None = None,
                 limit: int = MAX_LISTED) -> PermGroup:
    """Gamma_c lifted to the colorful polytope, as explicit face permutations."""
    if p is None:
        p = build_poset(group.graph)
    elems = [lift_to_polytope(a, group.graph, p) for a in group.elements(limit)]
    return PermGroup(p.num_faces(), elements=elems)


@dataclass
class FlagOrbits:
    count: int
    representatives: list   # least ColorFlag of each orbit


def flag_orbits(g: EdgeColoredGraph, group: ColorAutGroup | None = None) -> FlagOrbits:
    """Orbits of Gamma_c on the colorful flags (vertex, color order)."""
    if group is None:
        group = color_respecting_group(g)
    flags = list(flag_set(g))
    index = {f: k for k, f in enumerate(flags)}
    parent = list(range(len(flags)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in group.generators:
        for k, (v, order) in enumerate(flags):
            img = index[(a.vertex_map[v], tuple(a.color_perm[c] for c in order))]
            ra, rb = find(k), find(img)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(k) for k in range(len(flags))})
    return FlagOrbits(len(roots), [flags[k] for k in roots])


def is_regular(g: EdgeColoredGraph, group: ColorAutGroup | None = None) -> bool:
    """Flag-transitivity, cross-checked against the vertex-transitive plus full-stabilizer criterion."""
    from math import factorial

    if group is None:
        group = color_respecting_group(g)
    by_orbits = flag_orbits(g, group).count == 1
    by_stabilizer = group.is_vertex_transitive() and len(group.stabilizer) == factorial(g.r)
    if by_orbits != by_stabilizer:
        raise AssertionError("regularity criteria disagree")
    return by_orbits


def colored_isomorphism(g: EdgeColoredGraph, h: EdgeColoredGraph,
                        color_map: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """A color-preserving (or ``color_map``-respecting) isomorphism g -> h, if any."""
    if g.n != h.n or g.r != h.r:
        return None
    pi = tuple(color_map) if color_map is not None else identity(g.r)
    for w in range(h.n):
        vm = extend(g, h, w, pi)
        if vm is not None:
            return vm
    return None
