"""Cayley graphs over involutory generating sets, and graphicahedra.

Groups are always concrete permutation groups; the product ``g h`` is
``compose(g, h)`` (apply h first), and the color-i edges join u and
``tau_i u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from math import factorial
from typing import Sequence

from .autgroup import ColorAutGroup, ColorRespectingAut, color_respecting_group
from .ecgraph import EdgeColoredGraph, SimpleGraph
from .errors import DoesNotGenerate, NotInvolution, ScaleExceeded
from .perm import PermGroup, compose, identity, inverse, is_identity, transposition

DEFAULT_MAX_VERTICES = 10**5


@dataclass
class GenGroup:
    """A permutation group with a distinguished list T of involutory generators.

    ``group_generators`` describe the ambient group; when omitted it is the
    group generated by T itself.
    """
    degree: int
    T: list[tuple[int, ...]]
    names: list[str] | None = None
    group_generators: list[tuple[int, ...]] | None = None
    max_vertices: int = DEFAULT_MAX_VERTICES

    def __post_init__(self) -> None:
        self.T = [tuple(t) for t in self.T]
        if self.names is None:
            self.names = [f"t{i}" for i in range(len(self.T))]
        if len(self.names) != len(self.T):
            raise ValueError("one name per generator required")
        for name, t in zip(self.names, self.T):
            if len(t) != self.degree or sorted(t) != list(range(self.degree)):
                raise ValueError(f"generator {name} is not a permutation of degree {self.degree}")
            if is_identity(t) or not is_identity(compose(t, t)):
                raise NotInvolution(f"generator {name} is not an involution other than the identity")
        if len(set(self.T)) != len(self.T):
            raise NotInvolution("generators are not mutually distinct")

    @property
    def n(self) -> int:
        return len(self.T)

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        """Elements of <T> in breadth-first order from the identity, generator-index tie-break."""
        e = identity(self.degree)
        order = [e]
        seen = {e}
        k = 0
        while k < len(order):
            u = order[k]
            for t in self.T:
                v = compose(t, u)
                if v not in seen:
                    seen.add(v)
                    order.append(v)
                    if len(order) > self.max_vertices:
                        raise ScaleExceeded(f"group has more than {self.max_vertices} elements")
            k += 1
        if self.group_generators is not None:
            full = PermGroup(self.degree, self.group_generators).order()
            if full != len(order):
                raise DoesNotGenerate(f"T generates a subgroup of order {len(order)} in a group of order {full}")
        return order

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {g: i for i, g in enumerate(self.elements)}

    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def words(self) -> list[str]:
        """A shortest word naming each element, e.g. ``t1.t0`` for tau_1 tau_0."""
        out = ["e"] * len(self.elements)
        done = [False] * len(self.elements)
        done[0] = True
        for k, u in enumerate(self.elements):
            for i, t in enumerate(self.T):
                j = self.index[compose(t, u)]
                if not done[j]:
                    done[j] = True
                    out[j] = self.names[i] if k == 0 else f"{self.names[i]}.{out[k]}"
        return out


def cayley_graph(G: GenGroup) -> EdgeColoredGraph:
    idx = G.index
    nbr = [[idx[compose(t, u)] for t in G.T] for u in G.elements]
    return EdgeColoredGraph(nbr, G.words, G.names, r=G.n)


def right_multiplication(G: GenGroup, g: tuple[int, ...]) -> tuple[int, ...]:
    """The vertex map u -> u g^-1."""
    gi = inverse(g)
    return tuple(G.index[compose(u, gi)] for u in G.elements)


def extends_to_automorphism(degree: int, sources: Sequence[Sequence[int]],
                            targets: Sequence[Sequence[int]], group_order: int) -> bool:
    """Whether sources[i] -> targets[i] extends to an automorphism.

    The pairs (s_i, t_i) acting on two disjoint copies of the points
    generate the graph of the would-be homomorphism; it is well defined iff
    that subgroup is no larger than the group generated by the sources.
    Bijectivity follows when the targets generate the same finite group.
    """
    pairs = [tuple(s) + tuple(degree + x for x in t) for s, t in zip(sources, targets)]
    return PermGroup(2 * degree, pairs).order() == group_order


@dataclass
class GroupAut:
    """An element of Aut(Gamma, T): the subscript permutation and the map on elements."""
    subscript_perm: tuple[int, ...]
    vertex_map: tuple[int, ...]


def aut_gamma_T(G: GenGroup, max_generators: int = 8) -> list[GroupAut]:
    """Group automorphisms permuting T, one candidate per permutation of the subscripts."""
    if G.n > max_generators:
        raise ScaleExceeded(f"{G.n}! subscript permutations exceed budget (n <= {max_generators})")
    order = G.order()
    out = []
    for pi in permutations(range(G.n)):
        if not extends_to_automorphism(G.degree, G.T, [G.T[pi[i]] for i in range(G.n)], order):
            continue
        # d(tau_i u) = tau_pi(i) d(u), filled in breadth-first order
        images = [None] * order
        images[0] = identity(G.degree)
        for k, u in enumerate(G.elements):
            du = images[k]
            for i, t in enumerate(G.T):
                j = G.index[compose(t, u)]
                if images[j] is None:
                    images[j] = compose(G.T[pi[i]], du)
        out.append(GroupAut(tuple(pi), tuple(G.index[x] for x in images)))
    return out


@dataclass
class SemidirectReport:
    group_order: int
    aut_order: int
    gamma_c_order: int
    order_matches: bool
    normal: bool
    trivial_intersection: bool
    conjugation_identity: bool
    conjugation_exhaustive: bool

    @property
    def ok(self) -> bool:
        return self.order_matches and self.normal and self.trivial_intersection and \
            self.conjugation_identity


def _in_right_mult(G: GenGroup, vm: Sequence[int]) -> bool:
    # g-hat sends the identity to g^-1
    g = inverse(G.elements[vm[0]])
    return tuple(vm) == right_multiplication(G, g)


def check_semidirect(G: GenGroup, gamma_c: ColorAutGroup | None = None,
                     spot_limit: int = 2000) -> SemidirectReport:
    """Compare Gamma_c of the Cayley graph with the right-multiplication group and Aut(Gamma, T)."""
    graph = cayley_graph(G)
    if gamma_c is None:
        gamma_c = color_respecting_group(graph)
    auts = aut_gamma_T(G)
    order_ok = gamma_c.order() == G.order() * len(auts)

    hat_gens = [right_multiplication(G, t) for t in G.T]
    normal = True
    for a in gamma_c.generators:
        ainv = inverse(a.vertex_map)
        for h in hat_gens:
            if not _in_right_mult(G, compose(a.vertex_map, compose(h, ainv))):
                normal = False
    trivial = all(d.subscript_perm == identity(G.n) for d in auts if _in_right_mult(G, d.vertex_map))

    # both sides of d g-hat d^-1 = (d g)-hat are homomorphic in g, so the
    # generators settle it; small groups are checked element by element as well
    exhaustive = G.order() * len(auts) <= spot_limit
    conj = True
    for d in auts:
        dinv = inverse(d.vertex_map)
        for k, g in enumerate(G.elements if exhaustive else G.T):
            k = k if exhaustive else G.index[g]
            lhs = compose(d.vertex_map, compose(right_multiplication(G, g), dinv))
            if lhs != right_multiplication(G, G.elements[d.vertex_map[k]]):
                conj = False
    return SemidirectReport(G.order(), len(auts), gamma_c.order(), order_ok, normal, trivial,
                            conj, exhaustive)


def as_color_respecting(d: GroupAut) -> ColorRespectingAut:
    return ColorRespectingAut(d.vertex_map, d.subscript_perm)


# -- concrete groups -------------------------------------------------------------

def symmetric_group_generators(p: int) -> list[tuple[int, ...]]:
    if p < 2:
        return []
    cycle = tuple(list(range(1, p)) + [0])
    return [transposition(p, 0, 1), cycle]


def transposition_group(p: int, edges: Sequence[tuple[int, int]], names: Sequence[str] | None = None) -> GenGroup:
    """S_p with the transpositions (i j) of the given edges as T."""
    T = [transposition(p, i, j) for i, j in edges]
    if names is None:
        names = [f"{i}-{j}" for i, j in edges]
    return GenGroup(p, T, list(names), symmetric_group_generators(p))


def elementary_abelian(n: int) -> GenGroup:
    """Z_2^n acting on 2n points, generator i swapping points 2i and 2i+1."""
    T = [transposition(2 * n, 2 * i, 2 * i + 1) for i in range(n)]
    return GenGroup(2 * n, T, [f"e{i}" for i in range(n)])


@dataclass
class Graphicahedron:
    source: SimpleGraph
    group: GenGroup
    graph: EdgeColoredGraph


def graphicahedron(sg: SimpleGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graphicahedron:
    """Cayley graph of S_p over the transpositions of the edges of sg."""
    if factorial(sg.n) > max_vertices:
        raise ScaleExceeded(f"{sg.n}! vertices exceed budget {max_vertices}")
    names = [f"{sg.names[i]}-{sg.names[j]}" for i, j in sg.edges]
    G = transposition_group(sg.n, sg.edges, names)
    G.max_vertices = max_vertices
    return Graphicahedron(sg, G, cayley_graph(G))


def simple_graph_automorphisms(sg: SimpleGraph) -> list[tuple[int, ...]]:
    """All automorphisms of an uncolored graph by backtracking over vertex images."""
    adj = sg.adjacency()
    n = sg.n
    out = []
    image = [-1] * n
    used = [False] * n

    def rec(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or len(adj[w]) != len(adj[v]):
                continue
            if all((x in adj[v]) == (image[x] in adj[w]) for x in range(v)):
                used[w] = True
                image[v] = w
                rec(v + 1)
                used[w] = False
                image[v] = -1

    rec(0)
    return out
