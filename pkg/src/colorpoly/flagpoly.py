"""Flag graphs of polytopes and the extended group of automorphisms and dualities."""

from __future__ import annotations

from dataclasses import dataclass

from .autgroup import color_preserving_group, color_respecting_group
from .colorful import DEFAULT_MAX_FACES, build_poset
from .ecgraph import EdgeColoredGraph
from .perm import PermGroup, compose, identity
from .poset import (MAX_ORACLE_FACES, FlagIndex, RankedPoset, _isomorphisms, dual,
                    face_layer_graph)

DEFAULT_MAX_FLAGS = 10**5


@dataclass
class FlagGraph:
    graph: EdgeColoredGraph
    flags: list[tuple[int, ...]]   # vertex k is flags[k]
    index: FlagIndex


def flag_graph(p: RankedPoset, max_flags: int = DEFAULT_MAX_FLAGS) -> FlagGraph:
    """Colored graph on the flags of p, color i joining i-adjacent flags."""
    fi = FlagIndex(p, max_flags)
    nbr = [[fi.adj[i][k] for i in range(p.rank)] for k in range(len(fi))]
    names = [".".join(map(str, f)) for f in fi.flags]
    g = EdgeColoredGraph(nbr, names, [str(i) for i in range(p.rank)], r=p.rank)
    return FlagGraph(g, fi.flags, fi)


def flag_adjacency_polytope(p: RankedPoset, max_faces: int = DEFAULT_MAX_FACES) -> RankedPoset:
    return build_poset(flag_graph(p).graph, max_faces)


def layer_hypothesis(p: RankedPoset) -> bool:
    """True when no face layer graph between consecutive ranks 0..n-1 is complete bipartite."""
    return not any(face_layer_graph(p, i).is_complete_bipartite() for i in range(p.rank - 1))


def _flag_perm_of_automorphism(fi: FlagIndex, m: dict) -> tuple[int, ...]:
    # m sends (j, i) to an index at the same rank
    return tuple(fi.index[tuple(m[(k - 1, x)] for k, x in enumerate(f))] for f in fi.flags)


def _flag_perm_of_duality(fi: FlagIndex, d: dict, n: int) -> tuple[int, ...]:
    # the image flag's rank-j face is d applied to the rank n-1-j face
    out = []
    for f in fi.flags:
        img = tuple(d[(n - 1 - j, f[n - j])][1] for j in range(-1, n + 1))
        out.append(fi.index[img])
    return tuple(out)


@dataclass
class ExtendedGroupReport:
    automorphisms: int          # |Gamma(P)|
    dualities: int
    extended_order: int         # |Gamma-bar(P)| acting on flags
    gamma_c_order: int          # |Gamma_c(flag graph)|
    gamma_p_order: int          # |Gamma_p(flag graph)|
    same_elements: bool
    hypothesis: bool

    @property
    def self_dual(self) -> bool:
        return self.dualities > 0


def extended_group(p: RankedPoset, limit: int = MAX_ORACLE_FACES) -> tuple[PermGroup, ExtendedGroupReport]:
    """Automorphisms and dualities of p acting on flags, compared with Gamma_c of the flag graph."""
    fg = flag_graph(p)
    fi = fg.index
    n = p.rank
    autos = {_flag_perm_of_automorphism(fi, m) for m in _isomorphisms(p, p, limit)}
    n_auto = sum(1 for _ in _isomorphisms(p, p, limit))
    duals_raw = []
    for m in _isomorphisms(p, dual(p), limit):
        duals_raw.append({f: (n - 1 - f[0], img) for f, img in m.items()})
    duals = {_flag_perm_of_duality(fi, d, n) for d in duals_raw}
    elements = autos | duals
    gbar = PermGroup(len(fi), elements=sorted(elements))

    gc = color_respecting_group(fg.graph)
    gc_elems = {a.vertex_map for a in gc.iter_elements()}
    gp = color_preserving_group(fg.graph)
    hyp = layer_hypothesis(p)
    report = ExtendedGroupReport(n_auto, len(duals_raw), len(elements), gc.order(), gp.order(),
                                 gc_elems == elements, hyp)
    if hyp and not report.same_elements:
        raise AssertionError("flag graph group differs from the extended group under the layer hypothesis")
    return gbar, report


def is_closed(elements: set[tuple[int, ...]]) -> bool:
    """Whether a finite set of permutations is closed under composition."""
    if not elements:
        return False
    e = next(iter(elements))
    if identity(len(e)) not in elements:
        return False
    return all(compose(a, b) in elements for a in elements for b in elements)
