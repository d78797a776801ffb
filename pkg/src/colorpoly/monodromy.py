"""Monodromy groups of polytopes, their Cayley graphs, and the covering of the flag graph.

Mon(P) acts on flags on the right, ``Psi . s_i`` being the i-adjacent flag.
An element u is stored as the array ``a_u[Psi] = Psi . u^-1``; with that
choice ``a_{uv} = a_u o a_v`` and ``a_{s_i}`` is the adjacency involution,
so the Cayley-graph code (edges u -- s_i u) applies unchanged.  The base
flag is flag 0, the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .autgroup import color_respecting_group, colored_isomorphism
from .cayley import GenGroup, cayley_graph, extends_to_automorphism
from .colorful import DEFAULT_MAX_FACES, ColorFlag, build_poset, cflag_adjacent, chain_of, face, flag_set
from .ecgraph import EdgeColoredGraph
from .errors import HypothesisViolated, QuotientConflict
from .flagpoly import FlagGraph, flag_graph, layer_hypothesis
from .perm import PermGroup, compose, is_identity
from .poset import RankedPoset, poset_automorphisms

DEFAULT_MAX_ORDER = 10**5


class MonodromyGroup:
    def __init__(self, p: RankedPoset, max_order: int = DEFAULT_MAX_ORDER):
        self.poset = p
        self.flag_graph: FlagGraph = flag_graph(p)
        fi = self.flag_graph.index
        self.generators: list[tuple[int, ...]] = list(fi.adj)
        n = p.rank
        for i, s in enumerate(self.generators):
            if not is_identity(compose(s, s)) or any(s[k] == k for k in range(len(s))):
                raise AssertionError(f"s{i} is not a fixed-point-free involution")
            for j in range(i + 2, n):
                st = compose(s, self.generators[j])
                if not is_identity(compose(st, st)):
                    raise AssertionError(f"(s{i} s{j})^2 is not the identity")
        self.perm_group = PermGroup(len(fi), self.generators)
        if n > 0 and not self.perm_group.is_transitive():
            raise AssertionError("monodromy group is not transitive on flags")
        self.max_order = max_order

    @property
    def num_flags(self) -> int:
        return len(self.flag_graph.flags)

    def order(self) -> int:
        return self.perm_group.order()

    @cached_property
    def gen_group(self) -> GenGroup:
        return GenGroup(self.num_flags, self.generators, [f"s{i}" for i in range(self.poset.rank)],
                        max_vertices=self.max_order)

    def is_free(self) -> bool:
        """No non-identity element fixes the base flag."""
        return sum(1 for a in self.gen_group.elements if a[0] == 0) == 1


def monodromy_group(p: RankedPoset, max_order: int = DEFAULT_MAX_ORDER) -> MonodromyGroup:
    return MonodromyGroup(p, max_order)


def monodromy_cayley(mon: MonodromyGroup | RankedPoset) -> EdgeColoredGraph:
    if isinstance(mon, RankedPoset):
        mon = monodromy_group(mon)
    return cayley_graph(mon.gen_group)


def monodromy_polytope(mon: MonodromyGroup | RankedPoset, max_faces: int = DEFAULT_MAX_FACES) -> RankedPoset:
    return build_poset(monodromy_cayley(mon), max_faces)


@dataclass
class Quotient:
    graph: EdgeColoredGraph          # M_H, vertex k is coset k
    cosets: list[list[int]]          # M-vertices in each coset
    coset_of: list[int]              # M-vertex -> coset
    phi: tuple[int, ...]             # coset -> flag index
    is_isomorphism: bool


def quotient_by_stabilizer(mon: MonodromyGroup) -> Quotient:
    """M modulo the base-flag stabilizer, with the explicit map to the flag graph."""
    M = monodromy_cayley(mon)
    elems = mon.gen_group.elements
    by_flag: dict[int, list[int]] = {}
    for u, a in enumerate(elems):
        by_flag.setdefault(a[0], []).append(u)
    cosets = sorted(by_flag.values(), key=lambda c: c[0])
    coset_of = [0] * len(elems)
    for k, c in enumerate(cosets):
        for u in c:
            coset_of[u] = k
    nbr = []
    for k, c in enumerate(cosets):
        row = []
        for i in range(M.r):
            targets = {coset_of[M.nbr[u][i]] for u in c}
            if len(targets) != 1:
                raise QuotientConflict(f"coset {k} has color-{i} neighbours in {len(targets)} cosets")
            row.append(targets.pop())
        nbr.append(row)
    names = [M.vertex_names[c[0]] + "H" for c in cosets]
    MH = EdgeColoredGraph(nbr, names, M.color_names, r=M.r)
    phi = tuple(elems[c[0]][0] for c in cosets)
    F = mon.flag_graph.graph
    iso = sorted(phi) == list(range(F.n)) and all(
        F.nbr[phi[k]][i] == phi[nbr[k][i]] for k in range(len(cosets)) for i in range(M.r))
    if not iso:
        raise AssertionError("coset map is not a colored isomorphism onto the flag graph")
    return Quotient(MH, cosets, coset_of, phi, iso)


@dataclass
class CoveringReport:
    monodromy_order: int
    flags: int
    surjective: bool
    rank_preserving: bool
    incidence_preserving: bool
    flag_adjacency_preserving: bool
    injective: bool

    @property
    def is_covering(self) -> bool:
        return self.surjective and self.rank_preserving and self.incidence_preserving and \
            self.flag_adjacency_preserving

    @property
    def is_isomorphism(self) -> bool:
        return self.is_covering and self.injective


def covering_map(mon: MonodromyGroup | RankedPoset, check_flags: bool = True) -> tuple[dict, CoveringReport]:
    """The map (C, u) -> (C, uH) from the monodromy polytope onto the flag-adjacency polytope.

    Returns the face map ``(j, i) -> i'`` together with the verification report.
    """
    if isinstance(mon, RankedPoset):
        mon = monodromy_group(mon)
    M = monodromy_cayley(mon)
    F = mon.flag_graph.graph
    PM, PF = build_poset(M), build_poset(F)
    elems = mon.gen_group.elements
    nu = [a[0] for a in elems]      # M-vertex -> flag

    gamma: dict[tuple[int, int], int] = {}
    rank_ok = True
    for j in range(PM.rank + 1):
        for i in PM.faces(j):
            fc = PM.labels[j + 1][i]
            img = face(F, fc.colors, nu[fc.rep])
            # every vertex of the class must land in the same image class
            gamma[(j, i)] = PF.label_index(j, img)
            rank_ok &= img.rank == j
    gamma[(-1, 0)] = 0
    # every vertex of a class must land in the image class of its representative
    class_ok = True
    for mask in range(1 << M.r):
        rm, rf = M.rep_map(mask), F.rep_map(mask)
        class_ok &= all(rf[nu[u]] == rf[nu[rm[u]]] for u in range(M.n))
    surjective = all(set(gamma[(j, i)] for i in PM.faces(j)) == set(PF.faces(j))
                     for j in range(PM.rank + 1))
    incidence = class_ok and all(
        PF.leq((j - 1, gamma[(j - 1, x)]), (j, gamma[(j, i)]))
        for j in range(1, PM.rank + 1) for i in PM.faces(j) for x in PM.covers(j, i))

    adj_ok = True
    if check_flags:
        for f in flag_set(M):
            image = ColorFlag(nu[f.vertex], f.order)
            chain = chain_of(M, PM, f)
            if tuple(gamma.get((k - 1, x), x) for k, x in enumerate(chain)) != chain_of(F, PF, image):
                adj_ok = False
                break
            for j in range(M.r):
                g = cflag_adjacent(M, f, j)
                if ColorFlag(nu[g.vertex], g.order) != cflag_adjacent(F, image, j):
                    adj_ok = False
            if not adj_ok:
                break
    injective = len(elems) == F.n
    report = CoveringReport(len(elems), F.n, surjective, rank_ok, incidence, adj_ok, injective)
    return gamma, report


@dataclass
class RegularityReport:
    order_equals_flags: bool
    free_action: bool
    cayley_isomorphic_to_flag_graph: bool
    flag_transitive: bool

    @property
    def consistent(self) -> bool:
        return len({self.order_equals_flags, self.free_action,
                    self.cayley_isomorphic_to_flag_graph, self.flag_transitive}) == 1


def regularity_report(mon: MonodromyGroup) -> RegularityReport:
    """Four independently computed forms of regularity; they must all agree."""
    order_eq = mon.order() == mon.num_flags
    free = mon.is_free()
    M = monodromy_cayley(mon)
    F = mon.flag_graph.graph
    iso = colored_isomorphism(M, F) is not None
    transitive = poset_automorphisms(mon.poset).order() == mon.num_flags
    return RegularityReport(order_eq, free, iso, transitive)


@dataclass
class ReversalReport:
    exists: bool
    monodromy_order: int
    gamma_c_order: int
    expected_order: int

    @property
    def consistent(self) -> bool:
        return self.gamma_c_order == self.expected_order


def generator_reversal_automorphism(mon: MonodromyGroup | RankedPoset, cross_check: bool = True) -> ReversalReport:
    """Whether s_i -> s_{n-1-i} extends to an automorphism of Mon(P)."""
    if isinstance(mon, RankedPoset):
        mon = monodromy_group(mon)
    p = mon.poset
    if not layer_hypothesis(p):
        raise HypothesisViolated("some face layer graph is complete bipartite")
    gens = mon.generators
    exists = extends_to_automorphism(mon.num_flags, gens, gens[::-1], mon.order())
    order = mon.order()
    expected = order * (2 if exists and p.rank >= 2 else 1)
    gc = color_respecting_group(monodromy_cayley(mon)).order() if cross_check else expected
    report = ReversalReport(exists, order, gc, expected)
    if cross_check and not report.consistent:
        raise AssertionError(f"|Gamma_c(M)| = {gc}, expected {expected}")
    return report
