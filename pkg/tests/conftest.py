import random
from itertools import permutations

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from colorpoly import catalog
from colorpoly.ecgraph import EdgeColoredGraph


def random_colored_graph(rng: random.Random, n: int, r: int) -> EdgeColoredGraph:
    """Union of r random perfect matchings on n points without repeated edges,
    cut down to the component of vertex 0."""
    assert n % 2 == 0 and n > r, "need more points than colors"
    while True:
        used = set()
        nbr = [[-1] * r for _ in range(n)]
        ok = True
        for c in range(r):
            for _ in range(50):
                pts = list(range(n))
                rng.shuffle(pts)
                pairs = [tuple(sorted(pts[i:i + 2])) for i in range(0, n, 2)]
                if not used.intersection(pairs):
                    break
            else:
                ok = False
                break
            used.update(pairs)
            for u, v in pairs:
                nbr[u][c] = v
                nbr[v][c] = u
        if ok:
            break
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbr[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    keep = sorted(seen)
    relabel = {v: i for i, v in enumerate(keep)}
    return EdgeColoredGraph([[relabel[y] for y in nbr[v]] for v in keep], r=r)


def to_networkx(g: EdgeColoredGraph, color_perm=None) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    for u, v, c in g.edges():
        G.add_edge(u, v, c=c if color_perm is None else color_perm[c])
    return G


def oracle_color_respecting(g: EdgeColoredGraph) -> set:
    """Gamma_c by networkx matching, one color permutation at a time."""
    out = set()
    G1 = to_networkx(g)
    for pi in permutations(range(g.r)):
        G2 = to_networkx(g, pi)
        gm = GraphMatcher(G1, G2, edge_match=lambda a, b: a["c"] == b["c"])
        for m in gm.isomorphisms_iter():
            vm = tuple(m[v] for v in range(g.n))
            # read off the induced color permutation from the edges themselves
            induced = [None] * g.r
            for u, v, c in g.edges():
                induced[c] = G1.edges[vm[u], vm[v]]["c"]
            out.add((vm, tuple(induced)))
    return out


@pytest.fixture
def k4():
    return catalog.k4()


@pytest.fixture
def cube_graph():
    return catalog.cube_graph()


@pytest.fixture
def cube_torus():
    return catalog.cube_torus_graph()


@pytest.fixture
def klein8():
    return catalog.klein_bottle_graph()
