"""Acceptance criteria, one test each, with their time bounds.

Each test prints a single ``criterion N: PASS|FAIL`` line to the terminal.
"""

import random
import time
from math import factorial

import pytest

from colorpoly import catalog
from colorpoly.autgroup import (color_respecting_group, colored_isomorphism, flag_orbits, is_regular,
                                lifted_group)
from colorpoly.cayley import (cayley_graph, check_semidirect, elementary_abelian, graphicahedron,
                              simple_graph_automorphisms, transposition_group)
from colorpoly.colorful import build_poset, two_faces
from colorpoly.flagpoly import extended_group, flag_graph, layer_hypothesis
from colorpoly.monodromy import (covering_map, monodromy_cayley, monodromy_group,
                                 quotient_by_stabilizer, regularity_report)
from colorpoly.poset import FlagIndex, poset_automorphisms, validate_polytope
from colorpoly.topology import classify_surface, schlafli_type

from conftest import random_colored_graph


@pytest.fixture
def criterion(capsys):
    """Run a check under a time bound and print one verdict line."""

    def run(number, bound, check):
        start = time.perf_counter()
        error = None
        try:
            detail = check()
        except AssertionError as e:
            error, detail = e, f"assertion failed: {e}"
        elapsed = time.perf_counter() - start
        ok = error is None and elapsed < bound
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} "
                  f"({elapsed:.2f}s, bound {bound}s) {detail or ''}")
        if error is not None:
            raise error
        assert elapsed < bound, f"took {elapsed:.2f}s, bound {bound}s"

    return run


def test_criterion_1_hemicube(criterion):
    def check():
        g = catalog.k4()
        p = build_poset(g)
        assert p.f_vector()[:3] == (4, 6, 3)
        s = classify_surface(p)
        assert (s.euler, s.orientable, s.surface_name) == (1, False, "projective-plane")
        G = color_respecting_group(g)
        assert G.order() == 24
        assert flag_orbits(g, G).count == 1
        return "f=(4,6,3) chi=1 projective plane |Gc|=24, 1 flag orbit"

    criterion(1, 1.0, check)


def test_criterion_2_klein_bottle(criterion):
    def check():
        p = build_poset(catalog.klein_bottle_graph())
        s = classify_surface(p)
        assert s.f_vector == (8, 12, 4)
        assert s.face_sizes == (4, 4, 8, 8)
        assert (s.euler, s.orientable, s.surface_name) == (0, False, "klein-bottle")
        return "f=(8,12,4) faces {4,4,8,8} chi=0 non-orientable"

    criterion(2, 1.0, check)


def test_criterion_3_cube_colorings(criterion):
    def check():
        std = catalog.cube_graph()
        s = classify_surface(build_poset(std))
        G = color_respecting_group(std)
        assert s.surface_name == "sphere"
        assert (G.order(), flag_orbits(std, G).count, is_regular(std, G)) == (48, 1, True)
        tor = catalog.cube_torus_graph()
        s = classify_surface(build_poset(tor))
        assert (s.surface_name, s.face_sizes) == ("torus", (4, 4, 8, 8))
        assert flag_orbits(tor).count == 3
        return "standard: sphere, regular, |Gc|=48; alternate: torus {4,4,8,8}, 3 flag orbits"

    criterion(3, 1.0, check)


def theorem_suite():
    heawood = catalog.heawood_type_14_3()
    return {
        "k4": catalog.k4(),
        "klein8": catalog.klein_bottle_graph(),
        "cube": catalog.cube_graph(),
        "cube-torus": catalog.cube_torus_graph(),
        "heawood-14": heawood,
        "hexagon": graphicahedron(catalog.path_graph(2)).graph,
        "k33": graphicahedron(catalog.cycle_graph(3)).graph,
        "hypercube-4": cayley_graph(elementary_abelian(4)),
        "flags-of-cube": flag_graph(catalog.cube()).graph,
        "flags-of-pyramid": flag_graph(catalog.square_pyramid()).graph,
        "random-r3": random_colored_graph(random.Random(7), 20, 3),
    }


def test_criterion_4_lift_equals_poset_automorphisms(criterion):
    def check():
        suite = theorem_suite()
        assert len(suite) >= 8
        for name, g in suite.items():
            p = build_poset(g)
            assert p.num_faces() <= 2000, name
            lifted = lifted_group(color_respecting_group(g), p)
            brute = poset_automorphisms(p)
            assert lifted.order() == brute.order(), name
            assert set(lifted.elements()) == set(brute.elements()), name
        return f"{len(suite)} graphs, lifted Gc == poset automorphisms element-wise"

    criterion(4, 60.0, check)


def test_criterion_5_semidirect(criterion):
    def check():
        groups = {
            "S3-path": transposition_group(3, [(0, 1), (1, 2)]),
            "S3-all": transposition_group(3, [(0, 1), (1, 2), (0, 2)]),
            "Z2^3": elementary_abelian(3),
            # no tree on 5 vertices is asymmetric; this one has the fewest symmetries (order 2)
            "S5-spider": transposition_group(5, [(0, 1), (1, 2), (1, 3), (3, 4)]),
        }
        out = []
        for name, G in groups.items():
            rep = check_semidirect(G)
            assert rep.gamma_c_order == rep.group_order * rep.aut_order, name
            assert rep.normal and rep.trivial_intersection and rep.conjugation_identity, name
            out.append(f"{name} {rep.gamma_c_order}={rep.group_order}*{rep.aut_order}")
        return "; ".join(out)

    criterion(5, 30.0, check)


def test_criterion_6_graphicahedra(criterion):
    def check():
        path2 = catalog.path_graph(2)
        gh = graphicahedron(path2)
        p = build_poset(gh.graph)
        assert p.f_vector()[:2] == (6, 6)
        order = color_respecting_group(gh.graph).order()
        assert order == 12 == factorial(3) * len(simple_graph_automorphisms(path2))
        c3 = catalog.cycle_graph(3)
        gh = graphicahedron(c3)
        p = build_poset(gh.graph)
        s = classify_surface(p)
        assert s.f_vector == (6, 9, 3) and s.surface_name == "torus" and s.orientable
        order = color_respecting_group(gh.graph).order()
        assert order == factorial(3) * len(simple_graph_automorphisms(c3)) == 36
        return "path-2: hexagon, order 12; C3: (6,9,3) torus, order 36"

    criterion(6, 10.0, check)


def test_criterion_7_monodromy(criterion):
    def check():
        regular = {f"{{{k}}}": catalog.polygon(k) for k in range(3, 7)}
        regular["tetrahedron"] = catalog.tetrahedron()
        regular["cube"] = catalog.cube()
        for name, p in regular.items():
            mon = monodromy_group(p)
            assert mon.order() == mon.num_flags, name
            assert colored_isomorphism(monodromy_cayley(mon), mon.flag_graph.graph) is not None, name
        mon = monodromy_group(catalog.square_pyramid())
        assert mon.num_flags == 32 and mon.order() > 32
        q = quotient_by_stabilizer(mon)
        assert q.is_isomorphism and q.graph.n == 32
        _, cover = covering_map(mon)
        assert cover.is_covering and not cover.injective
        assert regularity_report(mon).consistent
        return f"regular cases |Mon|=|flags|; pyramid |Mon|={mon.order()} > 32, proper covering"

    criterion(7, 60.0, check)


def test_criterion_8_flag_adjacency_theorem(criterion):
    def check():
        out = []
        for name, expected in [("cube", 48), ("tetrahedron", 48)]:
            p = catalog.POLYTOPES[name]()
            assert layer_hypothesis(p)
            _, rep = extended_group(p)
            assert rep.gamma_c_order == rep.extended_order == expected, name
            assert rep.same_elements
            out.append(f"{name} {rep.extended_order}={rep.automorphisms}+{rep.dualities} dualities")
        return "; ".join(out)

    criterion(8, 30.0, check)


def test_criterion_9_property_suite(criterion):
    def check():
        graphs = list(theorem_suite().values())
        rng = random.Random(2024)
        trials = 0
        for _ in range(120):
            r = rng.randint(1, 4)
            n = 2 * rng.randint(max(2, (r + 2) // 2), 24)
            g = random_colored_graph(rng, n, r)
            graphs.append(g)
            trials += 1
            # C subset of D: the classes of C refine those of D
            for C in range(1 << g.r):
                for D in range(1 << g.r):
                    if C & ~D == 0:
                        rc, rd = g.rep_map(C), g.rep_map(D)
                        assert all(rd[v] == rd[rc[v]] for v in range(g.n))
        for g in graphs:
            p = build_poset(g)
            rep = validate_polytope(p)
            assert rep.get("diamond").passed and rep.get("strong-flag-connected").passed
            assert all(size % 2 == 0 for _, _, size in two_faces(g))
            assert len(FlagIndex(p)) == g.n * factorial(g.r)
        return f"{len(graphs)} polytopes validated, {trials} random monotonicity trials"

    criterion(9, 120.0, check)


def test_criterion_10_heawood(criterion):
    def check():
        g = catalog.heawood_type_14_3()
        p = build_poset(g)
        assert schlafli_type(p) == (14, 3)
        s = classify_surface(p)
        assert s.f_vector == (14, 21, 3) and s.euler == -4
        return f"type {{14,3}}, chi=-4, found coloring is {'orientable' if s.orientable else 'non-orientable'}"

    criterion(10, 60.0, check)
