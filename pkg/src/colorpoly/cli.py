"""Command-line front end: one subcommand per construction."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import autgroup, cayley, colorful, flagpoly, monodromy, poset, topology
from .ecgraph import EdgeColoredGraph, parse_graph, parse_simple_graph
from .errors import ColorpolyError, NotAPolytope

Report = dict[str, Any]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_polytope_text(text: str) -> bool:
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            return body.split()[0] == "rank"
    return False


def _load_polytope(args: argparse.Namespace) -> poset.RankedPoset:
    """A polytope from a polytope file, or the colorful polytope of a colored-graph file."""
    text = _read(args.input)
    if _is_polytope_text(text):
        return poset.parse_polytope(text)
    return colorful.build_poset(parse_graph(text), args.max_faces)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _render(report: Report) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, bool):
            value = _yes(value)
        elif isinstance(value, (list, tuple)):
            value = " ".join(map(str, value))
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(args: argparse.Namespace, report: Report, text: str | None = None) -> None:
    if args.json:
        sys.stdout.write(json.dumps(report) + "\n")
    else:
        sys.stdout.write(text if text is not None else _render(report))


# -- subcommands ---------------------------------------------------------------

def cmd_validate(args: argparse.Namespace) -> int:
    text = _read(args.input)
    if args.polytope:
        p = poset.parse_polytope(text)
        rep = poset.validate_polytope(p)
        if args.emit:
            sys.stdout.write(p.to_text())
        else:
            _emit(args, {r.name: r.passed for r in rep.results}, rep.to_text())
        if not rep.ok:
            bad = next(r for r in rep.results if not r.passed)
            raise NotAPolytope(f"{bad.name} failed" + (f" ({bad.detail})" if bad.detail else ""))
        return 0
    g = parse_graph(text)
    _emit(args, {"valid": True, "vertices": g.n, "colors": g.r, "color-names": list(g.color_names)})
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    if args.f_vector:
        _emit(args, {"f-vector": list(colorful.count_faces(g, args.max_faces))})
    elif args.two_faces:
        rows = colorful.two_faces(g)
        report = {"two-faces": [{"colors": [g.color_names[i], g.color_names[j]],
                                 "rep": g.vertex_names[rep], "size": size}
                                for (i, j), rep, size in rows]}
        text = "".join(f"{colorful.colors_label(g, 1 << i | 1 << j)} {g.vertex_names[rep]} {size}\n"
                       for (i, j), rep, size in rows)
        _emit(args, report, text)
    else:
        p = colorful.build_poset(g, args.max_faces)
        _emit(args, {"polytope": p.to_text()}, p.to_text())
    return 0


def cmd_autgroup(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    grp = autgroup.color_respecting_group(g)
    k = autgroup.kappa(grp)
    report: Report = {
        "gamma-c": grp.order(),
        "gamma-p": autgroup.color_preserving_group(g).order(),
        "kappa-image": k.image.order(),
        "kappa-kernel": k.kernel_order,
        "kappa-surjective": k.surjective,
        "vertex-transitive": grp.is_vertex_transitive(),
        "flag-orbits": autgroup.flag_orbits(g, grp).count,
        "regular": autgroup.is_regular(g, grp),
    }
    if args.elements:
        elems = grp.elements(args.max_group_order)
        report["elements"] = [
            {"vertices": [g.vertex_names[x] for x in a.vertex_map],
             "colors": [g.color_names[c] for c in a.color_perm]} for a in elems]
        if not args.json:
            text = _render({k: v for k, v in report.items() if k != "elements"})
            text += "".join(" ".join(e["vertices"]) + " | " + " ".join(e["colors"]) + "\n"
                            for e in report["elements"])
            sys.stdout.write(text)
            return 0
    _emit(args, report)
    return 0


def cmd_facets(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    rows = []
    for b, sub in colorful.facets(g):
        f = colorful.count_faces(sub.graph, args.max_faces) if sub.graph.r > 0 else [1]
        rows.append({"deleted": g.color_names[b],
                     "vertices": [g.vertex_names[v] for v in sub.vertices],
                     "f-vector": list(f)})
    text = "".join(f"facet -{r['deleted']}: vertices {' '.join(r['vertices'])} "
                   f"f-vector {' '.join(map(str, r['f-vector']))}\n" for r in rows)
    _emit(args, {"facets": rows}, text)
    return 0


def cmd_flaggraph(args: argparse.Namespace) -> int:
    p = poset.parse_polytope(_read(args.input))
    fg = flagpoly.flag_graph(p)
    text = fg.graph.to_text()
    report: Report = {"flag-graph": text}
    if args.polytope:
        q = colorful.build_poset(fg.graph, args.max_faces)
        report["polytope"] = q.to_text()
        text += "\n" + q.to_text()
    _emit(args, report, text)
    return 0


def _gen_group(args: argparse.Namespace) -> cayley.GenGroup:
    kind, _, arg = args.group.partition(":")
    try:
        size = int(arg)
    except ValueError:
        raise SystemExit(_usage_error(f"bad --group value {args.group!r}"))
    if kind == "z2n":
        G = cayley.elementary_abelian(size)
    elif kind == "sp":
        if not args.edges:
            raise SystemExit(_usage_error("--group sp:<p> needs --edges"))
        sg = parse_simple_graph(_read(args.edges))
        if sg.n != size:
            raise SystemExit(_usage_error(f"edge file has {sg.n} vertices, expected {size}"))
        names = [f"{sg.names[i]}-{sg.names[j]}" for i, j in sg.edges]
        G = cayley.transposition_group(size, sg.edges, names)
    else:
        raise SystemExit(_usage_error(f"unknown group family {kind!r}"))
    G.max_vertices = args.max_group_order
    return G


def cmd_cayley(args: argparse.Namespace) -> int:
    G = _gen_group(args)
    g = cayley.cayley_graph(G)
    if args.semidirect:
        rep = cayley.check_semidirect(G)
        _emit(args, {"group-order": rep.group_order, "aut-gamma-t": rep.aut_order,
                     "gamma-c": rep.gamma_c_order, "order-matches": rep.order_matches,
                     "normal": rep.normal, "trivial-intersection": rep.trivial_intersection,
                     "conjugation-identity": rep.conjugation_identity})
    else:
        _emit(args, {"graph": g.to_text()}, g.to_text())
    return 0


def cmd_graphicahedron(args: argparse.Namespace) -> int:
    sg = parse_simple_graph(_read(args.input))
    gh = cayley.graphicahedron(sg, args.max_group_order)
    if args.emit:
        _emit(args, {"graph": gh.graph.to_text()}, gh.graph.to_text())
        return 0
    p = colorful.build_poset(gh.graph, args.max_faces)
    grp = autgroup.color_respecting_group(gh.graph)
    report: Report = {"vertices": gh.graph.n, "rank": p.rank, "f-vector": list(p.f_vector()),
                      "group-order": grp.order(),
                      "graph-automorphisms": len(cayley.simple_graph_automorphisms(sg))}
    if p.rank == 3:
        s = topology.classify_surface(p)
        report["surface"] = s.surface_name
        report["orientable"] = s.orientable
    _emit(args, report)
    return 0


def cmd_monodromy(args: argparse.Namespace) -> int:
    p = poset.parse_polytope(_read(args.input))
    mon = monodromy.monodromy_group(p, args.max_group_order)
    if args.emit_cayley:
        g = monodromy.monodromy_cayley(mon)
        with open(args.emit_cayley, "w", encoding="utf-8") as fh:
            fh.write(g.to_text())
    _, cover = monodromy.covering_map(mon)
    report: Report = {"monodromy-order": mon.order(), "flags": mon.num_flags,
                      "regular": mon.order() == mon.num_flags,
                      "covering": cover.is_covering, "isomorphism": cover.is_isomorphism}
    _emit(args, report)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    p = _load_polytope(args)
    rep = topology.classify_surface(p)
    typ = topology.schlafli_type(p)
    if isinstance(typ, topology.Irregular):
        type_text = "irregular " + typ.profile()
        type_json: Any = {"face_sizes": list(typ.face_sizes), "vertex_degrees": list(typ.vertex_degrees)}
    else:
        type_text = "{%d,%d}" % typ
        type_json = list(typ)
    if args.json:
        d = json.loads(rep.to_json())
        d["type"] = type_json
        sys.stdout.write(json.dumps(d) + "\n")
    else:
        sys.stdout.write(rep.to_text() + f"type: {type_text}\n")
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    sys.stdout.write(g.to_dot())
    return 0


# -- argument parsing -----------------------------------------------------------

def _usage_error(msg: str) -> int:
    sys.stderr.write(f"usage error: {msg}\n")
    return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a single JSON object")
    common.add_argument("--max-faces", type=int, default=colorful.DEFAULT_MAX_FACES)
    common.add_argument("--max-group-order", type=int, default=monodromy.DEFAULT_MAX_ORDER)
    common.add_argument("--threads", type=int, default=1, help="accepted; work runs sequentially")

    parser = argparse.ArgumentParser(prog="colorpoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_text: str, with_input: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if with_input:
            sp.add_argument("input", help="input file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate, "validate a colored graph or (--polytope) a polytope file")
    sp.add_argument("--polytope", action="store_true")
    sp.add_argument("--emit", action="store_true", help="re-emit the parsed polytope text")
    sp = add("build", cmd_build, "build the colorful polytope of a colored graph")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--f-vector", action="store_true")
    mode.add_argument("--two-faces", action="store_true")
    sp = add("autgroup", cmd_autgroup, "color-respecting automorphism group")
    sp.add_argument("--elements", action="store_true")
    add("facets", cmd_facets, "facets as colored subgraphs")
    sp = add("flaggraph", cmd_flaggraph, "flag graph of a polytope file")
    sp.add_argument("--polytope", action="store_true", help="also print the flag-adjacency polytope")
    sp = add("cayley", cmd_cayley, "Cayley graph of sp:<p> (with --edges) or z2n:<n>", with_input=False)
    sp.add_argument("--group", required=True)
    sp.add_argument("--edges")
    sp.add_argument("--semidirect", action="store_true", help="report the semidirect decomposition")
    sp = add("graphicahedron", cmd_graphicahedron, "graphicahedron of an uncolored graph")
    sp.add_argument("--emit", action="store_true", help="print the Cayley graph instead of a summary")
    sp = add("monodromy", cmd_monodromy, "monodromy group of a polytope file")
    sp.add_argument("--emit-cayley", metavar="FILE")
    add("classify", cmd_classify, "surface of a rank-3 polytope or colored graph")
    add("dot", cmd_dot, "DOT export of a colored graph")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ColorpolyError as e:
        sys.stdout.flush()
        sys.stderr.write(f"ERROR {e.code}: {e}\n")
        return 1
    except OSError as e:
        sys.stderr.write(f"ERROR IOError: {e.strerror}: {e.filename}\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
