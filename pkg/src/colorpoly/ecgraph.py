"""Properly edge-colored regular graphs.

Vertices and colors are dense integers; external names live in side tables.
A color set is an ``int`` bitmask over ``range(r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    Infeasible,
    LoopEdge,
    MalformedLine,
    NotConnected,
    NotProperlyColored,
    NotRegular,
    TooManyColors,
)

MAX_COLORS = 64


def colorset(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


def colors_of(mask: int) -> tuple[int, ...]:
    out = []
    c = 0
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


class EdgeColoredGraph:
    """A connected r-regular graph with a proper r-edge-coloring.

    ``nbr[v][c]`` is the unique neighbour of ``v`` along the edge of color
    ``c``.  Instances are validated on construction and treated as immutable.
    """

    def __init__(self, nbr: Sequence[Sequence[int]], vertex_names: Sequence[str] | None = None,
                 color_names: Sequence[str] | None = None, *, r: int | None = None):
        self.nbr: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in nbr)
        self.n = len(self.nbr)
        if r is None:
            r = len(self.nbr[0]) if self.n else 0
        self.r = r
        self.vertex_names = tuple(vertex_names) if vertex_names is not None else tuple(
            str(v) for v in range(self.n))
        self.color_names = tuple(color_names) if color_names is not None else tuple(
            str(c) for c in range(self.r))
        self._reps: dict[int, tuple[int, ...]] = {}
        self._check()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]], r: int,
                   vertex_names: Sequence[str] | None = None,
                   color_names: Sequence[str] | None = None) -> "EdgeColoredGraph":
        """Build from ``(u, v, color)`` triples, raising the parse-level errors."""
        vname = (lambda v: vertex_names[v]) if vertex_names else str
        cname = (lambda c: color_names[c]) if color_names else str
        if r > MAX_COLORS:
            raise TooManyColors(f"{r} colors, at most {MAX_COLORS} supported")
        seen: set[tuple[int, int]] = set()
        incident: list[list[int]] = [[] for _ in range(n)]
        ends: list[list[int]] = [[] for _ in range(n)]
        for u, v, c in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {vname(u)}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"edge {vname(key[0])} {vname(key[1])} appears twice")
            seen.add(key)
            incident[u].append(c)
            incident[v].append(c)
            ends[u].append(v)
            ends[v].append(u)
        for v in range(n):
            if len(incident[v]) != r:
                raise NotRegular(f"vertex {vname(v)} has degree {len(incident[v])}, expected {r}")
        for v in range(n):
            if len(set(incident[v])) != r:
                names = ",".join(cname(c) for c in sorted(incident[v]))
                raise NotProperlyColored(f"vertex {vname(v)} has colors {{{names}}}")
        nbr = [[-1] * r for _ in range(n)]
        for v in range(n):
            for c, w in zip(incident[v], ends[v]):
                nbr[v][c] = w
        return cls(nbr, vertex_names, color_names, r=r)

    def _check(self) -> None:
        for v, row in enumerate(self.nbr):
            if len(row) != self.r:
                raise NotRegular(f"vertex {self.vertex_names[v]} has degree {len(row)}, expected {self.r}")
            for c, w in enumerate(row):
                if not 0 <= w < self.n or self.nbr[w][c] != v:
                    raise NotProperlyColored(
                        f"color {self.color_names[c]} at vertex {self.vertex_names[v]} is not a matching edge")
                if w == v:
                    raise LoopEdge(f"loop at vertex {self.vertex_names[v]}")
            if len(set(row)) != len(row):
                raise DuplicateEdge(f"multiple edges at vertex {self.vertex_names[v]}")
        if self.n == 0:
            raise NotConnected("empty graph")
        if len(set(self.rep_map(self.all_colors))) != 1:
            raise NotConnected("graph is not connected")

    @property
    def all_colors(self) -> int:
        return (1 << self.r) - 1

    def neighbor(self, v: int, c: int) -> int:
        return self.nbr[v][c]

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges ``(u, v, color)`` with ``u < v``, sorted."""
        return sorted((v, w, c) for v in range(self.n) for c, w in enumerate(self.nbr[v]) if v < w)

    def rep_map(self, mask: int) -> tuple[int, ...]:
        """``rep_map(C)[v]`` is the minimum vertex of v's class under ~C."""
        reps = self._reps.get(mask)
        if reps is not None:
            return reps
        cols = colors_of(mask)
        label = [-1] * self.n
        for v in range(self.n):
            if label[v] >= 0:
                continue
            label[v] = v
            stack = [v]
            while stack:
                x = stack.pop()
                row = self.nbr[x]
                for c in cols:
                    y = row[c]
                    if label[y] < 0:
                        label[y] = v
                        stack.append(y)
        reps = tuple(label)
        self._reps[mask] = reps
        return reps

    def to_text(self) -> str:
        return "".join(f"{self.vertex_names[u]} {self.vertex_names[v]} {self.color_names[c]}\n"
                       for u, v, c in self.edges())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f'  "{self.vertex_names[v]}";')
        for u, v, c in self.edges():
            cn = self.color_names[c]
            lines.append(f'  "{self.vertex_names[u]}" -- "{self.vertex_names[v]}" '
                         f'[color="{cn}", label="{cn}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, r={self.r})"


def parse_graph(text: str) -> EdgeColoredGraph:
    """Parse the colored-edge-list format: ``<u> <v> <color>`` per line."""
    vindex: dict[str, int] = {}
    cindex: dict[str, int] = {}
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = _strip_comment(line)
        if not body:
            continue
        toks = body.split()
        if len(toks) != 3:
            raise MalformedLine(f"line {lineno}: expected '<u> <v> <color>', got {body!r}")
        u, v, c = toks
        for name in (u, v):
            vindex.setdefault(name, len(vindex))
        if c not in cindex:
            cindex[c] = len(cindex)
            if len(cindex) > MAX_COLORS:
                raise TooManyColors(f"more than {MAX_COLORS} colors")
        raw.append((vindex[u], vindex[v], cindex[c]))
    if not vindex:
        raise MalformedLine("no edges")
    return EdgeColoredGraph.from_edges(len(vindex), raw, len(cindex), list(vindex), list(cindex))


def components_under(g: EdgeColoredGraph, mask: int) -> list[tuple[int, ...]]:
    """The ~C classes, each sorted (so its first entry is the representative), ordered by representative."""
    reps = g.rep_map(mask)
    classes: dict[int, list[int]] = {}
    for v, rep in enumerate(reps):
        classes.setdefault(rep, []).append(v)
    return [tuple(classes[rep]) for rep in sorted(classes)]


@dataclass(frozen=True)
class Subgraph:
    """A component produced by color deletion, with maps back to the parent."""
    graph: EdgeColoredGraph
    vertices: tuple[int, ...]   # new vertex id -> parent vertex id
    colors: tuple[int, ...]     # new color id -> parent color id


def induced(g: EdgeColoredGraph, vertices: Sequence[int], colors: Sequence[int]) -> Subgraph:
    """Restriction of g to a ~colors class ``vertices`` (must be closed under those colors)."""
    vertices = tuple(sorted(vertices))
    colors = tuple(sorted(colors))
    local = {v: i for i, v in enumerate(vertices)}
    nbr = [[local[g.nbr[v][c]] for c in colors] for v in vertices]
    sub = EdgeColoredGraph(nbr, [g.vertex_names[v] for v in vertices],
                           [g.color_names[c] for c in colors], r=len(colors))
    return Subgraph(sub, vertices, colors)


def delete_color(g: EdgeColoredGraph, b: int) -> list[Subgraph]:
    """Connected components of g with color b removed."""
    if not 0 <= b < g.r:
        raise ValueError(f"color {b} out of range")
    rest = g.all_colors & ~(1 << b)
    keep = [c for c in range(g.r) if c != b]
    return [induced(g, cls, keep) for cls in components_under(g, rest)]


# -- uncolored graphs and 1-factorization ------------------------------------

@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]  # (u, v) with u < v, sorted
    names: tuple[str, ...]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n


def simple_graph(n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> SimpleGraph:
    names = tuple(names) if names is not None else tuple(str(v) for v in range(n))
    seen = set()
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop at vertex {names[u]}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {names[key[0]]} {names[key[1]]} appears twice")
        seen.add(key)
    return SimpleGraph(n, tuple(sorted(seen)), names)


def parse_simple_graph(text: str) -> SimpleGraph:
    """Uncolored edge list, ``<u> <v>`` per line; a single token declares an isolated vertex."""
    index: dict[str, int] = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = _strip_comment(line)
        if not body:
            continue
        toks = body.split()
        if len(toks) not in (1, 2):
            raise MalformedLine(f"line {lineno}: expected '<u> <v>', got {body!r}")
        for t in toks:
            index.setdefault(t, len(index))
        if len(toks) == 2:
            edges.append((index[toks[0]], index[toks[1]]))
    if not index:
        raise MalformedLine("empty graph")
    return simple_graph(len(index), edges, list(index))


def iter_one_factorizations(sg: SimpleGraph) -> Iterator[EdgeColoredGraph]:
    """All proper r-edge-colorings of a connected r-regular graph.

    Edges are colored in lexicographic order, each taking the smallest color
    free at both ends, backtracking on dead ends.  Colorings that differ only
    by renaming colors are all produced.
    """
    if not sg.is_connected():
        raise NotConnected("graph is not connected")
    degs = [0] * sg.n
    for u, v in sg.edges:
        degs[u] += 1
        degs[v] += 1
    r = degs[0]
    for v, d in enumerate(degs):
        if d != r:
            raise NotRegular(f"vertex {sg.names[v]} has degree {d}, expected {r}")
    if r > MAX_COLORS:
        raise TooManyColors(f"{r} colors, at most {MAX_COLORS} supported")
    edges = sg.edges
    m = len(edges)
    used = [0] * sg.n
    choice = [-1] * m
    k = 0
    while k >= 0:
        if k == m:
            yield EdgeColoredGraph.from_edges(
                sg.n, [(u, v, choice[i]) for i, (u, v) in enumerate(edges)], r,
                sg.names, [str(c) for c in range(r)])
            k -= 1
            continue
        u, v = edges[k]
        c = choice[k]
        if c >= 0:
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
        busy = used[u] | used[v]
        c += 1
        while c < r and busy >> c & 1:
            c += 1
        if c < r:
            choice[k] = c
            used[u] |= 1 << c
            used[v] |= 1 << c
            k += 1
        else:
            choice[k] = -1
            k -= 1


def find_one_factorization(sg: SimpleGraph) -> EdgeColoredGraph:
    """First proper coloring in search order; raises Infeasible for type-2 graphs."""
    for g in iter_one_factorizations(sg):
        return g
    raise Infeasible("graph is not 1-factorable")
