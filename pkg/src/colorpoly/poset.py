"""Explicit abstract polytopes as ranked posets.

A face is addressed by ``(rank, index)``.  Rank -1 and rank n each hold the
faces listed for them (a polytope has exactly one of each); every face of
rank j >= 0 stores the sorted indices of the rank-(j-1) faces it covers.
Rank-0 faces cover the single face at rank -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from .errors import MalformedPolytope, NotAPolytope, ScaleExceeded
from .perm import PermGroup

MAX_ORACLE_FACES = 10**4


class RankedPoset:
    """Ranked poset with cover relations between consecutive ranks.

    ``down[j + 1][i]`` lists the rank-(j-1) faces covered by face ``(j, i)``.
    ``labels`` optionally attaches a payload to each face (the colorful
    constructions use it to remember which ``Face`` an index stands for).
    """

    def __init__(self, rank: int, down: Sequence[Sequence[Sequence[int]]],
                 labels: Sequence[Sequence[Any]] | None = None):
        if rank < -1:
            raise MalformedPolytope(f"rank {rank} < -1")
        if len(down) != rank + 2:
            raise MalformedPolytope(f"expected {rank + 2} rank levels, got {len(down)}")
        self.rank = rank
        self.down: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
            tuple(tuple(sorted(c)) for c in level) for level in down)
        for j in range(-1, rank + 1):
            below = self.count(j - 1) if j >= 0 else 0
            for i, cov in enumerate(self.down[j + 1]):
                if len(set(cov)) != len(cov) or any(not 0 <= x < below for x in cov):
                    raise MalformedPolytope(f"face ({j}, {i}) has invalid covers {cov}")
        self.labels = labels
        self._up: tuple[tuple[tuple[int, ...], ...], ...] | None = None
        self._label_index: dict[tuple[int, Any], int] | None = None

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_covers(cls, rank: int, covers: Sequence[Sequence[Sequence[int]]],
                    labels: Sequence[Sequence[Any]] | None = None) -> "RankedPoset":
        """``covers[j]`` lists the covers of the rank-j faces, j = 0..rank.

        A single rank -1 face is added; rank-0 covers are ignored.
        """
        down = [((),)]
        for j, level in enumerate(covers):
            down.append(tuple((0,) for _ in level) if j == 0 else tuple(tuple(c) for c in level))
        return cls(rank, down, labels)

    @classmethod
    def from_vertex_sets(cls, rank: int, faces: Sequence[Sequence[Sequence[int]]]) -> "RankedPoset":
        """Build a lattice-like polytope from the vertex sets of its faces.

        ``faces[j]`` lists vertex sets of the rank-j faces for j = 1..rank-1;
        vertices are ``range(nv)`` where nv is inferred.  Incidence is set
        inclusion, which is only valid when faces are determined by vertices.
        """
        sets: list[list[frozenset[int]]] = [list(map(frozenset, level)) for level in faces]
        nv = 1 + max(v for level in sets for s in level for v in s)
        levels = [[frozenset([v]) for v in range(nv)]] + sets + [[frozenset(range(nv))]]
        covers: list[list[list[int]]] = [[[] for _ in levels[0]]]
        for j in range(1, len(levels)):
            covers.append([[i for i, low in enumerate(levels[j - 1]) if low <= s] for s in levels[j]])
        return cls.from_covers(rank, covers)

    # -- basic queries -------------------------------------------------------

    def count(self, j: int) -> int:
        return len(self.down[j + 1])

    def f_vector(self) -> tuple[int, ...]:
        """Face counts for ranks 0..n (the top face included)."""
        return tuple(self.count(j) for j in range(0, self.rank + 1))

    def faces(self, j: int) -> range:
        return range(self.count(j))

    def all_faces(self) -> list[tuple[int, int]]:
        return [(j, i) for j in range(-1, self.rank + 1) for i in range(self.count(j))]

    def num_faces(self) -> int:
        return sum(len(level) for level in self.down)

    def covers(self, j: int, i: int) -> tuple[int, ...]:
        return self.down[j + 1][i]

    def up(self, j: int, i: int) -> tuple[int, ...]:
        """Rank-(j+1) faces covering ``(j, i)``."""
        if self._up is None:
            up: list[list[list[int]]] = [[[] for _ in level] for level in self.down]
            for jj in range(0, self.rank + 1):
                for k, cov in enumerate(self.down[jj + 1]):
                    for x in cov:
                        up[jj][x].append(k)
            self._up = tuple(tuple(tuple(u) for u in level) for level in up)
        return self._up[j + 1][i]

    def face_number(self, j: int, i: int) -> int:
        """Global position of ``(j, i)`` in rank-major order."""
        return sum(self.count(k) for k in range(-1, j)) + i

    def label_index(self, j: int, label: Any) -> int:
        if self._label_index is None:
            if self.labels is None:
                raise KeyError("poset carries no labels")
            self._label_index = {(jj - 1, lab): i for jj, level in enumerate(self.labels)
                                 for i, lab in enumerate(level)}
        return self._label_index[(j, label)]

    def leq(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        (ja, ia), (jb, ib) = a, b
        if ja > jb:
            return False
        frontier = {ib}
        for j in range(jb, ja, -1):
            frontier = {x for f in frontier for x in self.covers(j, f)}
        return ia in frontier

    def above(self, j: int, i: int) -> list[tuple[int, int]]:
        """All faces ``>= (j, i)``."""
        out = [(j, i)]
        frontier = {i}
        for k in range(j, self.rank):
            frontier = {x for f in frontier for x in self.up(k, f)}
            out.extend((k + 1, x) for x in sorted(frontier))
        return out

    def below(self, j: int, i: int) -> list[tuple[int, int]]:
        out = [(j, i)]
        frontier = {i}
        for k in range(j, -1, -1):
            frontier = {x for f in frontier for x in self.covers(k, f)}
            out.extend((k - 1, x) for x in sorted(frontier))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RankedPoset) and self.rank == other.rank and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.rank, self.down))

    def __repr__(self) -> str:
        return f"RankedPoset(rank={self.rank}, f={self.f_vector()})"

    # -- text format ---------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"rank {self.rank}"]
        for j in range(0, self.rank + 1):
            for i, cov in enumerate(self.down[j + 1]):
                body = "" if j == 0 else " " + " ".join(map(str, cov))
                lines.append(f"f {j} {i} :{body}")
        return "\n".join(lines) + "\n"


def parse_polytope(text: str) -> RankedPoset:
    """Parse ``rank <n>`` followed by ``f <rank> <index> : <covered indices>`` lines."""
    rank = None
    entries: dict[int, dict[int, list[int]]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        toks = body.split()
        try:
            if toks[0] == "rank" and len(toks) == 2 and rank is None:
                rank = int(toks[1])
                continue
            if toks[0] != "f" or len(toks) < 4 or toks[3] != ":" or rank is None:
                raise ValueError
            j, i = int(toks[1]), int(toks[2])
            cov = [int(t) for t in toks[4:]]
        except ValueError:
            raise MalformedPolytope(f"line {lineno}: cannot parse {body!r}") from None
        if not 0 <= j <= rank:
            raise MalformedPolytope(f"line {lineno}: rank {j} outside 0..{rank}")
        if j == 0 and cov:
            raise MalformedPolytope(f"line {lineno}: vertices cover only the implicit rank -1 face")
        if i in entries.setdefault(j, {}):
            raise MalformedPolytope(f"line {lineno}: face ({j}, {i}) listed twice")
        entries[j][i] = cov
    if rank is None:
        raise MalformedPolytope("missing 'rank <n>' line")
    covers = []
    for j in range(0, rank + 1):
        level = entries.get(j, {})
        if sorted(level) != list(range(len(level))):
            raise MalformedPolytope(f"rank {j} face indices are not 0..{len(level) - 1}")
        covers.append([level[i] for i in range(len(level))])
    return RankedPoset.from_covers(rank, covers)


# -- flags -----------------------------------------------------------------

Flag = tuple  # one face index per rank -1..n


def flags(p: RankedPoset, limit: int | None = None) -> list[Flag]:
    """All maximal chains from the rank -1 faces to the rank n faces, sorted."""
    out: list[Flag] = []
    n = p.rank

    def rec(chain: list[int]) -> None:
        j = len(chain) - 2  # rank of last face
        if j == n:
            out.append(tuple(chain))
            if limit is not None and len(out) > limit:
                raise ScaleExceeded(f"more than {limit} flags")
            return
        for x in p.up(j, chain[-1]):
            chain.append(x)
            rec(chain)
            chain.pop()

    for bottom in p.faces(-1):
        rec([bottom])
    out.sort()
    return out


def flag_adjacent(p: RankedPoset, f: Flag, i: int) -> Flag:
    """The flag differing from ``f`` exactly in its rank-i face."""
    if not 0 <= i <= p.rank - 1:
        raise ValueError(f"adjacency rank {i} outside 0..{p.rank - 1}")
    lower = f[i]       # rank i-1 face sits at position i
    upper = f[i + 2]   # rank i+1 face
    middle = [x for x in p.covers(i + 1, upper) if lower in p.covers(i, x)]
    others = [x for x in middle if x != f[i + 1]]
    if len(middle) != 2 or len(others) != 1:
        raise NotAPolytope(f"section between faces ({i - 1}, {lower}) and ({i + 1}, {upper}) "
                           f"has {len(middle)} middle faces")
    g = list(f)
    g[i + 1] = others[0]
    return tuple(g)


class FlagIndex:
    """Sorted flags of a polytope with their adjacency permutations.

    ``adj[i][k]`` is the index of the i-adjacent flag of ``flags[k]``.
    """

    def __init__(self, p: RankedPoset, limit: int | None = None):
        self.poset = p
        self.flags = flags(p, limit)
        self.index = {f: k for k, f in enumerate(self.flags)}
        self.adj: list[tuple[int, ...]] = [
            tuple(self.index[flag_adjacent(p, f, i)] for f in self.flags) for i in range(p.rank)]

    def __len__(self) -> int:
        return len(self.flags)


# -- validation --------------------------------------------------------------

@dataclass
class AxiomResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def get(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_text(self) -> str:
        return "".join(f"{r.name}: {'pass' if r.passed else 'FAIL'}"
                       f"{' (' + r.detail + ')' if r.detail else ''}\n" for r in self.results)


def _check_extremes(p: RankedPoset) -> AxiomResult:
    lo, hi = p.count(-1), p.count(p.rank)
    ok = lo == 1 and hi == 1
    return AxiomResult("unique-min-max", ok, "" if ok else f"{lo} minimal and {hi} maximal faces")


def _check_graded(p: RankedPoset) -> AxiomResult:
    # every maximal chain has n + 2 faces iff no face except the bottom lacks
    # a lower cover and none except the top lacks an upper cover
    for j in range(0, p.rank + 1):
        for i in p.faces(j):
            if not p.covers(j, i):
                return AxiomResult("rank-strict-chains", False, f"face ({j}, {i}) covers nothing")
    for j in range(-1, p.rank):
        for i in p.faces(j):
            if not p.up(j, i):
                return AxiomResult("rank-strict-chains", False, f"face ({j}, {i}) is covered by nothing")
    return AxiomResult("rank-strict-chains", True)


def _check_diamond(p: RankedPoset) -> AxiomResult:
    for j in range(0, p.rank):
        # pairs F (rank j-1) < G (rank j+1)
        for g in p.faces(j + 1):
            counts: dict[int, int] = {}
            for h in p.covers(j + 1, g):
                for f in p.covers(j, h):
                    counts[f] = counts.get(f, 0) + 1
            for f, c in sorted(counts.items()):
                if c != 2:
                    return AxiomResult("diamond", False,
                                       f"faces ({j - 1}, {f}) < ({j + 1}, {g}) have {c} faces between")
    return AxiomResult("diamond", True)


def _section_connected(p: RankedPoset, lo: tuple[int, int], hi: tuple[int, int]) -> bool:
    """Flag-adjacency connectivity of the section hi/lo."""
    (jl, il), (jh, ih) = lo, hi
    chains: list[tuple[int, ...]] = []

    def rec(chain: list[int]) -> None:
        j = jl + len(chain) - 1
        if j == jh - 1:
            if ih in p.up(j, chain[-1]):
                chains.append(tuple(chain[1:]))
            return
        for x in p.up(j, chain[-1]):
            chain.append(x)
            rec(chain)
            chain.pop()

    rec([il])
    if len(chains) <= 1:
        return True
    parent = list(range(len(chains)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    buckets: dict[tuple, int] = {}
    for k, ch in enumerate(chains):
        for pos in range(len(ch)):
            key = (pos, ch[:pos], ch[pos + 1:])
            other = buckets.setdefault(key, k)
            if other != k:
                parent[find(k)] = find(other)
    root = find(0)
    return all(find(k) == root for k in range(len(chains)))


def _check_strong_flag_connected(p: RankedPoset) -> AxiomResult:
    # sections of rank <= 1 have at most two flags and are connected whenever
    # the diamond condition holds; only rank >= 2 sections carry information
    for jl in range(-1, p.rank + 1):
        for il in p.faces(jl):
            for jh, ih in p.above(jl, il):
                if jh - jl < 3:
                    continue
                if not _section_connected(p, (jl, il), (jh, ih)):
                    return AxiomResult("strong-flag-connected", False,
                                       f"section ({jh}, {ih})/({jl}, {il}) is not flag-connected")
    return AxiomResult("strong-flag-connected", True)


def validate_polytope(p: RankedPoset) -> ValidationReport:
    """Check the abstract polytope axioms one by one."""
    report = ValidationReport()
    report.results.append(_check_extremes(p))
    graded = _check_graded(p)
    report.results.append(graded)
    report.results.append(_check_diamond(p))
    if graded.passed:
        report.results.append(_check_strong_flag_connected(p))
    else:
        report.results.append(AxiomResult("strong-flag-connected", False, "skipped: poset not graded"))
    return report


# -- duality ---------------------------------------------------------------------

def dual(p: RankedPoset) -> RankedPoset:
    """Reverse the order: face (j, i) becomes (n - 1 - j, i)."""
    n = p.rank
    down = []
    for jn in range(-1, n + 1):
        jo = n - 1 - jn  # old rank
        down.append(tuple(p.up(jo, i) if jo < n else () for i in p.faces(jo)))
    return RankedPoset(n, down)


# -- isomorphism search ----------------------------------------------------------

def _isomorphisms(p: RankedPoset, q: RankedPoset, limit: int = MAX_ORACLE_FACES) -> Iterator[dict]:
    """Order-preserving bijections p -> q by backtracking on faces rank by rank.

    Vertices are placed first (breadth-first along edges, each candidate
    checked against every placed vertex for edge adjacency), then each
    higher face is matched to a face of q whose covered set is exactly the
    image of its own covered set.
    """
    if p.rank != q.rank or [p.count(j) for j in range(-1, p.rank + 1)] != \
            [q.count(j) for j in range(-1, q.rank + 1)]:
        return
    if p.num_faces() > limit or q.num_faces() > limit:
        raise ScaleExceeded(f"isomorphism search limited to {limit} faces")
    n = p.rank

    def skeleton(r: RankedPoset) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in r.faces(0)]
        if n >= 1:
            for e in r.faces(1):
                vs = r.covers(1, e)
                for a in vs:
                    for b in vs:
                        if a != b:
                            adj[a].add(b)
        return adj

    adj_p, adj_q = skeleton(p), skeleton(q)
    nv = p.count(0)
    # vertex order: BFS along edges, restarting for stray components
    order: list[int] = []
    anchor: list[int | None] = []
    seen: set[int] = set()
    for s in range(nv):
        if s in seen:
            continue
        seen.add(s)
        order.append(s)
        anchor.append(None)
        k = len(order) - 1
        while k < len(order):
            x = order[k]
            for y in sorted(adj_p[x]):
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    anchor.append(x)
            k += 1

    # higher faces grouped by their covered sets in q
    by_cover_q = [dict() for _ in range(n + 2)]
    for j in range(1, n + 1):
        for i in q.faces(j):
            by_cover_q[j + 1].setdefault(q.covers(j, i), []).append(i)
    higher = [(j, i) for j in range(1, n + 1) for i in p.faces(j)]
    vmap = [-1] * nv
    used_v = [False] * q.count(0)
    fmap: list[list[int]] = [[-1] * p.count(j) for j in range(-1, n + 1)]
    used: list[list[bool]] = [[False] * q.count(j) for j in range(-1, n + 1)]
    deg_p = [len(a) for a in adj_p]
    deg_q = [len(a) for a in adj_q]
    up0_p = [len(p.up(0, v)) if n >= 1 else 0 for v in range(nv)]
    up0_q = [len(q.up(0, v)) if n >= 1 else 0 for v in q.faces(0)]

    def place_higher(k: int) -> Iterator[dict]:
        if k == len(higher):
            out = {(-1, i): i for i in p.faces(-1)}
            for v in range(nv):
                out[(0, v)] = vmap[v]
            for j in range(1, n + 1):
                for i in p.faces(j):
                    out[(j, i)] = fmap[j + 1][i]
            yield out
            return
        j, i = higher[k]
        below = fmap[j] if j > 1 else vmap
        image = tuple(sorted(below[x] for x in p.covers(j, i)))
        for cand in by_cover_q[j + 1].get(image, ()):
            if used[j + 1][cand]:
                continue
            used[j + 1][cand] = True
            fmap[j + 1][i] = cand
            yield from place_higher(k + 1)
            used[j + 1][cand] = False
            fmap[j + 1][i] = -1

    def place_vertex(k: int) -> Iterator[dict]:
        if k == nv:
            yield from place_higher(0)
            return
        v = order[k]
        a = anchor[k]
        cands = sorted(adj_q[vmap[a]]) if a is not None else list(q.faces(0))
        for w in cands:
            if used_v[w] or deg_q[w] != deg_p[v] or up0_q[w] != up0_p[v]:
                continue
            ok = True
            for kk in range(k):
                x = order[kk]
                if (x in adj_p[v]) != (vmap[x] in adj_q[w]):
                    ok = False
                    break
            if not ok:
                continue
            used_v[w] = True
            vmap[v] = w
            yield from place_vertex(k + 1)
            used_v[w] = False
            vmap[v] = -1

    if n == -1:
        yield {(-1, 0): 0}
        return
    yield from place_vertex(0)


def _as_face_perm(p: RankedPoset, m: dict) -> tuple[int, ...]:
    return tuple(q_num for _, q_num in sorted(
        (p.face_number(*f), p.face_number(f[0], img)) for f, img in m.items()))


def poset_automorphisms(p: RankedPoset, limit: int = MAX_ORACLE_FACES) -> PermGroup:
    """Full automorphism group as permutations of global face numbers."""
    elems = [_as_face_perm(p, m) for m in _isomorphisms(p, p, limit)]
    return PermGroup(p.num_faces(), elements=elems)


def isomorphic(p: RankedPoset, q: RankedPoset) -> bool:
    return next(_isomorphisms(p, q), None) is not None


def dualities(p: RankedPoset, limit: int = MAX_ORACLE_FACES) -> list[dict]:
    """All order-reversing bijections of p, as maps ``(j, i) -> (n-1-j, i')``."""
    n = p.rank
    out = []
    for m in _isomorphisms(p, dual(p), limit):
        out.append({f: (n - 1 - f[0], img) for f, img in m.items()})
    return sorted(out, key=lambda d: sorted(d.items()))


# -- face layer graphs ---------------------------------------------------------------

@dataclass(frozen=True)
class LayerGraph:
    rank: int
    left: int   # number of rank-i faces
    right: int  # number of rank-(i+1) faces
    edges: tuple[tuple[int, int], ...]

    def is_complete_bipartite(self) -> bool:
        return len(self.edges) == self.left * self.right


def face_layer_graph(p: RankedPoset, i: int) -> LayerGraph:
    """Incidence graph between the rank-i and rank-(i+1) faces."""
    if not 0 <= i <= p.rank - 2:
        raise ValueError(f"layer {i} outside 0..{p.rank - 2}")
    edges = tuple(sorted((x, y) for y in p.faces(i + 1) for x in p.covers(i + 1, y)))
    return LayerGraph(i, p.count(i), p.count(i + 1), edges)


def is_complete_bipartite(graph: LayerGraph) -> bool:
    return graph.is_complete_bipartite()
