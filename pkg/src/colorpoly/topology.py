"""Rank-3 polytopes as maps on closed surfaces."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass
from typing import NamedTuple

from .errors import MapConditionFailed, NotRankThree
from .poset import FlagIndex, RankedPoset


@dataclass
class SurfaceReport:
    f_vector: tuple[int, int, int]
    euler: int
    orientable: bool
    face_sizes: tuple[int, ...]
    surface_name: str

    def to_text(self) -> str:
        v, e, f = self.f_vector
        sizes = " ".join(map(str, self.face_sizes))
        return (f"surface: {self.surface_name} chi={self.euler} orientable={'yes' if self.orientable else 'no'}\n"
                f"f-vector: {v} {e} {f}\n"
                f"face-sizes: {sizes}\n")

    def to_json(self) -> str:
        d = asdict(self)
        d["f_vector"] = list(self.f_vector)
        d["face_sizes"] = list(self.face_sizes)
        return json.dumps(d, sort_keys=False)


def surface_name(euler: int, orientable: bool) -> str:
    if orientable:
        if euler > 2 or euler % 2:
            raise ValueError(f"no orientable closed surface has chi={euler}")
        genus = (2 - euler) // 2
        return {0: "sphere", 1: "torus"}.get(genus, f"genus-{genus}")
    k = 2 - euler
    if k < 1:
        raise ValueError(f"no non-orientable closed surface has chi={euler}")
    return {1: "projective-plane", 2: "klein-bottle"}.get(k, f"non-orientable-genus-{k}")


def _require_rank_three(p: RankedPoset) -> None:
    if p.rank != 3:
        raise NotRankThree(f"rank {p.rank}, expected 3")


def _check_map(p: RankedPoset) -> None:
    for e in p.faces(1):
        if len(p.covers(1, e)) != 2:
            raise MapConditionFailed(f"edge {e} has {len(p.covers(1, e))} vertices")
        if len(p.up(1, e)) != 2:
            raise MapConditionFailed(f"edge {e} lies in {len(p.up(1, e))} faces")


def orientable_by_flags(p: RankedPoset) -> bool:
    """A map is orientable iff its flag graph is bipartite."""
    fi = FlagIndex(p)
    side = [-1] * len(fi)
    for start in range(len(fi)):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            k = stack.pop()
            for adj in fi.adj:
                m = adj[k]
                if side[m] < 0:
                    side[m] = 1 - side[k]
                    stack.append(m)
                elif side[m] == side[k]:
                    return False
    return True


def face_boundary(p: RankedPoset, f: int) -> list[tuple[int, int]]:
    """The boundary of 2-face f as a cyclic list of (edge, tail vertex)."""
    edges = list(p.covers(2, f))
    at: dict[int, list[int]] = {}
    for e in edges:
        for v in p.covers(1, e):
            at.setdefault(v, []).append(e)
    e = edges[0]
    tail = p.covers(1, e)[0]
    out = []
    while True:
        out.append((e, tail))
        a, b = p.covers(1, e)
        head = b if a == tail else a
        nxt = [x for x in at[head] if x != e]
        if len(nxt) != 1:
            raise MapConditionFailed(f"face {f} is not a polygon at vertex {head}")
        e, tail = nxt[0], head
        if (e, tail) == out[0]:
            return out
        if len(out) > len(edges):
            raise MapConditionFailed(f"face {f} boundary is not a single cycle")


def orientable_by_faces(p: RankedPoset) -> bool:
    """Propagate face orientations so that each edge is traversed in opposite directions."""
    boundary = {f: face_boundary(p, f) for f in p.faces(2)}
    # direction[f][e] = tail of e when f is traversed in its stored direction
    direction = {f: dict(b) for f, b in boundary.items()}
    sign: dict[int, int] = {}
    for start in p.faces(2):
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for e, tail in boundary[f]:
                a, b = p.covers(1, e)
                my_tail = tail if sign[f] == 1 else (b if tail == a else a)
                for g in p.up(1, e):
                    if g == f:
                        continue
                    t = direction[g][e]
                    want = -1 if t == my_tail else 1
                    if g not in sign:
                        sign[g] = want
                        stack.append(g)
                    elif sign[g] != want:
                        return False
    return True


def classify_surface(p: RankedPoset) -> SurfaceReport:
    _require_rank_three(p)
    _check_map(p)
    v, e, f = p.count(0), p.count(1), p.count(2)
    chi = v - e + f
    by_flags = orientable_by_flags(p)
    by_faces = orientable_by_faces(p)
    if by_flags != by_faces:
        raise AssertionError("orientability tests disagree")
    sizes = tuple(sorted(len(p.covers(2, x)) for x in p.faces(2)))
    return SurfaceReport((v, e, f), chi, by_flags, sizes, surface_name(chi, by_flags))


class Irregular(NamedTuple):
    face_sizes: tuple[int, ...]
    vertex_degrees: tuple[int, ...]

    def profile(self) -> str:
        c = Counter(self.face_sizes)
        return "{" + ",".join(f"{q}^{m}" if m > 1 else str(q) for q, m in sorted(c.items())) + "}"


def schlafli_type(p: RankedPoset) -> tuple[int, int] | Irregular:
    _require_rank_three(p)
    sizes = tuple(sorted(len(p.covers(2, x)) for x in p.faces(2)))
    degrees = tuple(sorted(len(p.up(0, x)) for x in p.faces(0)))
    if len(set(sizes)) == 1 and len(set(degrees)) == 1:
        return sizes[0], degrees[0]
    return Irregular(sizes, degrees)
