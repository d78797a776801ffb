"""Permutations as tuples and permutation groups via a stabilizer chain.

A permutation of ``range(n)`` is a tuple ``p`` with ``p[i]`` the image of
``i``.  ``compose(p, q)`` is ``p`` after ``q``: ``compose(p, q)[i] == p[q[i]]``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    return tuple(map(p.__getitem__, q))


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def power(p: Sequence[int], k: int) -> Perm:
    result = identity(len(p))
    for _ in range(k):
        result = compose(p, result)
    return result


def perm_order(p: Sequence[int]) -> int:
    """Order of ``p`` as the lcm of its cycle lengths."""
    from math import lcm

    seen = [False] * len(p)
    out = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        out = lcm(out, length)
    return out


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Sequence[int]) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(n))
    p[i], p[j] = j, i
    return tuple(p)


class _Level:
    __slots__ = ("base", "gens", "trans")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Perm] = []
        # point -> u with u[base] == point
        self.trans: dict[int, Perm] = {}


class PermGroup:
    """Permutation group on ``range(degree)`` given by generators.

    The stabilizer chain is built on first use by the deterministic
    Schreier-Sims algorithm.  When the full element list is already known
    (for instance from an exhaustive search) it can be attached with
    ``elements=`` and is then returned as is.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (),
                 elements: Iterable[Sequence[int]] | None = None):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or not is_permutation(g):
                raise ValueError(f"not a permutation of degree {degree}: {g!r}")
            gens.append(g)
        self.generators: list[Perm] = gens
        self._elements: list[Perm] | None = None
        if elements is not None:
            self._elements = sorted({tuple(e) for e in elements})
            if not self.generators:
                self.generators = [e for e in self._elements if not is_identity(e)]
        self._levels: list[_Level] | None = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    # -- stabilizer chain -------------------------------------------------

    @property
    def chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._schreier_sims()
        return self._levels

    @property
    def base(self) -> list[int]:
        return [lev.base for lev in self.chain]

    def _orbit(self, lev: _Level) -> None:
        # grows lev.trans in place; existing entries are never replaced
        if not lev.trans:
            lev.trans[lev.base] = identity(self.degree)
        queue = list(lev.trans)
        while queue:
            nxt = []
            for pt in queue:
                u = lev.trans[pt]
                for s in lev.gens:
                    y = s[pt]
                    if y not in lev.trans:
                        lev.trans[y] = compose(s, u)
                        nxt.append(y)
            queue = nxt

    def _strip(self, levels: list[_Level], g: Perm) -> tuple[Perm, int]:
        for i, lev in enumerate(levels):
            x = g[lev.base]
            u = lev.trans.get(x)
            if u is None:
                return g, i
            if x != lev.base:
                g = compose(inverse(u), g)
        return g, len(levels)

    def _schreier_sims(self) -> list[_Level]:
        levels: list[_Level] = []
        gens = [g for g in self.generators if not is_identity(g)]

        def first_moved(g: Perm) -> int:
            for i, x in enumerate(g):
                if i != x:
                    return i
            raise AssertionError("identity has no moved point")

        for g in gens:
            if all(g[lev.base] == lev.base for lev in levels):
                levels.append(_Level(first_moved(g)))
        for i, lev in enumerate(levels):
            bases = [levels[k].base for k in range(i)]
            lev.gens = [g for g in gens if all(g[b] == b for b in bases)]
            self._orbit(lev)

        tested: set[tuple[int, int, Perm]] = set()
        i = len(levels) - 1
        while i >= 0:
            lev = levels[i]
            restarted = False
            for pt in list(lev.trans):
                u = lev.trans[pt]
                for s in lev.gens:
                    key = (i, pt, s)
                    if key in tested:
                        continue
                    tested.add(key)
                    image = s[pt]
                    h = compose(inverse(lev.trans[image]), compose(s, u))
                    if is_identity(h):
                        continue
                    h, j = self._strip(levels, h)
                    if is_identity(h):
                        continue
                    if j == len(levels):
                        levels.append(_Level(first_moved(h)))
                    for k in range(i + 1, j + 1):
                        levels[k].gens.append(h)
                        self._orbit(levels[k])
                    i = j
                    restarted = True
                    break
                if restarted:
                    break
            if not restarted:
                i -= 1
        return levels

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        out = 1
        for lev in self.chain:
            out *= len(lev.trans)
        return out

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        if self._elements is not None:
            return g in self._element_set
        h, j = self._strip(self.chain, g)
        return j == len(self.chain) and is_identity(h)

    __contains__ = contains

    @property
    def _element_set(self) -> set[Perm]:
        cached = getattr(self, "_eset", None)
        if cached is None:
            cached = self._eset = set(self._elements or ())
        return cached

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        while queue:
            nxt = []
            for x in queue:
                for g in self.generators:
                    y = g[x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            queue = nxt
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        out = []
        done: set[int] = set()
        for x in range(self.degree):
            if x not in done:
                orb = self.orbit(x)
                done.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def iter_elements(self) -> Iterator[Perm]:
        if self._elements is not None:
            yield from self._elements
            return
        levels = self.chain
        n = self.degree

        def rec(i: int, acc: Perm) -> Iterator[Perm]:
            if i == len(levels):
                yield acc
                return
            for u in levels[i].trans.values():
                yield from rec(i + 1, compose(acc, u))

        yield from rec(0, identity(n))

    def elements(self, limit: int = 10**5) -> list[Perm]:
        if self.order() > limit:
            from .errors import ScaleExceeded

            raise ScaleExceeded(f"group order {self.order()} exceeds listing limit {limit}")
        if self._elements is None:
            self._elements = sorted(self.iter_elements())
        return list(self._elements)
