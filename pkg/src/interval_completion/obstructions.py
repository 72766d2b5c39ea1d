"""Minimal forbidden induced subgraphs of interval graphs.

Holes, asteroidal triples, asteroidal witnesses (AWs) classified by role
templates, and the edge sets the search branches on. All functions accept an
optional ``mask`` restricting attention to the induced subgraph g[mask]; vertex
ids are never relabelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import ObstructionError
from .graph import Edge, Graph, bits, edge, popcount, reachable, shortest_path, to_mask


# -- holes ------------------------------------------------------------------

@dataclass(frozen=True)
class Hole:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def cycle_edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def find_hole(g: Graph, mask: int | None = None) -> Hole | None:
    """Shortest hole of g[mask] (ties: lexicographically smallest), or None if chordal."""
    mask = g.all_mask if mask is None else mask
    best = None
    for mid in bits(mask):
        nb = list(bits(g.adj[mid] & mask))
        allowed = mask & ~g.closed_nbhd(mid)
        for a, b in combinations(nb, 2):
            if g.has_edge(a, b):
                continue
            path = shortest_path(g, a, b, allowed)
            if path is None:
                continue
            key = (len(path) + 1, _canonical_cycle([mid] + path))
            if best is None or key < best:
                best = key
    return Hole(best[1]) if best else None


def is_hole(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = (j - i) in (1, k - 1)
            if g.has_edge(cycle[i], cycle[j]) != adjacent:
                return False
    return True


# -- asteroidal triples -----------------------------------------------------

def _avoid_labels(g: Graph, mask: int) -> dict[int, dict[int, int]]:
    """For each a: component label of every vertex of g[mask] - N[a]."""
    labels: dict[int, dict[int, int]] = {}
    for a in bits(mask):
        rest = mask & ~g.closed_nbhd(a)
        lab: dict[int, int] = {}
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = reachable(g, v, rest)
            for u in bits(comp):
                lab[u] = v
            rest &= ~comp
        labels[a] = lab
    return labels


def at_triples(g: Graph, mask: int | None = None) -> Iterator[tuple[int, int, int]]:
    """All asteroidal triples of g[mask] in lexicographic order."""
    mask = g.all_mask if mask is None else mask
    labels = _avoid_labels(g, mask)
    verts = list(bits(mask))
    for i, a in enumerate(verts):
        la = labels[a]
        for j in range(i + 1, len(verts)):
            b = verts[j]
            if g.has_edge(a, b):
                continue
            lb = labels[b]
            for c in verts[j + 1:]:
                if g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                if la[b] == la[c] and lb[a] == lb[c] and labels[c][a] == labels[c][b]:
                    yield (a, b, c)


def find_at(g: Graph, mask: int | None = None) -> tuple[int, int, int] | None:
    return next(at_triples(g, mask), None)


def is_at(g: Graph, triple: tuple[int, int, int], mask: int | None = None) -> bool:
    mask = g.all_mask if mask is None else mask
    a, b, c = triple
    if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
        return False
    for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
        if not reachable(g, y, mask & ~g.closed_nbhd(x)) >> z & 1:
            return False
    return True


# -- asteroidal witnesses ---------------------------------------------------

class AWKind(str, Enum):
    LONG_CLAW = "long_claw"
    WHIPPING_TOP = "whipping_top"
    NET = "net"                                # one center, base length 2 or 3
    TENT = "tent"                              # two centers, base length 1..3
    LONG_DAGGER = "long_dagger"                # one center, base length >= 4
    LONG_DOUBLE_DAGGER = "long_double_dagger"  # two centers, base length >= 4


SMALL_KINDS = {AWKind.LONG_CLAW, AWKind.WHIPPING_TOP, AWKind.NET, AWKind.TENT}
_ONE_CENTER = {AWKind.NET, AWKind.LONG_DAGGER}
_TWO_CENTERS = {AWKind.TENT, AWKind.LONG_DOUBLE_DAGGER}


@dataclass(frozen=True)
class Frame:
    """Terminals plus their neighbors, written (s: c1,c2: l,h; t,r)."""

    s: int
    c1: int
    c2: int
    l: int
    h: int
    t: int
    r: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.s, self.c1, self.c2, self.l, self.h, self.t, self.r))

    def exclusions(self) -> frozenset[Edge]:
        """The five edges whose absence freezes the frame."""
        return frozenset({edge(self.l, self.c2), edge(self.c1, self.r), edge(self.h, self.t),
                          edge(self.s, self.h), edge(self.s, self.t)})


@dataclass(frozen=True)
class AsteroidalWitness:
    """An AW with labelled roles.

    One- and two-center kinds use roles s, c1, c2, l, r (c1 == c2 for one
    center) and ``base`` = b1..bd. Long claws use t1..t3, v1..v3, c; whipping
    tops use t1..t3, c, u, v2, v3.
    """

    kind: AWKind
    roles: dict[str, int] = field(hash=False)
    base: tuple[int, ...] = ()

    @property
    def d(self) -> int:
        return len(self.base)

    @property
    def is_small(self) -> bool:
        return self.kind in SMALL_KINDS

    @property
    def is_long(self) -> bool:
        return not self.is_small

    @property
    def has_shallow(self) -> bool:
        return self.kind in _ONE_CENTER or self.kind in _TWO_CENTERS

    def __getattr__(self, name: str) -> int:
        roles = self.__dict__.get("roles", {})
        if name in roles:
            return roles[name]
        if name == "h" and self.base:
            return self.base[0]
        if name == "t" and self.base:
            return self.base[-1]
        raise AttributeError(name)

    @property
    def terminals(self) -> tuple[int, int, int]:
        if self.has_shallow:
            return (self.roles["s"], self.roles["l"], self.roles["r"])
        return (self.roles["t1"], self.roles["t2"], self.roles["t3"])

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.roles.values()) | set(self.base)))

    @property
    def frame(self) -> Frame:
        if not self.has_shallow:
            raise ObstructionError(f"{self.kind.value} has no frame")
        r = self.roles
        return Frame(r["s"], r["c1"], r["c2"], r["l"], self.base[0], self.base[-1], r["r"])

    def expected_edges(self) -> set[Edge]:
        return _template_edges(self.kind, self.roles, self.base)


def _template_edges(kind: AWKind, r: dict[str, int], base: tuple[int, ...]) -> set[Edge]:
    if kind == AWKind.LONG_CLAW:
        return {edge(r[f"t{i}"], r[f"v{i}"]) for i in (1, 2, 3)} | {edge(r[f"v{i}"], r["c"]) for i in (1, 2, 3)}
    if kind == AWKind.WHIPPING_TOP:
        t1, t2, t3, c, u, v2, v3 = (r[x] for x in ("t1", "t2", "t3", "c", "u", "v2", "v3"))
        return {edge(t1, c), edge(c, v2), edge(c, v3), edge(c, u), edge(u, t2), edge(u, v2),
                edge(u, v3), edge(u, t3), edge(t2, v2), edge(t3, v3)}
    path = [r["l"], *base, r["r"]]
    out = {edge(path[i], path[i + 1]) for i in range(len(path) - 1)}
    centers = {r["c1"], r["c2"]}
    for c in centers:
        out.add(edge(r["s"], c))
        out |= {edge(c, b) for b in base}
    if kind in _TWO_CENTERS:
        out |= {edge(r["c1"], r["c2"]), edge(r["c1"], r["l"]), edge(r["c2"], r["r"])}
    return out


def _edges_in(g: Graph, mask: int) -> set[Edge]:
    return {(u, v) for u in bits(mask) for v in bits(g.adj[u] & mask) if u < v}


def classify_aw(g: Graph, wmask: int, terminals: tuple[int, int, int]) -> AsteroidalWitness | None:
    """Match g[wmask] against the AW templates with the given terminal triple."""
    actual = _edges_in(g, wmask)
    size = popcount(wmask)
    tset = set(terminals)
    if len(tset) != 3 or not all(wmask >> t & 1 for t in tset):
        return None
    deg = {v: popcount(g.adj[v] & wmask) for v in bits(wmask)}

    if size == 7 and len(actual) == 6 and all(deg[t] == 1 for t in terminals):
        ts = sorted(terminals)
        vs = [(g.adj[t] & wmask).bit_length() - 1 for t in ts]
        rest = wmask & ~to_mask(ts) & ~to_mask(vs)
        if len(set(vs)) == 3 and popcount(rest) == 1:
            roles = {"c": rest.bit_length() - 1}
            for i, (t, v) in enumerate(zip(ts, vs), start=1):
                roles[f"t{i}"], roles[f"v{i}"] = t, v
            w = AsteroidalWitness(AWKind.LONG_CLAW, roles)
            if w.expected_edges() == actual:
                return w

    if size == 7 and len(actual) == 10:
        ones = [t for t in terminals if deg[t] == 1]
        if len(ones) == 1:
            t1 = ones[0]
            t2, t3 = sorted(tset - {t1})
            c = (g.adj[t1] & wmask).bit_length() - 1
            common = g.adj[t2] & g.adj[t3] & wmask
            if popcount(common) == 1:
                u = common.bit_length() - 1
                n2 = g.adj[t2] & wmask & ~(1 << u)
                n3 = g.adj[t3] & wmask & ~(1 << u)
                if popcount(n2) == 1 and popcount(n3) == 1:
                    roles = {"t1": t1, "t2": t2, "t3": t3, "c": c, "u": u,
                             "v2": n2.bit_length() - 1, "v3": n3.bit_length() - 1}
                    if len(set(roles.values())) == 7:
                        w = AsteroidalWitness(AWKind.WHIPPING_TOP, roles)
                        if w.expected_edges() == actual:
                            return w

    # one or two centers: try the terminal with the longest avoiding path as s
    options = []
    for s in terminals:
        a, b = sorted(tset - {s})
        path = shortest_path(g, a, b, wmask & ~g.closed_nbhd(s))
        if path is not None:
            options.append((-len(path), s, path))
    for _, s, path in sorted(options):
        rest = wmask & ~to_mask(path) & ~(1 << s)
        base = tuple(path[1:-1])
        l, r = path[0], path[-1]
        centers = list(bits(rest))
        if len(centers) == 1 and len(base) >= 2:
            c = centers[0]
            kind = AWKind.NET if len(base) <= 3 else AWKind.LONG_DAGGER
            w = AsteroidalWitness(kind, {"s": s, "c1": c, "c2": c, "c": c, "l": l, "r": r}, base)
        elif len(centers) == 2 and len(base) >= 1:
            x, y = centers
            if g.has_edge(x, l) and not g.has_edge(y, l):
                c1, c2 = x, y
            elif g.has_edge(y, l) and not g.has_edge(x, l):
                c1, c2 = y, x
            else:
                continue
            kind = AWKind.TENT if len(base) <= 3 else AWKind.LONG_DOUBLE_DAGGER
            w = AsteroidalWitness(kind, {"s": s, "c1": c1, "c2": c2, "l": l, "r": r}, base)
        else:
            continue
        if w.expected_edges() == actual:
            return w
    return None


def minimal_at_witness(g: Graph, triple: tuple[int, int, int], mask: int | None = None) -> int:
    """Inclusion-minimal vertex set (bitmask) on which ``triple`` stays an AT.

    Starts from the union of the three shortest avoiding paths.
    """
    mask = g.all_mask if mask is None else mask
    if not is_at(g, triple, mask):
        raise ObstructionError(f"{triple} is not an asteroidal triple")
    w = to_mask(triple)
    for i in range(3):
        x = triple[i]
        y, z = (triple[j] for j in range(3) if j != i)
        w |= to_mask(shortest_path(g, y, z, mask & ~g.closed_nbhd(x)))
    for v in bits(w & ~to_mask(triple)):
        if is_at(g, triple, w & ~(1 << v)):
            w &= ~(1 << v)
    return w


def aw_from_at(g: Graph, triple: tuple[int, int, int], mask: int | None = None) -> AsteroidalWitness:
    """A minimal AW inside the minimal witness of ``triple``.

    Usually its terminals are ``triple`` itself. When the triple's minimal
    witness properly contains another obstruction (a net with one subdivided
    leg, say), that inner AW is returned instead. Raises ObstructionError when
    the triple is not an AT or the witness only contains holes.
    """
    from .interval import is_interval

    w = minimal_at_witness(g, triple, mask)
    aw = classify_aw(g, w, tuple(triple))
    if aw is not None:
        return aw
    # shrink to a minimal non-interval subgraph, dropping non-terminals first
    order = [v for v in bits(w) if v not in triple] + list(triple)
    for v in order:
        if not is_interval(g, w & ~(1 << v)):
            w &= ~(1 << v)
    inner = find_at(g, w)
    if inner is None:
        raise ObstructionError(f"witness of {triple} contains a hole, not an asteroidal witness")
    aw = classify_aw(g, w, inner)
    if aw is None:
        raise ObstructionError(f"witness of {triple} is not an asteroidal witness")
    return aw


@lru_cache(maxsize=256)
def triple_witnesses(g: Graph, mask: int | None = None) -> tuple[tuple[tuple[int, int, int], AsteroidalWitness], ...]:
    """(triple, aw_from_at(triple)) for every AT triple of g[mask], cached per graph."""
    return tuple((t, aw_from_at(g, t, mask)) for t in at_triples(g, mask))


def find_small_obstruction(g: Graph, mask: int | None = None) -> Hole | AsteroidalWitness | None:
    """A hole, else the smallest small AW (by size, then vertices), else None."""
    hole = find_hole(g, mask)
    if hole is not None:
        return hole
    best = None
    best_key = None
    for _, w in triple_witnesses(g, mask):
        if w.is_small:
            key = (len(w.vertices), w.vertices)
            if best_key is None or key < best_key:
                best, best_key = w, key
    return best


def find_obstruction(g: Graph, mask: int | None = None) -> Hole | AsteroidalWitness | None:
    """Any minimal forbidden subgraph: hole or small AW first, then a long AW."""
    obs = find_small_obstruction(g, mask)
    if obs is not None:
        return obs
    triple = find_at(g, mask)
    return None if triple is None else aw_from_at(g, triple, mask)


def is_reduced(g: Graph, mask: int | None = None) -> bool:
    return find_small_obstruction(g, mask) is None


# -- branching sets ---------------------------------------------------------

@lru_cache(maxsize=None)
def _polygon_triangulations(k: int) -> tuple[frozenset[Edge], ...]:
    """Chord sets of all triangulations of the polygon 0..k-1."""

    @lru_cache(maxsize=None)
    def tri(i: int, j: int) -> tuple[frozenset[Edge], ...]:
        # polygon i, i+1, ..., j closed by the side (i, j)
        if j - i < 2:
            return (frozenset(),)
        out = []
        for apex in range(i + 1, j):
            chords = set()
            if apex - i > 1:
                chords.add((i, apex))
            if j - apex > 1:
                chords.add((apex, j))
            for left in tri(i, apex):
                for right in tri(apex, j):
                    out.append(frozenset(chords) | left | right)
        return tuple(out)

    return tri(0, k - 1)


def minimal_hole_fills(hole: Hole | tuple[int, ...]) -> list[frozenset[Edge]]:
    """All inclusion-minimal chord sets that triangulate the hole, canonically ordered."""
    vs = hole.vertices if isinstance(hole, Hole) else tuple(hole)
    if len(vs) < 4:
        raise ObstructionError("a hole has at least 4 vertices")
    fills = {frozenset(edge(vs[a], vs[b]) for a, b in t) for t in _polygon_triangulations(len(vs))}
    return sorted(fills, key=lambda f: sorted(f))


def long_aw_branch_edges(frame: Frame, base: tuple[int, ...] | list[int]) -> frozenset[Edge]:
    """The d+3 edges one of which every interval supergraph contains (d >= 4)."""
    if len(base) <= 3:
        raise ObstructionError("long AW needs base length > 3; use small_aw_branch_edges")
    return _shallow_branch_edges(frame, tuple(base))


def _shallow_branch_edges(frame: Frame, base: tuple[int, ...]) -> frozenset[Edge]:
    out = {edge(frame.l, frame.c2), edge(frame.c1, frame.r), edge(frame.s, frame.h), edge(frame.s, frame.t)}
    if len(base) >= 3:  # h and t coincide or are adjacent for shorter bases
        out.add(edge(frame.h, frame.t))
    out |= {edge(frame.s, b) for b in base[1:-1]}
    return frozenset(out)


def small_aw_branch_edges(w: AsteroidalWitness) -> frozenset[Edge]:
    r = w.roles
    if w.kind == AWKind.LONG_CLAW:
        t1, t2, t3, v1, v2, v3, c = (r[x] for x in ("t1", "t2", "t3", "v1", "v2", "v3", "c"))
        return frozenset({edge(t1, c), edge(t2, c), edge(t3, c), edge(v1, v2), edge(v1, v3), edge(v2, v3)})
    if w.kind == AWKind.WHIPPING_TOP:
        return frozenset({edge(r["t1"], r["u"]), edge(r["t2"], r["c"]), edge(r["t3"], r["c"]),
                          edge(r["v2"], r["v3"])})
    if w.kind == AWKind.NET and w.d == 2:
        s, c, l, rr = r["s"], r["c"], r["l"], r["r"]
        b1, b2 = w.base
        return frozenset({edge(s, b1), edge(s, b2), edge(l, c), edge(l, b2), edge(rr, c), edge(rr, b1)})
    if w.kind in (AWKind.NET, AWKind.TENT):
        return _shallow_branch_edges(w.frame, w.base)
    raise ObstructionError(f"{w.kind.value} is not a small AW")


def branch_edges(w: AsteroidalWitness) -> frozenset[Edge]:
    return small_aw_branch_edges(w) if w.is_small else long_aw_branch_edges(w.frame, w.base)


def eligible_edges(g: Graph, w: AsteroidalWitness) -> frozenset[Edge]:
    """Missing edges joining a terminal to the defining path of the other two."""
    wmask = to_mask(w.vertices)
    out = set()
    ts = w.terminals
    for x in ts:
        y, z = (t for t in ts if t != x)
        path = shortest_path(g, y, z, wmask & ~g.closed_nbhd(x))
        out |= {edge(x, p) for p in path if not g.has_edge(x, p)}
    return frozenset(out)
