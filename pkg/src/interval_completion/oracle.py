"""Brute-force ground truth for small graphs.

Two independent ways to get the minimum completion size:

* ``profile``: every interval supergraph H contains the graph H_sigma built
  from the left-endpoint order sigma of a model of H, where u < v join iff u
  still has a neighbor at or after v. So the minimum is a minimum over vertex
  orders, computed by a dynamic program over placed-vertex subsets. It never
  calls the recognizer.
* ``subsets``: non-edge subsets by increasing size, each tested for
  intervalness. Literal but exponential in the number of non-edges.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graph import Edge, Graph, bits, edge, popcount, reachable, to_mask
from .interval import is_interval

Profile = tuple[int, ...]


class ExceedsKmax(Exception):
    """The minimum completion is larger than the allowed kmax."""


@dataclass
class OracleResult:
    min_size: int
    one_witness: frozenset[Edge]
    all_minimum_supergraphs: list[frozenset[Edge]] | None = None
    ms: float = 0.0

    def as_dict(self) -> dict:
        out = {"answer": "yes", "k_used": self.min_size,
               "inserted_edges": [list(e) for e in sorted(self.one_witness)],
               "stats": {"ms": round(self.ms, 3)}}
        if self.all_minimum_supergraphs is not None:
            out["all_minimum"] = len(self.all_minimum_supergraphs)
        return out


def _active(g: Graph, placed: int) -> int:
    """Placed vertices that still have an unplaced neighbor."""
    out = 0
    for u in bits(placed):
        if g.adj[u] & ~placed:
            out |= 1 << u
    return out


def _profile_table(g: Graph) -> list[int]:
    """cost[S] = fewest H_sigma edges among orders whose first |S| vertices are S."""
    n = g.n
    full = (1 << n) - 1
    inf = float("inf")
    cost = [inf] * (1 << n)
    cost[0] = 0
    for s in range(1 << n):
        c = cost[s]
        if c == inf:
            continue
        step = popcount(_active(g, s))
        rest = full & ~s
        while rest:
            low = rest & -rest
            t = s | low
            if c + step < cost[t]:
                cost[t] = c + step
            rest ^= low
    return cost


def _order_edges(g: Graph, order: Iterable[int]) -> set[Edge]:
    placed = 0
    out: set[Edge] = set()
    for v in order:
        for u in bits(_active(g, placed)):
            out.add(edge(u, v))
        placed |= 1 << v
    return out


def _profile_min(g: Graph) -> tuple[int, frozenset[Edge]]:
    n = g.n
    if n == 0:
        return 0, frozenset()
    cost = _profile_table(g)
    full = (1 << n) - 1
    # walk back from the full set to recover one optimal order
    order = []
    s = full
    while s:
        for v in reversed(list(bits(s))):
            prev = s & ~(1 << v)
            if cost[prev] + popcount(_active(g, prev)) == cost[s]:
                order.append(v)
                s = prev
                break
    order.reverse()
    h = _order_edges(g, order)
    added = frozenset(h - set(g.edges()))
    return cost[full] - g.m, added


def _subsets_min(g: Graph, kmax: int) -> tuple[int, frozenset[Edge]]:
    non = g.non_edges()
    for size in range(0, min(kmax, len(non)) + 1):
        for combo in combinations(non, size):
            if is_interval(g.add_edges(combo)):
                return size, frozenset(combo)
    raise ExceedsKmax(f"no completion with at most {kmax} edges")


def brute_min_completion(g: Graph, kmax: int | None = None, method: str = "profile",
                         enumerate_all: bool = False) -> OracleResult:
    """Exact minimum interval completion of g.

    ``method`` is "profile" (default, fine up to n ~ 14) or "subsets".
    Raises ExceedsKmax when the minimum exceeds ``kmax``.
    """
    t0 = time.perf_counter()
    kmax = len(g.non_edges()) if kmax is None else kmax
    if method == "profile":
        size, witness = _profile_min(g)
        if size > kmax:
            raise ExceedsKmax(f"minimum completion {size} exceeds kmax={kmax}")
    elif method == "subsets":
        size, witness = _subsets_min(g, kmax)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    every = enumerate_minimum_supergraphs(g) if enumerate_all else None
    return OracleResult(size, witness, every, (time.perf_counter() - t0) * 1000)


def enumerate_minimum_supergraphs(g: Graph) -> list[frozenset[Edge]]:
    """Every minimum set of inserted edges giving an interval graph, canonically ordered.

    A minimum supergraph equals H_sigma for the left-endpoint order of any of
    its models, so it suffices to collect H_sigma over all optimal orders.
    """
    n = g.n
    if n == 0:
        return [frozenset()]
    cost = _profile_table(g)
    full = (1 << n) - 1
    best = cost[full]
    base = set(g.edges())

    # togo[S]: cheapest cost from S to the full set (step cost depends on S only)
    togo: dict[int, int] = {}

    def rest_cost(s: int) -> int:
        if s == full:
            return 0
        if s not in togo:
            togo[s] = popcount(_active(g, s)) + rest_cost_min(s)
        return togo[s]

    def rest_cost_min(s: int) -> int:
        return min(rest_cost(s | 1 << v) for v in bits(full & ~s))

    @lru_cache(maxsize=None)
    def tails(s: int) -> frozenset[frozenset[Edge]]:
        if s == full:
            return frozenset({frozenset()})
        act = _active(g, s)
        out = set()
        for v in bits(full & ~s):
            t = s | 1 << v
            if cost[s] + popcount(act) == cost[t] and cost[t] + rest_cost(t) == best:
                here = frozenset(edge(u, v) for u in bits(act))
                for tail in tails(t):
                    out.add(here | tail)
        return frozenset(out)

    sets = {frozenset(e for e in h if e not in base) for h in tails(0)}
    return sorted(sets, key=lambda s: sorted(s))


def all_interval_supergraphs(g: Graph, avoid: Iterable[Edge] = ()) -> list[frozenset[Edge]]:
    """Every set of inserted edges (any size) avoiding ``avoid`` that yields an interval graph."""
    avoid = {edge(*e) for e in avoid}
    non = [e for e in g.non_edges() if e not in avoid]
    out = []
    for size in range(len(non) + 1):
        for combo in combinations(non, size):
            if is_interval(g.add_edges(combo)):
                out.append(frozenset(combo))
    return out


# -- independent recognizer for cross-checks ----------------------------------

def is_chordal_brute(g: Graph, mask: int | None = None) -> bool:
    """Chordality by repeatedly deleting a simplicial vertex."""
    mask = g.all_mask if mask is None else mask
    while mask:
        for v in bits(mask):
            if g.is_clique(g.adj[v] & mask):
                mask &= ~(1 << v)
                break
        else:
            return False
    return True


def has_at_brute(g: Graph, mask: int | None = None) -> bool:
    mask = g.all_mask if mask is None else mask
    verts = list(bits(mask))
    for a, b, c in combinations(verts, 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        ok = True
        for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            if not reachable(g, y, mask & ~g.closed_nbhd(x)) >> z & 1:
                ok = False
                break
        if ok:
            return True
    return False


def is_interval_brute(g: Graph, mask: int | None = None) -> bool:
    """Chordal and AT-free, checked without the model-building recognizer."""
    return is_chordal_brute(g, mask) and not has_at_brute(g, mask)


# -- holes --------------------------------------------------------------------

def brute_minimal_hole_fills(hole: Iterable[int]) -> list[frozenset[Edge]]:
    """Inclusion-minimal chord sets making the cycle chordal, by exhaustive search.

    Sets are scanned by increasing size; a chordalizing set is minimal iff it
    contains no minimal set found earlier (those are all smaller).
    """
    vs = tuple(hole)
    k = len(vs)
    cyc = Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
    chords = cyc.non_edges()
    found: list[int] = []
    out = []
    for size in range(len(chords) + 1):
        for combo in combinations(range(len(chords)), size):
            key = to_mask(combo)
            if any(f & key == f for f in found):
                continue
            if is_chordal_brute(cyc.add_edges(chords[i] for i in combo)):
                found.append(key)
                out.append(frozenset(edge(vs[chords[i][0]], vs[chords[i][1]]) for i in combo))
    return sorted(out, key=lambda s: sorted(s))


# -- orders of models ------------------------------------------------------

def interval_orders(h: Graph, tracked: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Relative orders of ``tracked`` vertices over every interval model of h.

    Left-endpoint orders of models are exactly the orders where u < v < w and
    uw an edge imply uv an edge. A dynamic program over placed-vertex sets
    records which relative orders of the tracked vertices can appear.
    """
    n = h.n
    full = (1 << n) - 1
    tmask = to_mask(tracked)

    @lru_cache(maxsize=None)
    def reach(s: int) -> frozenset[tuple[int, ...]]:
        # set of tracked suffix orders achievable from placed set s
        if s == full:
            return frozenset({()})
        out = set()
        for v in bits(full & ~s):
            after = s | 1 << v
            pending = 0
            for u in bits(s):
                if h.adj[u] & ~after:
                    pending |= 1 << u
            if pending & ~h.adj[v]:
                continue
            for tail in reach(after):
                out.add(((v,) if tmask >> v & 1 else ()) + tail)
        return frozenset(out)

    return set(reach(0))
