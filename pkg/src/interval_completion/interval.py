"""Interval recognition with certificate models.

Recognition is Gilmore-Hoffman: a chordal graph whose complement has a
transitive orientation is interval, and that orientation linearly orders the
maximal cliques so every vertex occupies a consecutive run. The orientation
comes from Golumbic's implication-class decomposition. Endpoints are then
normalized to the distinct integers 1..2n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping

from .graph import Edge, Graph, bits, edge, reachable, to_mask


@dataclass(frozen=True)
class IntervalModel:
    """Closed intervals ``intervals[v] == (left, right)`` keyed by original vertex id."""

    intervals: Mapping[int, tuple[int, int]]

    def left(self, v: int) -> int:
        return self.intervals[v][0]

    def right(self, v: int) -> int:
        return self.intervals[v][1]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.intervals)

    def endpoints(self) -> list[int]:
        return sorted(x for lr in self.intervals.values() for x in lr)

    def lines(self) -> list[str]:
        return [f"{v} {l} {r}" for v, (l, r) in sorted(self.intervals.items())]


def _mcs_order(g: Graph, mask: int) -> list[int]:
    """Maximum cardinality search visit order (ties to smallest id)."""
    weight = {v: 0 for v in bits(mask)}
    order = []
    while weight:
        v = max(weight, key=lambda x: (weight[x], -x))
        del weight[v]
        order.append(v)
        for u in bits(g.adj[v] & mask):
            if u in weight:
                weight[u] += 1
    return order


def peo(g: Graph, mask: int | None = None) -> list[int] | None:
    """A perfect elimination ordering of g[mask], or None if it is not chordal."""
    mask = g.all_mask if mask is None else mask
    order = _mcs_order(g, mask)[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in bits(g.adj[v] & mask) if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        rest = to_mask(later) & ~(1 << p)
        if rest & ~g.adj[p]:
            return None
    return order


def is_chordal(g: Graph, mask: int | None = None) -> bool:
    return peo(g, mask) is not None


def maximal_cliques_chordal(g: Graph, mask: int, order: list[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    cands = []
    for v in order:
        c = 1 << v
        for u in bits(g.adj[v] & mask):
            if pos[u] > pos[v]:
                c |= 1 << u
        cands.append(c)
    cands = sorted(set(cands), key=lambda c: -bin(c).count("1"))
    out: list[int] = []
    for c in cands:
        if not any(c & o == c for o in out):
            out.append(c)
    return out


def _complement_orientation(g: Graph, mask: int) -> set[tuple[int, int]] | None:
    """Transitive orientation of the complement of g[mask], or None.

    Golumbic's G-decomposition: repeatedly take an undirected edge of the
    remaining complement, collect its implication class (forcing computed in
    the remaining edge set), orient it, and delete it.
    """
    verts = list(bits(mask))
    remaining: dict[int, int] = {}
    for v in verts:
        remaining[v] = mask & ~g.adj[v] & ~(1 << v)
    orientation: set[tuple[int, int]] = set()
    while True:
        start = None
        for v in verts:
            if remaining[v]:
                start = (v, (remaining[v] & -remaining[v]).bit_length() - 1)
                break
        if start is None:
            return orientation
        cls = {start}
        queue = deque([start])
        while queue:
            a, b = queue.popleft()
            # (a,b) forces (a,b') when bb' is not a remaining complement edge
            for b2 in bits(remaining[a]):
                if b2 != b and not remaining[b] >> b2 & 1 and (a, b2) not in cls:
                    cls.add((a, b2))
                    queue.append((a, b2))
            for a2 in bits(remaining[b]):
                if a2 != a and not remaining[a] >> a2 & 1 and (a2, b) not in cls:
                    cls.add((a2, b))
                    queue.append((a2, b))
        for a, b in cls:
            if (b, a) in cls:
                return None
        for a, b in cls:
            remaining[a] &= ~(1 << b)
            remaining[b] &= ~(1 << a)
        orientation |= cls


def _normalize(spans: dict[int, tuple[int, int]]) -> IntervalModel:
    # at one clique index all left ends precede all right ends
    keys = []
    for v, (a, b) in spans.items():
        keys.append((a, 0, v))
        keys.append((b, 1, v))
    keys.sort()
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for rank, (_, side, v) in enumerate(keys, start=1):
        (right if side else left)[v] = rank
    return IntervalModel({v: (left[v], right[v]) for v in spans})


def recognize(g: Graph, vertices: Iterable[int] | int | None = None) -> IntervalModel | None:
    """Interval model of g (or of the induced subgraph on ``vertices``), else None.

    ``vertices`` may be an iterable of ids or a bitmask.
    """
    if vertices is None:
        mask = g.all_mask
    elif isinstance(vertices, int):
        mask = vertices
    else:
        mask = to_mask(vertices)
    if not mask:
        return IntervalModel({})
    order = peo(g, mask)
    if order is None:
        return None
    orient = _complement_orientation(g, mask)
    if orient is None:
        return None
    cliques = maximal_cliques_chordal(g, mask, order)

    def cmp(a: int, b: int) -> int:
        for x in bits(a & ~b):
            for y in bits(b & ~a & ~g.adj[x]):
                return -1 if (x, y) in orient else 1
        raise AssertionError("distinct maximal cliques must differ by a non-edge")

    cliques.sort(key=cmp_to_key(cmp))
    spans: dict[int, tuple[int, int]] = {}
    for i, c in enumerate(cliques):
        for v in bits(c):
            a, _ = spans.get(v, (i, i))
            spans[v] = (a, i)
    model = _normalize(spans)
    if not verify_model(g, model, mask):
        raise RuntimeError("clique ordering failed to certify a chordal co-comparability graph")
    return model


def is_interval(g: Graph, vertices: Iterable[int] | int | None = None) -> bool:
    return recognize(g, vertices) is not None


def verify_model(g: Graph, model: IntervalModel, vertices: Iterable[int] | int | None = None) -> bool:
    """True iff intervals intersect exactly on the edges of g[vertices]."""
    if vertices is None:
        verts = list(range(g.n))
    elif isinstance(vertices, int):
        verts = list(bits(vertices))
    else:
        verts = sorted(set(vertices))
    if any(v not in model.intervals for v in verts):
        return False
    for v in verts:
        a, b = model.intervals[v]
        if a > b:
            return False
    for i, u in enumerate(verts):
        lu, ru = model.intervals[u]
        for v in verts[i + 1:]:
            lv, rv = model.intervals[v]
            meets = lu <= rv and lv <= ru
            if meets != g.has_edge(u, v):
                return False
    return True


def clique_at(model: IntervalModel, p) -> list[int]:
    """K_p: vertices whose interval contains the point p."""
    return sorted(v for v, (a, b) in model.intervals.items() if a <= p <= b)


def gap_points(model: IntervalModel, lo: int, hi: int) -> list[Fraction]:
    """Half-integer points strictly inside (lo, hi); K_p is constant between endpoints."""
    return [Fraction(2 * x + 1, 2) for x in range(lo, hi)]


def is_separator_certificate(g: Graph, model: IntervalModel, x: Iterable[int], u: int, v: int) -> bool:
    """True iff some point p with I_u, I_v on opposite sides has K_p inside x."""
    xs = set(x)
    if g.has_edge(u, v) or u == v:
        raise ValueError("u and v must be distinct and nonadjacent")
    if u in xs or v in xs:
        raise ValueError("u and v must lie outside the candidate separator")
    mask = to_mask(model.intervals)
    if reachable(g, u, mask) != mask:
        raise ValueError("the modelled graph must be connected")
    if model.right(u) > model.left(v):
        u, v = v, u
    for p in gap_points(model, model.right(u), model.left(v)):
        if set(clique_at(model, p)) <= xs:
            return True
    return False


def best_cut_point(model: IntervalModel, g: Graph, h: int, t: int, module: Iterable[int],
                   avoided: Iterable[Edge]) -> Fraction | None:
    """Point strictly between I_h and I_t minimizing |K_p| with K_p x module avoiding ``avoided``.

    None when every candidate point is blocked. Ties go to the smallest point.
    """
    if g.has_edge(h, t):
        raise ValueError("h and t must be nonadjacent")
    if model.left(h) > model.left(t):
        h, t = t, h
    mod = list(module)
    avoid = set(avoided)
    best = None
    best_size = None
    for p in gap_points(model, model.right(h), model.left(t)):
        kp = clique_at(model, p)
        if best_size is not None and len(kp) >= best_size:
            continue
        if any(edge(w, x) in avoid for w in kp for x in mod if w != x):
            continue
        best, best_size = p, len(kp)
    return best
