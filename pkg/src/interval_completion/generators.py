"""Seeded graph families: AW templates and cycles, plus perturbed random interval graphs.

Template builders return the graph together with its role labelling so tests
can address vertices by role.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, edge


@dataclass(frozen=True)
class Labeled:
    graph: Graph
    roles: dict[str, int] = field(hash=False)
    base: tuple[int, ...] = ()


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def long_claw() -> Labeled:
    # c=0, v1..v3=1..3, t1..t3=4..6
    roles = {"c": 0, "v1": 1, "v2": 2, "v3": 3, "t1": 4, "t2": 5, "t3": 6}
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
    return Labeled(Graph.from_edges(7, edges), roles)


def whipping_top() -> Labeled:
    roles = {"t1": 0, "c": 1, "u": 2, "v2": 3, "v3": 4, "t2": 5, "t3": 6}
    r = roles
    edges = [(r["t1"], r["c"]), (r["c"], r["v2"]), (r["c"], r["v3"]), (r["c"], r["u"]),
             (r["u"], r["t2"]), (r["u"], r["v2"]), (r["u"], r["v3"]), (r["u"], r["t3"]),
             (r["t2"], r["v2"]), (r["t3"], r["v3"])]
    return Labeled(Graph.from_edges(7, edges), roles)


def dagger_aw(d: int) -> Labeled:
    """One-center AW: s~c, c~b1..bd, path l b1 .. bd r (a net for d <= 3)."""
    if d < 2:
        raise ValueError("a one-center AW needs base length >= 2")
    s, c, l = 0, 1, 2
    base = tuple(range(3, 3 + d))
    r = 3 + d
    edges = [(s, c), (l, base[0]), (base[-1], r)]
    edges += [(base[i], base[i + 1]) for i in range(d - 1)]
    edges += [(c, b) for b in base]
    roles = {"s": s, "c": c, "c1": c, "c2": c, "l": l, "r": r}
    return Labeled(Graph.from_edges(d + 4, edges), roles, base)


def double_dagger_aw(d: int) -> Labeled:
    """Two-center AW: s~c1,c2; c1~c2; c1~l; c2~r; centers ~ all base (a tent for d <= 3)."""
    if d < 1:
        raise ValueError("a two-center AW needs base length >= 1")
    s, c1, c2, l = 0, 1, 2, 3
    base = tuple(range(4, 4 + d))
    r = 4 + d
    edges = [(s, c1), (s, c2), (c1, c2), (c1, l), (c2, r), (l, base[0]), (base[-1], r)]
    edges += [(base[i], base[i + 1]) for i in range(d - 1)]
    edges += [(c, b) for c in (c1, c2) for b in base]
    roles = {"s": s, "c1": c1, "c2": c2, "l": l, "r": r}
    return Labeled(Graph.from_edges(d + 5, edges), roles, base)


def net(d: int) -> Labeled:
    if d not in (2, 3):
        raise ValueError("nets have base length 2 or 3")
    return dagger_aw(d)


def tent(d: int) -> Labeled:
    if d not in (1, 2, 3):
        raise ValueError("tents have base length 1, 2 or 3")
    return double_dagger_aw(d)


def small_aw_templates() -> dict[str, Labeled]:
    return {"long_claw": long_claw(), "whipping_top": whipping_top(), "net2": net(2), "net3": net(3),
            "tent1": tent(1), "tent2": tent(2), "tent3": tent(3)}


def twin_shallow_dagger(d: int = 5, terminal_twins: int = 0) -> Labeled:
    """A one-center AW with two nonadjacent shallow twins s1, s2 on the center.

    {s1, s2} is a disconnected module. ``terminal_twins`` gives l and r that
    many extra false twins, which makes the single edges lc and cr too
    expensive, so every minimum supergraph attaches s1 and s2 to the base
    separately and some of them break the module.
    """
    lab = dagger_aw(d)
    g = lab.graph
    s2 = g.n
    edges = g.edges() + [(lab.roles["c"], s2)]
    n = g.n + 1
    for end in (lab.base[0], lab.base[-1]):
        for _ in range(terminal_twins):
            edges.append((n, end))
            n += 1
    roles = dict(lab.roles)
    roles["s1"] = roles.pop("s")
    roles["s2"] = s2
    return Labeled(Graph.from_edges(n, edges), roles, lab.base)


def random_intervals(n: int, rng: random.Random, span: int | None = None) -> list[tuple[int, int]]:
    span = span or 2 * n
    out = []
    for _ in range(n):
        a = rng.randrange(span)
        b = a + rng.randrange(max(1, span // 3))
        out.append((a, b))
    return out


def interval_graph(intervals: list[tuple[int, int]]) -> Graph:
    n = len(intervals)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]]
    return Graph.from_edges(n, edges)


def random_interval_graph(n: int, rng: random.Random) -> Graph:
    return interval_graph(random_intervals(n, rng))


def perturb(g: Graph, add: int, remove: int, rng: random.Random) -> Graph:
    """Insert ``add`` random non-edges and delete ``remove`` random edges."""
    edges = set(g.edges())
    non = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in edges]
    for e in rng.sample(non, min(add, len(non))):
        edges.add(e)
    present = sorted(edges)
    for e in rng.sample(present, min(remove, len(present))):
        edges.discard(e)
    return Graph.from_edges(g.n, sorted(edges))


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected(n: int, p: float, rng: random.Random, tries: int = 10_000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection sampling."""
    from .graph import is_connected

    for _ in range(tries):
        g = gnp(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {tries} tries")


def plant_module(g: Graph, size: int, rng: random.Random, connected: bool = True) -> tuple[Graph, list[int]]:
    """Rewire g so that a random vertex set of ``size`` becomes a module.

    All members copy the outside neighborhood of the first member. Inside, a
    random spanning tree plus extra edges keeps it connected and not a clique.
    """
    if size < 2 or size > g.n:
        raise ValueError("module size out of range")
    members = sorted(rng.sample(range(g.n), size))
    mset = set(members)
    outside_nb = {u for u in g.neighbors(members[0]) if u not in mset}
    edges = {e for e in g.edges() if not (e[0] in mset or e[1] in mset)}
    for v in members:
        for u in outside_nb:
            edges.add(edge(u, v))
    inside = []
    if connected:
        order = members[:]
        rng.shuffle(order)
        for i in range(1, size):
            inside.append(edge(order[i], order[rng.randrange(i)]))
    for a in range(size):
        for b in range(a + 1, size):
            if rng.random() < 0.3:
                inside.append(edge(members[a], members[b]))
    inside = set(inside)
    if size >= 3 and len(inside) == size * (size - 1) // 2:
        # K_size minus one edge is still connected
        inside.discard(max(inside))
    edges |= inside
    return Graph.from_edges(g.n, sorted(edges)), members


def long_aw_with_noise(d: int, extra: int, rng: random.Random, double: bool = False) -> Graph:
    """A long AW plus ``extra`` random vertices attached to random vertex sets."""
    lab = double_dagger_aw(d) if double else dagger_aw(d)
    g = lab.graph
    edges = g.edges()
    n = g.n
    for i in range(extra):
        v = n + i
        nb = rng.sample(range(v), rng.randint(1, min(3, v)))
        edges += [(u, v) for u in nb]
    return Graph.from_edges(n + extra, edges)


def substitute(outer: Graph, v: int, inner: Graph) -> tuple[Graph, list[int]]:
    """Replace vertex v of ``outer`` by a module inducing ``inner``.

    Inner vertices get ids n_outer..; v itself becomes an isolated vertex
    dropped by relabelling. Returns the graph and the module's vertex ids.
    """
    keep = [u for u in range(outer.n) if u != v]
    ids = {u: i for i, u in enumerate(keep)}
    base = len(keep)
    module = list(range(base, base + inner.n))
    edges = [(ids[a], ids[b]) for a, b in outer.edges() if v not in (a, b)]
    edges += [(base + a, base + b) for a, b in inner.edges()]
    for u in outer.neighbors(v):
        edges += [(ids[u], x) for x in module]
    return Graph.from_edges(base + inner.n, edges), module


def nested_aw(d_out: int = 4, d_in: int = 4, double_out: bool = False, double_in: bool = False) -> tuple[Graph, list[int]]:
    """A long AW whose shallow terminal is replaced by another long AW."""
    outer = double_dagger_aw(d_out) if double_out else dagger_aw(d_out)
    inner = double_dagger_aw(d_in) if double_in else dagger_aw(d_in)
    return substitute(outer.graph, outer.roles["s"], inner.graph)
