"""Bounded search for interval completion.

A node holds (g, k, U, X, A): the current graph, the remaining budget, a set U
of parked shallow terminals, one frozen frame per connected component of g[U],
and a set A of avoided non-edges. Phase I alternates two steps on g - U:

* reduce: branch on the minimal fills of a hole or the edges of a small AW;
* long AW: take a component of the shallow terminals, absorb the parked
  components it touches, then branch six ways (three frame edges, h x M,
  t x M, or park M with its frame frozen).

Once g - U is interval, Phase II places each parked component at the
cheapest clique between its frame's h and t.

Every node works on g[vertices] so recursion into a module keeps the original
vertex ids. The measure k - |U| drops on every branch.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field, replace
from typing import Iterable

from .errors import InvariantError
from .graph import Edge, Graph, bits, components_of_mask, edge, popcount, shortest_path
from .interval import IntervalModel, best_cut_point, clique_at, is_interval, recognize
from .modules import expand_shallow_module, is_simplicial_module
from .obstructions import (AsteroidalWitness, Frame, Hole, branch_edges, find_small_obstruction,
                           minimal_hole_fills)
from .shallow import common_base_neighbor, locally_minimal_aw, shallow_witnesses


@dataclass(frozen=True)
class Parked:
    """A connected component of g[U] with its frozen frame.

    ``boundary`` is N(M) at parking time; it must not change while M is parked.
    """

    mask: int
    frame: Frame
    boundary: int


@dataclass(frozen=True)
class SearchState:
    g: Graph
    k: int
    vertices: int
    U: int = 0
    parked: tuple[Parked, ...] = ()
    A: frozenset[Edge] = frozenset()
    inserted: frozenset[Edge] = frozenset()

    @classmethod
    def root(cls, g: Graph, k: int, vertices: int | None = None) -> "SearchState":
        return cls(g, k, g.all_mask if vertices is None else vertices)

    @property
    def X(self) -> dict[int, Frame]:
        """Frames keyed by the minimum vertex of their component."""
        return {(p.mask & -p.mask).bit_length() - 1: p.frame for p in self.parked}

    @property
    def measure(self) -> int:
        return self.k - popcount(self.U)

    def insert(self, edges: Iterable[Edge]) -> "SearchState":
        new = frozenset(e for e in edges if not self.g.has_edge(*e))
        return replace(self, g=self.g.add_edges(new), k=self.k - len(new), inserted=self.inserted | new)


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    depth: int = 0
    hole_branches: int = 0
    small_aw_branches: int = 0
    long_aw_branches: int = 0
    common_neighbor_steps: int = 0
    module_calls: int = 0
    absorbed: int = 0
    merges: int = 0
    pruned: int = 0
    ms: float = 0.0

    def add(self, other: "SearchStats") -> None:
        for name in self.__dataclass_fields__:
            if name == "depth":
                self.depth = max(self.depth, other.depth)
            else:
                setattr(self, name, getattr(self, name) + getattr(other, name))

    def as_dict(self) -> dict:
        return {name: (round(v, 3) if isinstance(v, float) else v) for name, v in self.__dict__.items()}


@dataclass
class Completion:
    edges: frozenset[Edge]
    model: IntervalModel
    stats: SearchStats

    @property
    def size(self) -> int:
        return len(self.edges)

    def as_dict(self, timing: bool = True) -> dict:
        stats = {"nodes": self.stats.nodes, "leaves": self.stats.leaves, "depth": self.stats.depth}
        if timing:
            stats["ms"] = round(self.stats.ms, 3)
        return {"answer": "yes", "k_used": self.size,
                "inserted_edges": [list(e) for e in sorted(self.edges)], "stats": stats}


@dataclass(frozen=True)
class SolverConfig:
    debug: bool = False       # check invariants at every node, raise on violation
    parallel: bool = False    # explore root children in worker processes
    workers: int | None = None
    reverse_children: bool = False  # explore branches last-first; the answer must not change


def check_invariants(st: SearchState) -> list[str]:
    """Violations of the executable node conditions C2-C7, one message each."""
    g, V = st.g, st.vertices
    out = []
    if any(g.has_edge(*e) for e in st.A):
        out.append("monotone: an avoided edge is present in the graph")
    if st.U & ~V:
        out.append("U: parked vertices outside the instance")
    comps = components_of_mask(g, st.U)
    by_mask = {p.mask: p for p in st.parked}
    if set(by_mask) != set(comps):
        out.append("C2: parked components and frames do not match")
    for c in comps:
        p = by_mask.get(c)
        name = list(bits(c))
        if not is_simplicial_module(g, c, V):
            out.append(f"C2: {name} is not a simplicial module")
        if not is_interval(g, c):
            out.append(f"C2: {name} does not induce an interval graph")
        if p is None:
            out.append(f"C2: {name} has no frame")
            continue
        f = p.frame
        if g.nbhd_of_set(c) & V != p.boundary & V:
            out.append(f"C3: an edge was inserted between {name} and the rest while parked")
        need = {edge(f.l, f.c2), edge(f.c1, f.r), edge(f.h, f.t)}
        need |= {edge(x, f.h) for x in bits(c)} | {edge(x, f.t) for x in bits(c)}
        if not need <= st.A:
            out.append(f"C4: frame exclusions of {name} missing from A")
        inside = [v for v in f.vertices if c >> v & 1]
        if inside != [f.s]:
            out.append(f"C5: frame of {name} meets it in {inside}, expected only s")
        if any(st.U >> v & 1 for v in (f.c1, f.c2, f.h, f.t)):
            out.append(f"C5: a frame center or h/t of {name} is parked")
        for v in bits(g.nbhd_of_set(c) & V & ~st.U):
            if not (g.has_edge(v, f.h) and g.has_edge(v, f.t)):
                out.append(f"C6: neighbor {v} of {name} misses h or t")
                break
        if shortest_path(g, f.h, f.t, V & ~g.nbhd_of_set(c)) is None:
            out.append(f"C7: no h-t path avoiding N({name})")
    return out


class Solver:
    def __init__(self, config: SolverConfig | None = None):
        self.config = config or SolverConfig()
        self.stats = SearchStats()

    # -- driver -----------------------------------------------------------

    def search(self, st: SearchState, depth: int = 0) -> SearchState | None:
        """Depth-first search from st; the first leaf within budget, or None."""
        self.stats.nodes += 1
        self.stats.depth = max(self.stats.depth, depth)
        kind, payload = self.expand(st, depth)
        if kind == "done":
            self.stats.leaves += 1
            return payload
        if not payload:
            self.stats.leaves += 1
            return None
        children = payload[::-1] if self.config.reverse_children else payload
        for child in children:
            if self.config.debug:
                self._check_child(st, child)
            found = self.search(child, depth + 1)
            if found is not None:
                return found
        return None

    def expand(self, st: SearchState, depth: int = 0) -> tuple[str, object]:
        """Run the non-branching steps; ("done", state|None) or ("branch", children)."""
        while True:
            if self.config.debug:
                bad = check_invariants(st)
                if bad:
                    raise InvariantError("; ".join(bad))
            if st.k < popcount(st.U):
                self.stats.pruned += 1
                return "done", None
            rest = st.vertices & ~st.U
            obs = find_small_obstruction(st.g, rest)
            if obs is not None:
                return "branch", self.procedure1_children(st, obs)
            if is_interval(st.g, rest):
                return "done", self.phase2_merge(st)
            kind, payload = self.procedure2(st, depth)
            if kind == "continue":
                st = payload
                continue
            return kind, payload

    # -- phase I ----------------------------------------------------------

    def procedure1_children(self, st: SearchState, obs: Hole | AsteroidalWitness) -> list[SearchState]:
        out = []
        if isinstance(obs, Hole):
            self.stats.hole_branches += 1
            for fill in minimal_hole_fills(obs):
                if len(fill) > st.k or fill & st.A:
                    continue
                out.append(st.insert(fill))
        else:
            self.stats.small_aw_branches += 1
            if st.k >= 1:
                for e in sorted(branch_edges(obs)):
                    if e not in st.A:
                        out.append(st.insert([e]))
        return out

    def procedure2(self, st: SearchState, depth: int) -> tuple[str, object]:
        g = st.g
        rest = st.vertices & ~st.U
        witnesses = shallow_witnesses(g, rest, check=False)
        st_mask = 0
        for s in witnesses:
            st_mask |= 1 << s
        m_prime = components_of_mask(g, st_mask)[0]
        frames = {p.mask: p.frame for p in st.parked}
        touched = [c for c in components_of_mask(g, st.U) if c & g.nbhd_of_set(m_prime)]

        for c in touched:
            x = common_base_neighbor(g, frames[c], st.vertices)
            if x is None:
                continue
            self.stats.common_neighbor_steps += 1
            add = {edge(x, v) for v in bits(c)}
            if add & st.A:
                return "done", None
            nxt = st.insert(add)
            nxt = replace(nxt, U=st.U & ~c, parked=tuple(p for p in st.parked if p.mask != c))
            return "continue", nxt

        m, members = expand_shallow_module(g, st.U, m_prime, frames, st.vertices)
        if members or not is_interval(g, m):
            self.stats.module_calls += 1
            self.stats.absorbed += len(members)
            sub = self.minimum_within(st, m, members, depth)
            if sub is None:
                return "done", None
            nxt = st.insert(sub)
            nxt = replace(nxt, U=st.U & ~m, parked=tuple(p for p in st.parked if not p.mask & m))
            return "continue", nxt

        self.stats.long_aw_branches += 1
        s = (m & -m).bit_length() - 1
        w = locally_minimal_aw(g, s, st_mask, rest)
        f = w.frame
        size = popcount(m)
        children = []
        singles = [edge(f.l, f.c2), edge(f.c1, f.r), edge(f.h, f.t)]
        if st.k >= 1:
            children += [st.insert([e]) for e in singles if e not in st.A]
        if st.k >= size:
            for y in (f.h, f.t):
                bulk = {edge(y, x) for x in bits(m)}
                if not bulk & st.A:
                    children.append(st.insert(bulk))
        avoid = set(singles) | {edge(x, f.h) for x in bits(m)} | {edge(x, f.t) for x in bits(m)}
        park = Parked(m, f, g.nbhd_of_set(m) & st.vertices)
        children.append(replace(st, U=st.U | m, parked=st.parked + (park,), A=st.A | avoid))
        return "branch", children

    def minimum_within(self, st: SearchState, m: int, members: list[int], depth: int) -> frozenset[Edge] | None:
        """Minimum completion of g[m] respecting the parked members, by iterative deepening."""
        parked = tuple(p for p in st.parked if p.mask in members)
        avoided = frozenset(e for e in st.A if m >> e[0] & 1 and m >> e[1] & 1)
        u = st.U & m
        for j in range(popcount(u), st.k + 1):
            sub = SearchState(st.g, j, m, u, parked, avoided)
            found = self.search(sub, depth + 1)
            if found is not None:
                return found.inserted
        return None

    # -- phase II ---------------------------------------------------------

    def phase2_merge(self, st: SearchState) -> SearchState | None:
        """Attach each parked component at the cheapest admissible clique between h and t."""
        g = st.g
        rest = st.vertices & ~st.U
        model = recognize(g, rest)
        frames = {p.mask: p.frame for p in st.parked}
        added: set[Edge] = set()
        for c in components_of_mask(g, st.U):
            self.stats.merges += 1
            f = frames[c]
            ell = best_cut_point(model, g, f.h, f.t, bits(c), st.A)
            if ell is None:
                return None
            for w in clique_at(model, ell):
                for v in bits(c):
                    if not g.has_edge(v, w):
                        added.add(edge(v, w))
        if len(added) > st.k:
            return None
        done = replace(st.insert(added), U=0, parked=())
        if not is_interval(done.g, st.vertices):
            if self.config.debug:
                raise InvariantError("merging parked components did not give an interval graph")
            return None
        return done

    def _check_child(self, parent: SearchState, child: SearchState) -> None:
        pe = set(parent.g.edges())
        ce = set(child.g.edges())
        if not pe <= ce or not parent.A <= child.A:
            raise InvariantError("monotone: graph or avoided set shrank")
        if ce & child.A:
            raise InvariantError("monotone: avoided edge inserted")
        if len(ce) - len(pe) != parent.k - child.k:
            raise InvariantError("budget: ||g|| + k changed")
        if child.measure >= parent.measure:
            raise InvariantError("measure did not decrease on a branch")


# -- public entry points ----------------------------------------------------

def _search_root_child(child: SearchState, config: SolverConfig) -> tuple[SearchState | None, SearchStats]:
    solver = Solver(replace(config, parallel=False))
    found = solver.search(child, 1)
    return found, solver.stats


def solve_state(st: SearchState, config: SolverConfig | None = None,
                stats: SearchStats | None = None) -> SearchState | None:
    """Search from an arbitrary state; the final state (U empty) or None."""
    config = config or SolverConfig()
    solver = Solver(config)
    try:
        if not config.parallel:
            return solver.search(st)
        solver.stats.nodes += 1
        kind, payload = solver.expand(st)
        if kind == "done":
            solver.stats.leaves += 1
            return payload
        children = payload
        if not children:
            solver.stats.leaves += 1
            return None
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = {pool.submit(_search_root_child, c, config): i for i, c in enumerate(children)}
            pending = set(futures)
            while pending:
                finished, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in finished:
                    found, sub = fut.result()
                    solver.stats.add(sub)
                    if found is not None:
                        for rest in pending:
                            rest.cancel()
                        return found
        return None
    finally:
        if stats is not None:
            stats.add(solver.stats)


def _component_minimum(g: Graph, comp: int, kmax: int, config: SolverConfig,
                       stats: SearchStats) -> frozenset[Edge] | None:
    """Minimum completion of one component by iterative deepening, or None if above kmax."""
    if is_interval(g, comp):
        return frozenset()
    for j in range(1, kmax + 1):
        found = solve_state(SearchState.root(g, j, comp), config, stats)
        if found is not None:
            return found.inserted
    return None


def solve(g: Graph, k: int, config: SolverConfig | None = None) -> Completion | None:
    """At most k insertions making g interval, or None.

    Connected graphs are searched directly with budget k. Disconnected graphs
    are solved per component to optimality and the minima summed.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    config = config or SolverConfig()
    t0 = time.perf_counter()
    stats = SearchStats()
    comps = components_of_mask(g, g.all_mask)
    edges: frozenset[Edge] | None
    if k == 0 or len(comps) <= 1:
        if is_interval(g):
            edges = frozenset()
            stats.nodes = stats.leaves = 1
        elif k == 0:
            edges = None
            stats.nodes = stats.leaves = 1
        else:
            found = solve_state(SearchState.root(g, k), config, stats)
            edges = None if found is None else found.inserted
    else:
        edges = frozenset()
        left = k
        for comp in comps:
            part = _component_minimum(g, comp, left, config, stats)
            if part is None:
                edges = None
                break
            edges |= part
            left -= len(part)
    stats.ms = (time.perf_counter() - t0) * 1000
    if edges is None:
        return None
    return _finish(g, edges, stats, k, config)


def _finish(g: Graph, edges: frozenset[Edge], stats: SearchStats, k: int | None,
            config: SolverConfig) -> Completion:
    model = recognize(g.add_edges(edges))
    ok = model is not None and (k is None or len(edges) <= k) and not any(g.has_edge(*e) for e in edges)
    if not ok:
        raise InvariantError("solver returned an invalid completion")
    return Completion(edges, model, stats)


def minimum_completion(g: Graph, config: SolverConfig | None = None) -> Completion:
    """A minimum completion: each component by iterative deepening on k."""
    config = config or SolverConfig()
    t0 = time.perf_counter()
    stats = SearchStats()
    edges: frozenset[Edge] = frozenset()
    for comp in components_of_mask(g, g.all_mask):
        part = _component_minimum(g, comp, len(g.non_edges(comp)), config, stats)
        if part is None:
            raise InvariantError("no completion found within the trivial budget")
        edges |= part
    stats.ms = (time.perf_counter() - t0) * 1000
    return _finish(g, edges, stats, None, config)
