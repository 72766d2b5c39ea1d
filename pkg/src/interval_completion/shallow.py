"""Shallow terminals of reduced graphs and the witnesses the search branches on.

A graph is reduced when it has no hole and no small AW, so every AW left is
a long one with a well-defined shallow terminal s (the terminal off the long
base path). All functions take a ``mask`` selecting the induced subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotReduced, ObstructionError
from .graph import Graph, bits, to_mask
from .obstructions import (AsteroidalWitness, Frame, classify_aw, find_small_obstruction,
                           minimal_at_witness, triple_witnesses)


def shallow_witnesses(g: Graph, mask: int | None = None, check: bool = True) -> dict[int, AsteroidalWitness]:
    """Map each shallow terminal of g[mask] to the first AW found for it.

    Every AT triple is scanned; the witness of each triple names its shallow
    terminal. Raises NotReduced if ``check`` and the graph is not reduced.
    """
    mask = g.all_mask if mask is None else mask
    if check and find_small_obstruction(g, mask) is not None:
        raise NotReduced("graph has a hole or a small asteroidal witness")
    found: dict[int, AsteroidalWitness] = {}
    for triple, w in triple_witnesses(g, mask):
        if not w.has_shallow or not w.is_long:
            raise NotReduced(f"triple {triple} is witnessed by a small AW")
        found.setdefault(w.s, w)
    return dict(sorted(found.items()))


def shallow_terminals(g: Graph, mask: int | None = None, check: bool = True) -> int:
    """ST(g[mask]) as a bitmask."""
    return to_mask(shallow_witnesses(g, mask, check))


class Category(str, Enum):
    FULL = "full"
    PARTIAL = "partial"
    NONE = "none"


@dataclass(frozen=True)
class NeighborCategory:
    category: Category
    witness: AsteroidalWitness | None = None  # replacement AW for partial / none


def _centers(w: AsteroidalWitness) -> set[int]:
    return {w.roles["c1"], w.roles["c2"]}


def neighbor_category(g: Graph, x: int, w: AsteroidalWitness, mask: int | None = None) -> NeighborCategory:
    """Classify a neighbor x of the shallow terminal by its adjacency to the base.

    Partial returns an AW for the same shallow terminal that uses x as a
    center over a proper sub-path of the base; none returns the AW with x as
    shallow terminal.
    """
    mask = g.all_mask if mask is None else mask
    s = w.s
    if not g.has_edge(x, s):
        raise ObstructionError(f"{x} is not adjacent to the shallow terminal {s}")
    if not w.has_shallow:
        raise ObstructionError(f"{w.kind.value} has no shallow terminal")
    if x in _centers(w):
        return NeighborCategory(Category.FULL)
    hits = [g.has_edge(x, b) for b in w.base]
    if all(hits):
        return NeighborCategory(Category.FULL)
    if not any(hits):
        if g.has_edge(x, w.l) or g.has_edge(x, w.r):
            raise NotReduced(f"{x} sees a base terminal but no base vertex")
        wmask = to_mask(w.vertices) & ~(1 << s) | (1 << x)
        new = classify_aw(g, wmask, (x, w.l, w.r))
        if new is None:
            raise NotReduced(f"replacing {s} by {x} does not give an asteroidal witness")
        return NeighborCategory(Category.NONE, new)

    ext = [w.l, *w.base, w.r]
    if g.has_edge(x, ext[-1]):
        ext.reverse()
    if g.has_edge(x, ext[-1]):
        raise NotReduced(f"{x} sees both base terminals but not the whole base")
    p = next(i for i, v in enumerate(ext) if g.has_edge(x, v))
    q = next(i for i in range(p + 1, len(ext)) if not g.has_edge(x, ext[i]))
    lo = max(p - 1, 0)
    cand = (1 << s) | (1 << x) | to_mask(ext[lo:q + 1]) | to_mask(_centers(w))
    triple = (s, ext[lo], ext[q])
    new = None
    try:
        sub = minimal_at_witness(g, triple, cand & mask)
        new = classify_aw(g, sub, triple)
    except ObstructionError:
        pass
    if new is None or new.s != s or x not in _centers(new) or not set(new.base) < set(w.base):
        raise NotReduced(f"partial neighbor {x} did not yield a shorter witness")
    return NeighborCategory(Category.PARTIAL, new)


def locally_minimal_aw(g: Graph, s: int, st: int | None = None, mask: int | None = None,
                       trace: list | None = None) -> AsteroidalWitness:
    """An AW with shallow terminal s whose base is completely connected to N(s) minus ST.

    Starts from any AW for s and descends through partial neighbors, each step
    strictly shortening the base. ``trace`` collects the successive witnesses.
    """
    mask = g.all_mask if mask is None else mask
    witnesses = shallow_witnesses(g, mask, check=False)
    if st is None:
        st = to_mask(witnesses)
    if s not in witnesses or not st >> s & 1:
        raise ObstructionError(f"{s} is not a shallow terminal")
    w = witnesses[s]
    if trace is not None:
        trace.append(w)
    while True:
        for x in bits(g.adj[s] & mask & ~st):
            cat = neighbor_category(g, x, w, mask)
            if cat.category == Category.PARTIAL:
                w = cat.witness
                if trace is not None:
                    trace.append(w)
                break
            if cat.category == Category.NONE:
                raise NotReduced(f"neighbor {x} of {s} is a shallow terminal outside ST")
        else:
            return w


def common_base_neighbor(g: Graph, f: Frame, mask: int | None = None) -> int | None:
    """Smallest x adjacent to both h and t but not to s (None if there is none)."""
    mask = g.all_mask if mask is None else mask
    cands = g.adj[f.h] & g.adj[f.t] & mask & ~g.closed_nbhd(f.s)
    return (cands & -cands).bit_length() - 1 if cands else None
