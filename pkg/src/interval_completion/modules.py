"""Simplicial modules: connected modules whose outside neighborhood is a clique."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvariantError
from .graph import Graph, bits, components_of_mask, to_mask
from .obstructions import Frame
from .shallow import shallow_terminals


def _as_mask(m: Iterable[int] | int) -> int:
    return m if isinstance(m, int) else to_mask(m)


def is_module_in(g: Graph, m: int, mask: int) -> bool:
    """True iff every vertex of mask outside m sees all of m or none of it."""
    for x in bits(mask & ~m):
        seen = g.adj[x] & m
        if seen and seen != m:
            return False
    return True


def boundary(g: Graph, m: int, mask: int | None = None) -> int:
    mask = g.all_mask if mask is None else mask
    return g.nbhd_of_set(m) & mask


def is_simplicial_module(g: Graph, m: Iterable[int] | int, mask: int | None = None) -> bool:
    mask = g.all_mask if mask is None else mask
    m = _as_mask(m)
    if not m:
        raise ValueError("module candidate must be nonempty")
    if m & ~mask:
        return False
    if len(components_of_mask(g, m)) != 1:
        return False
    return is_module_in(g, m, mask) and g.is_clique(boundary(g, m, mask))


@dataclass(frozen=True)
class SimplicialModule:
    vertices: tuple[int, ...]
    boundary: tuple[int, ...]

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    @classmethod
    def of(cls, g: Graph, m: int, mask: int | None = None) -> "SimplicialModule":
        return cls(tuple(bits(m)), tuple(bits(boundary(g, m, mask))))


def st_components(g: Graph, mask: int | None = None, st: int | None = None) -> list[SimplicialModule]:
    """Connected components of g[ST], each with its boundary, ordered by minimum vertex.

    Pass ``st`` to reuse an already computed shallow-terminal set.
    """
    mask = g.all_mask if mask is None else mask
    if st is None:
        st = shallow_terminals(g, mask)
    return [SimplicialModule.of(g, c, mask) for c in components_of_mask(g, st)]


def expand_shallow_module(g: Graph, U: int, m_prime: SimplicialModule | int,
                          frames: Mapping[int, Frame], mask: int | None = None) -> tuple[int, list[int]]:
    """Join an ST-component of g - U with every parked component of g[U] it touches.

    ``frames`` maps each parked component (as a bitmask) to its frame. Returns
    the merged set M and the absorbed parked components. Raises InvariantError
    if M is not a simplicial module or misses a frame vertex.
    """
    mask = g.all_mask if mask is None else mask
    mp = m_prime.mask if isinstance(m_prime, SimplicialModule) else m_prime
    touched = g.nbhd_of_set(mp) & U
    members = [c for c in components_of_mask(g, U) if c & touched]
    m = mp
    for c in members:
        m |= c
    for c in members:
        f = frames.get(c)
        if f is None:
            raise InvariantError(f"parked component {list(bits(c))} has no frame")
        missing = [v for v in f.vertices if not m >> v & 1]
        if missing:
            raise InvariantError(f"frame vertices {missing} fall outside the merged module")
    if not is_simplicial_module(g, m, mask):
        raise InvariantError(f"merged set {list(bits(m))} is not a simplicial module")
    return m, members
