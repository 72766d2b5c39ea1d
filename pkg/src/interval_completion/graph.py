"""Simple undirected graphs on dense integer ids, stored as neighbor bitmasks.

Every higher layer works with the original vertex ids of the input graph;
vertex subsets are passed around as Python ints used as bitsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]


class ParseError(ValueError):
    """Malformed graph text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self, mask: int | None = None) -> list[Edge]:
        mask = self.all_mask if mask is None else mask
        out = []
        for u in bits(mask):
            rest = mask & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(rest))
        return out

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def nbhd_of_set(self, mask: int) -> int:
        """Open neighborhood N(S) of a vertex set given as a bitmask."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def validate(self) -> None:
        """Debug pass: symmetric, irreflexive, in range."""
        full = self.all_mask
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has neighbors out of range")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}->{u}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` relabelled 0..k-1.

    Returns the subgraph and ``mapping`` with ``mapping[new] == old``.
    """
    mapping = sorted(set(vertices))
    for v in mapping:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(mapping)}
    adj = []
    for old in mapping:
        a = 0
        for u in bits(g.adj[old]):
            j = index.get(u)
            if j is not None:
                a |= 1 << j
        adj.append(a)
    return Graph(len(mapping), tuple(adj)), mapping


def is_module(g: Graph, m: Iterable[int]) -> bool:
    mask = to_mask(m)
    if not mask:
        raise ValueError("module candidate must be nonempty")
    outside = g.all_mask & ~mask
    for x in bits(outside):
        seen = g.adj[x] & mask
        if seen and seen != mask:
            return False
    return True


def components_of_mask(g: Graph, mask: int) -> list[int]:
    """Connected components of g[mask] as bitmasks, ordered by minimum vertex."""
    out = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in components_of_mask(g, g.all_mask)]


def is_connected(g: Graph, mask: int | None = None) -> bool:
    mask = g.all_mask if mask is None else mask
    return len(components_of_mask(g, mask)) <= 1


def shortest_path(g: Graph, a: int, b: int, allowed: int) -> list[int] | None:
    """BFS path a..b using only vertices in ``allowed`` (a and b are always allowed).

    Neighbors are scanned in increasing id order, so the result is deterministic.
    """
    allowed |= (1 << a) | (1 << b)
    parent = {a: -1}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            path = []
            while v != -1:
                path.append(v)
                v = parent[v]
            return path[::-1]
        for u in bits(g.adj[v] & allowed):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return None


def reachable(g: Graph, a: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``a`` inside ``allowed`` (plus ``a``)."""
    seen = 1 << a
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


# -- text formats -----------------------------------------------------------

def _parse_edge_list(text: str) -> Graph:
    data = text.encode()
    tokens: list[tuple[int, int, bytes]] = []  # (line no, byte offset, token)
    offset = 0
    for lineno, line in enumerate(data.split(b"\n")):
        pos = 0
        for tok in line.split():
            pos = line.index(tok, pos)
            tokens.append((lineno, offset + pos, tok))
            pos += len(tok)
        offset += len(line) + 1
    if not tokens:
        raise ParseError("empty edge list", 0)
    first_line = tokens[0][0]
    header = [t for t in tokens if t[0] == first_line]
    if len(header) != 1:
        raise ParseError("first line must hold only the vertex count", header[-1][1])

    def as_int(tok: tuple[int, int, bytes]) -> int:
        try:
            return int(tok[2])
        except ValueError:
            raise ParseError(f"not an integer: {tok[2].decode(errors='replace')!r}", tok[1]) from None

    n = as_int(header[0])
    if n < 0:
        raise ParseError("negative vertex count", header[0][1])
    by_line: dict[int, list] = {}
    for t in tokens[1:]:
        by_line.setdefault(t[0], []).append(t)
    adj = [0] * n
    for _, toks in sorted(by_line.items()):
        if len(toks) != 2:
            raise ParseError("edge line must hold exactly two vertex ids", toks[0][1])
        u, v = as_int(toks[0]), as_int(toks[1])
        for val, tok in ((u, toks[0]), (v, toks[1])):
            if not 0 <= val < n:
                raise ParseError(f"vertex {val} out of range 0..{n - 1}", tok[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", toks[0][1])
        if adj[u] >> v & 1:
            raise ParseError(f"duplicate edge {u} {v}", toks[0][1])
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _parse_graph6(text: str) -> Graph:
    raw = text.strip().encode()
    start = 0
    if raw.startswith(b">>graph6<<"):
        start = len(b">>graph6<<")
    data = raw[start:]
    if not data:
        raise ParseError("empty graph6 string", start)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside graph6 range 63..126", start + i)
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError("truncated graph6 size prefix", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"expected {need} data bytes, found {len(vals) - pos}", start + min(len(vals), pos + need))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def _serialize_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bitstream = [g.has_edge(i, j) for j in range(1, n) for i in range(j)]
    bitstream += [False] * (-len(bitstream) % 6)
    body = []
    for i in range(0, len(bitstream), 6):
        x = 0
        for b in bitstream[i:i + 6]:
            x = (x << 1) | b
        body.append(x)
    return bytes(c + 63 for c in head + body).decode()


def _norm_format(fmt: str) -> str:
    f = fmt.replace("-", "_").lower()
    if f not in ("graph6", "edge_list"):
        raise ValueError(f"unknown graph format {fmt!r}")
    return f


def parse_graph(text: str, fmt: str = "edge_list") -> Graph:
    if _norm_format(fmt) == "graph6":
        return _parse_graph6(text)
    return _parse_edge_list(text)


def serialize_graph(g: Graph, fmt: str = "edge_list") -> str:
    if _norm_format(fmt) == "graph6":
        return _serialize_graph6(g)
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
