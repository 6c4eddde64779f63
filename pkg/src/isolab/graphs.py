"""Immutable bitmask graphs, the graph6 codec, and structural queries.

Vertices are integers ``0..order-1``. A vertex set is a plain ``int`` used
as a bit vector (bit ``v`` set means vertex ``v`` is in the set); that is
the currency of every operation in the package. Adjacency is one machine
word per vertex, which caps the order at 64 and keeps all set algebra
branch-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from isolab import _backend

MAX_ORDER = 64


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bit vector."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bit_list(mask: int) -> list[int]:
    """Unpack a bit vector into a sorted list of vertex indices."""
    out = []
    while mask:
        x = mask & -mask
        out.append(x.bit_length() - 1)
        mask ^= x
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        x = mask & -mask
        yield x.bit_length() - 1
        mask ^= x


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on at most 64 vertices.

    ``adj[v]`` is the open neighborhood of ``v`` as a bit vector. Instances
    are immutable and safe to share across workers.
    """

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside 0..{MAX_ORDER}")
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency bits beyond order at vertex {v}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in iter_bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.order):
            row = self.adj[v] >> (v + 1)
            for u in iter_bits(row << (v + 1)):
                out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


@dataclass(frozen=True)
class CyclePath:
    """Vertex sequence forming a path, or a cycle when ``closed``."""

    vertices: tuple[int, ...]
    closed: bool

    def __len__(self) -> int:
        return len(self.vertices)


# ---------------------------------------------------------------------------
# construction helpers


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * order
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def empty_graph(order: int) -> Graph:
    return Graph(order, (0,) * order)


def path_graph(order: int) -> Graph:
    return from_edges(order, [(i, i + 1) for i in range(order - 1)])


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise ValueError("cycle needs order >= 3")
    edges = [(i, (i + 1) % order) for i in range(order)]
    return from_edges(order, edges)


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph(order, tuple(full ^ (1 << v) for v in range(order)))


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def corona_of_complete(m: int) -> Graph:
    """K_m with one private pendant leaf per clique vertex (order 2m)."""
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    edges += [(i, m + i) for i in range(m)]
    return from_edges(2 * m, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [row << a.order for row in b.adj]
    return Graph(a.order + b.order, tuple(adj))


def relabel(g: Graph, labels: list[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``labels[v]``."""
    adj = [0] * g.order
    for v in range(g.order):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << labels[u]
        adj[labels[v]] = row
    return Graph(g.order, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 codec


def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts the one-byte header for n <= 62 and the four-byte ``~`` header;
    rejects orders beyond 64, bytes outside 63..126, missing or surplus
    body bytes, and nonzero padding bits, each with its byte offset.
    """
    data = text.rstrip("\n").encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c!r} out of graph6 range", i)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("eight-byte order header exceeds supported range", 1)
        if len(data) < 4:
            raise Graph6Error("truncated long-form order header", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= 62:
            raise Graph6Error("long-form header used for order <= 62", 0)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("graph6 body truncated", body_off + len(body))
    if len(body) > need:
        raise Graph6Error("unexpected trailing bytes", body_off + need)
    adj = [0] * n
    bit_index = 0
    for bi, c in enumerate(body):
        val = c - 63
        for k in range(5, -1, -1):
            bit = (val >> k) & 1
            if bit_index < nbits:
                if bit:
                    j = _col_of(bit_index)
                    i = bit_index - j * (j - 1) // 2
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits", body_off + bi)
            bit_index += 1
    return Graph(n, tuple(adj))


def _col_of(bit_index: int) -> int:
    # Bit b belongs to column j where j(j-1)/2 <= b < j(j+1)/2.
    j = int(((8 * bit_index + 1) ** 0.5 - 1) / 2) + 1
    while j * (j - 1) // 2 > bit_index:
        j -= 1
    while (j + 1) * j // 2 <= bit_index:
        j += 1
    return j


def write_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (inverse of parse_graph6)."""
    n = g.order
    out = bytearray(_g6_header(n))
    group = 0
    nbits = 0
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((aj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# neighborhoods and subgraphs


def closed_neighborhood(g: Graph, x: int) -> int:
    """N[x]: the set together with every neighbor of its members."""
    out = x
    for v in iter_bits(x):
        out |= g.adj[v]
    return out


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``mask`` plus the kept old indices in order.

    New vertex ``i`` is old vertex ``keep[i]``; the map is increasing, so
    relative vertex order is preserved.
    """
    keep = tuple(bit_list(mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(keep), tuple(adj)), keep


def delete_closed_neighborhood(g: Graph, x: int) -> tuple[Graph, tuple[int, ...]]:
    """The graph left after removing N[x], with the old-index map."""
    return induced_subgraph(g, g.full_mask & ~closed_neighborhood(g, x))


# ---------------------------------------------------------------------------
# connectivity


def _closure(g: Graph, seed: int, mask: int) -> int:
    comp = seed & mask
    frontier = comp
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp


def masked_components(g: Graph, mask: int) -> list[int]:
    """Components of the subgraph induced on ``mask``, by least vertex."""
    rest = mask
    out = []
    while rest:
        comp = _closure(g, rest & -rest, mask)
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[int]:
    """Vertex sets of the connected components, by least contained vertex."""
    return masked_components(g, g.full_mask)


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return False
    return _closure(g, 1, g.full_mask) == g.full_mask


def cut_vertices(g: Graph) -> int:
    """Vertices whose removal disconnects a connected graph."""
    n = g.order
    if n <= 2:
        return 0
    out = 0
    for v in range(n):
        mask = g.full_mask ^ (1 << v)
        if _closure(g, mask & -mask, mask) != mask:
            out |= 1 << v
    return out


# ---------------------------------------------------------------------------
# cycles


def _cycles_of_length(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    # Simple cycles of exactly this length, rooted at their least vertex,
    # one orientation each (second vertex below last), lexicographic order.
    n = g.order
    adj = g.adj
    path = []

    def extend(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if len(path) == length:
            if (adj[v] >> path[0]) & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in iter_bits(adj[v] & ~used):
            if w < path[0]:
                continue
            path.append(w)
            yield from extend(w, used | (1 << w))
            path.pop()

    for r in range(n):
        path.clear()
        path.append(r)
        yield from extend(r, 1 << r)


def iter_simple_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """All simple cycles, shortest first, deterministic order."""
    for length in range(3, g.order + 1):
        yield from _cycles_of_length(g, length)


def find_cycle_len_mod3(g: Graph) -> Optional[CyclePath]:
    """Shortest simple cycle whose length is a multiple of 3, if any."""
    for length in range(3, g.order + 1, 3):
        for cyc in _cycles_of_length(g, length):
            return CyclePath(cyc, closed=True)
    return None


# ---------------------------------------------------------------------------
# canonical labeling


def canonical_labels(g: Graph) -> list[int]:
    """Canonical position of each vertex (refinement plus backtracking)."""
    labels, _, _ = _backend.canon_form(g.adj, g.order)
    return labels


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labels(g))


def canonical_code(g: Graph) -> bytes:
    """Order-prefixed canonical encoding; equal codes iff isomorphic.

    The code is exactly the graph6 line of the canonically relabeled
    graph, so catalogs sorted by code are sorted graph6 files.
    """
    _, body, _ = _backend.canon_form(g.adj, g.order)
    return _g6_header(g.order) + body
