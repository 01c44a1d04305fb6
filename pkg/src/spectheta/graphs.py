"""Bitset-backed simple undirected graphs and their basic queries.

Vertices are the ints 0..n-1.  Each adjacency row is a Python int used as
a bitset: bit v of row u is set iff uv is an edge.  Arbitrary-precision
ints make the same representation serve the single-word fast path
(n <= 64) and the larger constructions, up to a hard cap of MAX_VERTICES.

Graphs are immutable after construction; "mutators" return new instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_VERTICES = 512

_G6_TEXT_PREFIX = ">>graph6<<"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Set of vertex indices backed by a bitmask.

    A VertexSet is always interpreted relative to some graph's vertex
    range 0..n-1; operations taking a Graph validate that.
    """

    bits: int = 0

    @classmethod
    def from_iterable(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError("negative vertex index")
            mask |= 1 << v
        return cls(mask)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.bits & other.bits == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return "VertexSet({%s})" % ", ".join(str(v) for v in self)


class Graph:
    """Immutable simple graph with a cached edge count."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        total = 0
        for u, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
            total += row.bit_count()
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                r ^= low
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric edge {u}->{v}")
        self.n = n
        self.adj = rows
        self.m = total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on n vertices; duplicate edges collapse."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for k in _iter_bits(row):
                yield (u, u + 1 + k)

    def vertex_set(self) -> VertexSet:
        return VertexSet((1 << self.n) - 1)

    def with_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        if u == v:
            raise ValueError("loop edge")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range for n={g.n}")


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s.bits & ~((1 << g.n) - 1):
        raise ValueError("vertex set has members outside the graph")


def neighborhood(g: Graph, u: int) -> VertexSet:
    _check_vertex(g, u)
    return VertexSet(g.adj[u])


def closed_neighborhood(g: Graph, u: int) -> VertexSet:
    _check_vertex(g, u)
    return VertexSet(g.adj[u] | (1 << u))


def second_neighborhood(g: Graph, u: int) -> VertexSet:
    """Vertices at distance exactly two from u."""
    _check_vertex(g, u)
    closed = g.adj[u] | (1 << u)
    reach = 0
    for v in _iter_bits(g.adj[u]):
        reach |= g.adj[v]
    return VertexSet(reach & ~closed)


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """G[S] with vertices relabeled 0..|S|-1 in ascending original order.

    Returns (subgraph, index_map) where index_map[i] is the original label
    of the subgraph's vertex i.
    """
    _check_subset(g, s)
    order = list(s)
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w in _iter_bits(g.adj[v] & s.bits):
            row |= 1 << pos[w]
        rows.append(row)
    return Graph(len(order), rows), tuple(order)


def edge_count_within(g: Graph, s: VertexSet) -> int:
    """e(S): edges with both endpoints in S, each counted once."""
    _check_subset(g, s)
    total = 0
    for v in _iter_bits(s.bits):
        total += (g.adj[v] & s.bits).bit_count()
    return total // 2


def edge_count_between(g: Graph, s: VertexSet, t: VertexSet) -> int:
    """e(S,T): edges with one endpoint in S and the other in T.

    S and T may overlap; an edge inside the overlap is counted once,
    so e(S,S) == e(S).
    """
    _check_subset(g, s)
    _check_subset(g, t)
    total = 0
    for v in _iter_bits(s.bits):
        total += (g.adj[v] & t.bits).bit_count()
    both = s.bits & t.bits
    inner = 0
    for v in _iter_bits(both):
        inner += (g.adj[v] & both).bit_count()
    return total - inner // 2


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by smallest contained vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(VertexSet(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class Bipartition:
    left: VertexSet
    right: VertexSet


@dataclass(frozen=True)
class OddCycle:
    vertices: tuple[int, ...]


def is_bipartite(g: Graph) -> Union[Bipartition, OddCycle]:
    """Two-coloring when one exists, otherwise an odd cycle witness."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v in _iter_bits(g.adj[u]):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return OddCycle(_odd_cycle(parent, u, v))
    left = sum(1 << v for v in range(g.n) if color[v] == 0)
    right = sum(1 << v for v in range(g.n) if color[v] == 1)
    return Bipartition(VertexSet(left), VertexSet(right))


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    # walk both ancestor chains to their meeting point
    au, av = [u], [v]
    su, sv = {u}, {v}
    while True:
        if parent[au[-1]] != -1:
            au.append(parent[au[-1]])
            su.add(au[-1])
            if au[-1] in sv:
                break
        if parent[av[-1]] != -1:
            av.append(parent[av[-1]])
            sv.add(av[-1])
            if av[-1] in su:
                break
    meet = au[-1] if au[-1] in sv else av[-1]
    pu = au[: au.index(meet) + 1]
    pv = av[: av.index(meet)]
    return tuple(pu[::-1] + pv)


# graph6 serialization (header byte 63+n for n <= 62, column-major
# upper-triangle payload in 6-bit chunks offset by 63)

def _graph6_header(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    raise ValueError("graph6 sizes beyond 258047 unsupported")


def _graph6_payload(n: int, rows: Sequence[int]) -> str:
    chars = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        rowj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rowj >> i) & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chars.append(chr(63 + acc))
    return "".join(chars)


def to_graph6(g: Graph) -> str:
    return _graph6_header(g.n) + _graph6_payload(g.n, g.adj)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_TEXT_PREFIX):
        s = s[len(_G6_TEXT_PREFIX):]
    if not s:
        raise ValueError("empty graph6 text")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"graph6 character {ch!r} out of range")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 sizes beyond 258047 unsupported")
        if len(s) < 4:
            raise ValueError("malformed graph6 header")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    need = n * (n - 1) // 2
    nchars = (need + 5) // 6
    if len(body) < nchars:
        raise ValueError("truncated graph6 payload")
    if len(body) > nchars:
        raise ValueError("unexpected trailing characters")
    rows = [0] * n
    i, j = 0, 1
    k = 0
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k < need:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    j += 1
                    i = 0
                k += 1
            elif bit:
                raise ValueError("nonzero padding bits")
    return Graph(n, rows)
