"""Immutable bitset-backed graphs, vertex sets, and edge/component counters.

Vertices are labelled 0..n-1 and each adjacency row is a Python int used as a
bitmask, so set intersections and edge counts reduce to ``&`` and
``int.bit_count``.  Everything here is pure and hashable; graphs never mutate
after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EndpointOutOfRange,
    MalformedEdgeList,
    MalformedGraph6,
    SelfLoop,
    TooManyVertices,
)

# Hard cap on the ambient vertex count.  The exact-toughness search is
# hopeless far below this anyway; the cap keeps every bitmask in one or two
# machine words on CPython.
MAX_VERTICES = 64

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True, order=True)
class VertexSet:
    """A subset of 0..n-1 for a fixed ambient vertex count ``n``."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise TooManyVertices(f"ambient size {self.n} outside 0..{MAX_VERTICES}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits 0x{self.bits:x} not contained in 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise EndpointOutOfRange(f"vertex {v} outside 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_ambient(other)
        return VertexSet(self.n, self.bits | other.bits)

    __or__ = union

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_ambient(other)
        return VertexSet(self.n, self.bits & other.bits)

    __and__ = intersection

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_ambient(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    __sub__ = difference

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.bits & (1 << self.n) - 1)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_ambient(other)
        return not self.bits & other.bits

    def _check_ambient(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex adjacency bitmasks."""

    n: int
    adj: tuple[int, ...]
    m: int

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adj[u] >> v & 1
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


@dataclass(frozen=True)
class NotRegular:
    """Witness that a graph is not regular: a vertex with a deviating degree."""

    vertex: int
    degree: int


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs.  Duplicate edges collapse silently."""
    if n < 0 or n > MAX_VERTICES:
        raise TooManyVertices(f"n={n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    m = sum(row.bit_count() for row in adj) // 2
    return Graph(n, tuple(adj), m)


def components(g: Graph, removed: VertexSet) -> list[VertexSet]:
    """Connected components of the induced subgraph on V minus ``removed``.

    Sorted by size ascending, ties broken by smallest contained vertex, so
    downstream constructions are deterministic.
    """
    if removed.n != g.n:
        raise ValueError("removed set has wrong ambient size")
    avail = ~removed.bits & (1 << g.n) - 1
    comps = _component_masks(g.adj, avail)
    comps.sort(key=lambda c: (c.bit_count(), c & -c))
    return [VertexSet(g.n, c) for c in comps]


def _component_masks(adj: tuple[int, ...], avail: int) -> list[int]:
    comps = []
    rem = avail
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def count_components(g: Graph, removed_bits: int) -> int:
    """Number of components after deleting the vertices in ``removed_bits``.

    Mask-level fast path for the exhaustive searches.
    """
    return len(_component_masks(g.adj, ~removed_bits & (1 << g.n) - 1))


def e_between(g: Graph, a: VertexSet, b: VertexSet) -> int:
    """Edge incidences with one end in ``a`` and the other in ``b``.

    Edges with both ends in the intersection count twice; e(A,A) is twice the
    number of edges inside A.
    """
    if a.n != g.n or b.n != g.n:
        raise ValueError("vertex set has wrong ambient size")
    total = 0
    bits = a.bits
    while bits:
        low = bits & -bits
        total += (g.adj[low.bit_length() - 1] & b.bits).bit_count()
        bits ^= low
    return total


def e_within(g: Graph, a: VertexSet) -> int:
    """Number of edges with both ends in ``a``."""
    return e_between(g, a, a) // 2


def regularity(g: Graph) -> int | NotRegular:
    """Common degree d if the graph is regular, else a violating vertex."""
    if g.n == 0:
        return 0
    d = g.degree(0)
    for v in range(1, g.n):
        dv = g.degree(v)
        if dv != d:
            return NotRegular(v, dv)
    return d


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(_component_masks(g.adj, (1 << g.n) - 1)) == 1


# ---------------------------------------------------------------------------
# graph6


def emit_graph6(g: Graph) -> str:
    """Encode as a single graph6 line (standard 6-bit upper-triangle format)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(chr((n >> s & 0x3F) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr((bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
             | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]) + 63)
        for k in range(0, len(bits), 6)
    )
    return head + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; the optional ``>>graph6<<`` header is stripped."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise MalformedGraph6("empty graph6 line")
    if any(not 63 <= ord(ch) <= 126 for ch in line):
        raise MalformedGraph6(f"character outside graph6 range in {line!r}")
    if ord(line[0]) == 126:
        if len(line) >= 2 and ord(line[1]) == 126:
            raise TooManyVertices("graph6 36-bit size form exceeds the vertex cap")
        if len(line) < 4:
            raise MalformedGraph6("truncated graph6 size field")
        n = 0
        for ch in line[1:4]:
            n = n << 6 | ord(ch) - 63
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n > MAX_VERTICES:
        raise TooManyVertices(f"graph6 line encodes n={n} > {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"graph6 body length {len(body)} wrong for n={n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> s & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedEdgeList("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedEdgeList(f"bad header line {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise MalformedEdgeList(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MalformedEdgeList(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedEdgeList(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedEdgeList(f"non-integer edge line {ln!r}") from exc
    return from_edge_list(n, edges)
