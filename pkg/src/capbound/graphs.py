"""Simple undirected graphs on bitset adjacency rows.

A :class:`Graph` stores one Python integer per vertex whose set bits are the
neighbours of that vertex.  Arbitrary-precision integers make the usual
neighbourhood algebra (union, intersection, complement) one-liners, and keep
the breadth-first routines allocation-free.

The module covers everything the bound machinery needs from a graph:

* graph6 parsing and emission (the fixture interchange format),
* a small catalog of named constructions (cycles, complete graphs,
  hypercubes, Kneser graphs, cocktail-party graphs),
* all-pairs hop distances by BFS, graph powers, strong products and
  complements,
* a connectivity check (the bound modules insist on connected input).

Vertices are always ``0..n-1``.  Graphs are immutable value objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, Graph6Error

__all__ = [
    "Graph",
    "DistanceMatrix",
    "parse_graph6",
    "emit_graph6",
    "catalog",
    "cycle",
    "complete",
    "hypercube",
    "kneser",
    "petersen",
    "cocktail_party",
    "distances",
    "diameter",
    "power",
    "strong_product",
    "complement",
    "is_connected",
]

_GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph with bitmask adjacency rows.

    ``rows[i]`` has bit ``j`` set iff ``i`` and ``j`` are adjacent.  The
    representation is symmetric and loop-free by construction everywhere in
    this module; :func:`check_valid` re-verifies that in the test suite.
    """

    n: int
    rows: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph from an iterable of vertex pairs.

        Self-loops are rejected; duplicate edges are harmless.
        """
        if n < 0:
            raise ArgumentError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int):
        """Iterate the neighbours of ``v`` in increasing order."""
        m = self.rows[v]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def edges(self):
        """Iterate edges as pairs ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                yield (u, low.bit_length() - 1)
                m ^= low

    def is_regular(self) -> bool:
        if self.n == 0:
            return True
        d = self.rows[0].bit_count()
        return all(r.bit_count() == d for r in self.rows)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense float64 adjacency matrix."""
        a = np.zeros((self.n, self.n))
        for u in range(self.n):
            for v in self.neighbors(u):
                a[u, v] = 1.0
        return a


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def _g6_read_n(data: bytes):
    """Decode the size prefix; return (n, offset of first data byte)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    b0 = data[0]
    if b0 != 126:
        if not 63 <= b0 <= 125:
            raise Graph6Error(f"invalid size byte {b0}", 0)
        return b0 - 63, 1
    # 126 escape: 3-byte or (with a second 126) 6-byte size.
    if len(data) >= 2 and data[1] == 126:
        chunk, start = data[2:8], 2
    else:
        chunk, start = data[1:4], 1
    if len(chunk) < (6 if start == 2 else 3):
        raise Graph6Error("truncated size prefix", len(data))
    n = 0
    for i, b in enumerate(chunk):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid size byte {b}", start + i)
        n = n << 6 | (b - 63)
    return n, start + len(chunk)


def parse_graph6(text: str) -> Graph:
    """Parse one graph in graph6 format.

    Accepts the optional ``>>graph6<<`` header and trailing whitespace.
    Malformed input raises :class:`~capbound.errors.Graph6Error` carrying the
    byte offset of the first offending byte.
    """
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    data = s.encode("ascii", errors="replace")
    n, off = _g6_read_n(data)
    if n > 100_000:
        raise Graph6Error(f"vertex count {n} exceeds the 100000 cap", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - off != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(data) - off}",
            off + min(nbytes, len(data) - off),
        )
    rows = [0] * n
    bit = 0
    for k in range(nbytes):
        b = data[off + k]
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid data byte {b}", off + k)
        group = b - 63
        for shift in range(5, -1, -1):
            if group >> shift & 1:
                if bit >= nbits:
                    raise Graph6Error("nonzero padding bits", off + k)
                # bit index -> upper-triangle position, column-major
                j = _g6_col(bit)
                i = bit - j * (j - 1) // 2
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def _g6_col(bit: int) -> int:
    # Smallest j with j(j+1)/2 > bit: the column of this upper-triangle bit.
    j = int((2 * bit) ** 0.5)
    while j * (j + 1) // 2 <= bit:
        j += 1
    while j * (j - 1) // 2 > bit:
        j -= 1
    return j


def emit_graph6(g: Graph) -> str:
    """Encode a graph in canonical (minimal-length) graph6 form."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        head = bytes([126, 126] + [((n >> (6 * s)) & 63) + 63 for s in range(5, -1, -1)])
    out = bytearray(head)
    group = 0
    filled = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group, filled = 0, 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# catalog constructions
# ---------------------------------------------------------------------------

def cycle(n: int) -> Graph:
    """The cycle C_n, n >= 3."""
    if n < 3:
        raise ArgumentError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    """The complete graph K_n, n >= 1."""
    if n < 1:
        raise ArgumentError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def hypercube(d: int) -> Graph:
    """The d-dimensional hypercube Q_d on 2^d binary words."""
    if d < 1:
        raise ArgumentError(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    return Graph.from_edges(
        n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b))
    )


def kneser(n: int, k: int) -> Graph:
    """The Kneser graph K(n, k): k-subsets of [n], adjacent iff disjoint."""
    if not 1 <= k < n:
        raise ArgumentError(f"kneser needs 1 <= k < n, got ({n},{k})")
    subsets = [frozenset(c) for c in itertools.combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def petersen() -> Graph:
    """The Petersen graph (the Kneser graph K(5,2))."""
    return kneser(5, 2)


def cocktail_party(m: int) -> Graph:
    """K_{m x 2}: the complete multipartite graph with m parts of size 2.

    Equivalently the complement of a perfect matching on 2m vertices.
    """
    if m < 2:
        raise ArgumentError(f"cocktail_party needs m >= 2, got {m}")
    return complement(Graph.from_edges(2 * m, ((2 * i, 2 * i + 1) for i in range(m))))


_CATALOG = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "hypercube": (hypercube, 1),
    "kneser": (kneser, 2),
    "petersen": (petersen, 0),
    "cocktail_party": (cocktail_party, 1),
}


def catalog(spec: str) -> Graph:
    """Build a catalog graph from a ``name`` or ``name:p1,p2`` string.

    Examples: ``cycle:15``, ``kneser:5,2``, ``petersen``.
    """
    name, _, rest = spec.partition(":")
    name = name.strip()
    if name not in _CATALOG:
        raise ArgumentError(
            f"unknown catalog graph {name!r}; known: {', '.join(sorted(_CATALOG))}"
        )
    fn, arity = _CATALOG[name]
    params = [p for p in rest.split(",") if p.strip()] if rest else []
    if len(params) != arity:
        raise ArgumentError(f"catalog graph {name!r} takes {arity} parameter(s)")
    try:
        args = [int(p) for p in params]
    except ValueError as exc:
        raise ArgumentError(f"non-integer parameter in {spec!r}") from exc
    return fn(*args)


# ---------------------------------------------------------------------------
# metric operations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold the sentinel -1."""

    n: int
    dist: np.ndarray  # (n, n) int64

    def eccentricity(self, v: int) -> int:
        row = self.dist[v]
        if (row < 0).any():
            raise ArgumentError("eccentricity undefined: unreachable vertices")
        return int(row.max())

    def diameter(self) -> int:
        if (self.dist < 0).any():
            raise ArgumentError("diameter undefined: graph is disconnected")
        return int(self.dist.max())


def distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; O(n * (n + m)) bit operations."""
    n = g.n
    d = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = d[s]
        row[s] = 0
        seen = frontier = 1 << s
        level = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.rows[low.bit_length() - 1]
                m ^= low
            nxt &= ~seen
            level += 1
            m = nxt
            while m:
                low = m & -m
                row[low.bit_length() - 1] = level
                m ^= low
            seen |= nxt
            frontier = nxt
    return DistanceMatrix(n, d)


def diameter(g: Graph) -> int:
    """Hop diameter of a connected graph."""
    return distances(g).diameter()


def is_connected(g: Graph) -> bool:
    """True iff the graph has one component (the empty graph counts as connected)."""
    if g.n <= 1:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def power(g: Graph, k: int) -> Graph:
    """The k-th power: same vertices, edges between pairs at hop distance <= k."""
    if k < 1:
        raise ArgumentError(f"power needs k >= 1, got {k}")
    if k == 1:
        return g
    d = distances(g).dist
    rows = []
    for u in range(g.n):
        close = (d[u] <= k) & (d[u] > 0)
        row = 0
        for v in np.flatnonzero(close):
            row |= 1 << int(v)
        rows.append(row)
    return Graph(g.n, tuple(rows))


def strong_product(g: Graph, h: Graph) -> Graph:
    """The strong product G boxtimes H on pairs (u, v), u in G, v in H.

    Distinct pairs are adjacent iff each coordinate is equal or adjacent.
    Vertex (u, v) gets index ``u * h.n + v``.
    """
    nh = h.n
    rows = [0] * (g.n * nh)
    for u in range(g.n):
        gu = [u] + list(g.neighbors(u))
        for v in range(nh):
            idx = u * nh + v
            row = 0
            for u2 in gu:
                base = u2 * nh
                row |= (h.rows[v] | 1 << v) << base
            row &= ~(1 << idx)
            rows[idx] = row
    return Graph(g.n * nh, tuple(rows))


def complement(g: Graph) -> Graph:
    """The complement graph on the same vertices."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~(r | 1 << i) for i, r in enumerate(g.rows)))
