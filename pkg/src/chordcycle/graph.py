"""Immutable simple graphs on dense vertex labels, with graph6/edge-list codecs.

Adjacency is stored as one Python ``int`` bitset per vertex, so neighbourhood
intersections and reachability sweeps are word operations rather than loops
over sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

VertexSet = frozenset

GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


class Graph6Error(ValueError):
    """Raised when a graph6 string cannot be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Instances are immutable and hashable; every operation that "changes" a
    graph returns a new one.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adjacency: Sequence[int]):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(adjacency) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        adj = tuple(int(a) for a in adjacency)
        for v, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in iter_bits(a):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        self._n = n
        self._adj = adj
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        g = cls.__new__(cls)
        g._n = n
        g._adj = adj
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitsets, one per vertex."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Return ``(H, keep)`` where vertex ``i`` of ``H`` is ``keep[i]`` here."""
        keep = sorted(set(vertices))
        if not keep:
            raise GraphError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(mask_of(index[w] for w in iter_bits(self._adj[v]) if w in index))
        return Graph._trusted(len(keep), tuple(adj)), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        if self._n <= GRAPH6_MAX_N:
            return f"Graph({write_graph6(self)!r})"
        return f"Graph(n={self._n}, m={self.num_edges})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {pair!r} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


# -- graph6 ---------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    bits = []
    adj = g.adj
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(">>graph6<<"):
        base = 10
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported", base)
    if not 63 < head < 126:
        raise Graph6Error(f"bad header byte {s[0]!r}", base)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: need {nbytes} data bytes, got {len(body)}", base + 1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after bit field", base + 1 + nbytes)
    adj = [0] * n
    i, j = 0, 1
    for pos, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"bad data byte {ch!r}", base + 1 + pos)
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if j >= n:
                if bit:
                    raise Graph6Error("nonzero padding bits", base + 1 + pos)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(adj))


# -- plain edge-list text ("n" then one "u v" pair per line) ---------------


def parse_edge_list_text(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("edge list is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    return from_edge_list(n, edges)


def write_edge_list_text(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# -- constructions ----------------------------------------------------------


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, list[int]]:
    """Contract edge ``uv``; returns ``(G/uv, relabel)``.

    ``relabel[x]`` is the new index of old vertex ``x``; ``u`` and ``v`` both
    map to the merged vertex, which takes the place of ``min(u, v)``.  All
    other vertices keep their relative order.
    """
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    keep, gone = min(u, v), max(u, v)
    relabel = [x if x < gone else x - 1 for x in range(g.n)]
    relabel[gone] = relabel[keep]
    adj = [0] * (g.n - 1)
    for x in range(g.n):
        for y in iter_bits(g.adj[x]):
            a, b = relabel[x], relabel[y]
            if a != b:
                adj[a] |= 1 << b
    return Graph._trusted(g.n - 1, tuple(adj)), relabel


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    ng = g.n
    gmask = g.full_mask
    hmask = h.full_mask << ng
    adj = [a | hmask for a in g.adj] + [(a << ng) | gmask for a in h.adj]
    return Graph._trusted(ng + h.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    ng = g.n
    return Graph._trusted(ng + h.n, g.adj + tuple(a << ng for a in h.adj))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def min_degree(g: Graph) -> int:
    return min(g.degrees())


# -- connectivity -------------------------------------------------------------


def reach_mask(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` using only vertices in ``allowed``."""
    adj = g.adj
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected_within(g: Graph, allowed: int) -> bool:
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return reach_mask(g, start, allowed) == allowed


def is_connected(g: Graph) -> bool:
    return _connected_within(g, g.full_mask)


def cut_vertex(g: Graph) -> int | None:
    """Smallest vertex whose removal disconnects a connected ``g``, if any."""
    full = g.full_mask
    for v in range(g.n):
        if not _connected_within(g, full & ~(1 << v)):
            return v
    return None


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and cut_vertex(g) is None


def two_vertex_cut(g: Graph) -> tuple[int, int] | None:
    """Lexicographically smallest separating vertex pair, if any."""
    full = g.full_mask
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not _connected_within(g, full & ~(1 << u) & ~(1 << v)):
                return u, v
    return None


def is_three_connected(g: Graph) -> bool:
    return g.n >= 4 and is_two_connected(g) and two_vertex_cut(g) is None


def distance_layers(g: Graph, s: Iterable[int]) -> tuple[list[frozenset[int]], frozenset[int]]:
    """BFS layers by distance to the set ``s``.

    Returns ``(layers, unreachable)``; ``layers[0]`` is ``s`` itself.
    """
    source = mask_of(s)
    if not source:
        raise GraphError("distance layers need a nonempty source set")
    if source & ~g.full_mask:
        raise GraphError("source set has a vertex out of range")
    adj = g.adj
    layers = []
    seen = frontier = source
    while frontier:
        layers.append(frozenset(iter_bits(frontier)))
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return layers, frozenset(iter_bits(g.full_mask & ~seen))


def components_minus(g: Graph, s: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g - s``, ordered by smallest vertex."""
    remaining = g.full_mask & ~mask_of(s)
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reach_mask(g, start, remaining)
        comps.append(frozenset(iter_bits(comp)))
        remaining &= ~comp
    return comps
