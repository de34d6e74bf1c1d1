"""Exact circumference, induced circumference, holes and longest cycles.

The fast paths are the bitset branch-and-bound searches in ``_kernels``; the
``brute_*`` functions are deliberately naive path enumerations kept only as
test oracles.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .graph import Graph, iter_bits, reach_mask

BRUTE_MAX_N = 12


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given by its vertex sequence; the closing edge is implied."""

    vertices: tuple[int, ...]
    chordless: bool = False

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in cycle {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @classmethod
    def canonical(cls, vertices: Sequence[int], chordless: bool = False) -> CycleWitness:
        """Rotate to the minimum vertex and orient towards its smaller neighbour."""
        vs = [int(v) for v in vertices]
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if len(vs) > 2 and vs[-1] < vs[1]:
            vs = [vs[0]] + vs[:0:-1]
        return cls(tuple(vs), chordless)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def to_json(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class CycleStats:
    circumference: int | None
    induced_circumference: int | None
    hamiltonian: bool
    longest: CycleWitness | None
    longest_induced: CycleWitness | None

    def to_json(self) -> dict:
        return {
            "circumference": self.circumference,
            "induced_circumference": self.induced_circumference,
            "hamiltonian": self.hamiltonian,
            "longest": None if self.longest is None else self.longest.to_json(),
            "longest_induced": None if self.longest_induced is None else self.longest_induced.to_json(),
        }


def _adj_array(g: Graph) -> np.ndarray:
    if g.n > K.MAX_KERNEL_N:
        raise ValueError(f"exact cycle solvers support n <= {K.MAX_KERNEL_N}, got {g.n}")
    return np.asarray(g.adj, dtype=np.int64)


def validate_cycle(g: Graph, vertices: Sequence[int], chordless: bool = False) -> None:
    """Raise ``ValueError`` unless ``vertices`` is a cycle of ``g`` (chordless if asked)."""
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        raise ValueError(f"not a simple cycle: {tuple(vertices)}")
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    for i in range(k):
        u, v = vertices[i], vertices[(i + 1) % k]
        if not g.has_edge(u, v):
            raise ValueError(f"cycle edge ({u}, {v}) missing from graph")
    if chordless and _find_chord(g, vertices) is not None:
        raise ValueError(f"cycle {tuple(vertices)} has a chord")


def _find_chord(g: Graph, vertices: Sequence[int]) -> tuple[int, int] | None:
    k = len(vertices)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(vertices[i], vertices[j]):
                return vertices[i], vertices[j]
    return None


def has_chord(g: Graph, c: CycleWitness) -> bool:
    validate_cycle(g, c.vertices)
    return _find_chord(g, c.vertices) is not None


def circumference(g: Graph) -> tuple[int, CycleWitness] | None:
    """Longest cycle length and the lexicographically least canonical witness.

    Returns ``None`` for forests.
    """
    adj = _adj_array(g)
    out = np.empty(g.n, np.int64)
    length = int(K.circumference(adj, g.n, out))
    if length == 0:
        return None
    K.first_cycle_of_length(adj, g.n, length, out)
    return length, CycleWitness.canonical(out[:length])


def induced_circumference(g: Graph) -> tuple[int, CycleWitness] | None:
    """Longest chordless cycle (triangles included), lex-least witness."""
    adj = _adj_array(g)
    out = np.empty(g.n, np.int64)
    length = int(K.induced_circumference(adj, g.n, out))
    if length == 0:
        return None
    K.first_induced_cycle_of_length(adj, g.n, length, out)
    return length, CycleWitness.canonical(out[:length], chordless=True)


def is_hamiltonian(g: Graph) -> bool:
    return bool(K.is_hamiltonian(_adj_array(g), g.n))


def cycle_stats(g: Graph) -> CycleStats:
    c = circumference(g)
    ci = induced_circumference(g)
    return CycleStats(
        circumference=None if c is None else c[0],
        induced_circumference=None if ci is None else ci[0],
        hamiltonian=c is not None and c[0] == g.n,
        longest=None if c is None else c[1],
        longest_induced=None if ci is None else ci[1],
    )


def iter_induced_cycles(g: Graph, min_len: int = 3, max_len: int | None = None) -> Iterator[CycleWitness]:
    """Every chordless cycle with length in ``[min_len, max_len]``, once each,
    in canonical form and lexicographic order of the vertex sequence."""
    n = g.n
    if max_len is None:
        max_len = n
    adj = g.adj
    full = g.full_mask
    for s in range(n):
        allowed = full & ~((1 << (s + 1)) - 1)
        adjs = adj[s]
        path = [s]

        def extend(head: int, visited: int, forb: int) -> Iterator[CycleWitness]:
            d = len(path)
            for w in iter_bits(adj[head] & allowed & ~visited & ~forb):
                if d >= 2 and adjs >> w & 1:
                    if d + 1 >= min_len and d + 1 <= max_len and path[1] < w:
                        yield CycleWitness(tuple(path) + (w,), chordless=True)
                    continue
                if d + 1 >= max_len:
                    continue
                nf = forb | (adj[head] if d >= 2 else 0)
                path.append(w)
                yield from extend(w, visited | 1 << w, nf)
                path.pop()

        yield from extend(s, 1 << s, 0)


def enumerate_holes(g: Graph, max_len: int) -> list[CycleWitness]:
    if max_len < 4:
        raise ValueError("holes have length at least 4")
    return list(iter_induced_cycles(g, 4, max_len))


def iter_cycles_of_length(g: Graph, length: int) -> Iterator[CycleWitness]:
    """All cycles of exactly ``length``, canonical, lexicographic order."""
    adj = g.adj
    full = g.full_mask
    for s in range(g.n - length + 1):
        allowed = full & ~((1 << (s + 1)) - 1)
        adjs = adj[s]
        path = [s]

        def extend(head: int, visited: int) -> Iterator[CycleWitness]:
            d = len(path)
            for w in iter_bits(adj[head] & allowed & ~visited):
                if d + 1 == length:
                    if adjs >> w & 1 and path[1] < w:
                        yield CycleWitness(tuple(path) + (w,))
                    continue
                free = allowed & ~visited & ~(1 << w)
                r = reach_mask(g, w, free | 1 << w) & ~(1 << w)
                if d + 1 + r.bit_count() < length or not adjs & r:
                    continue
                path.append(w)
                yield from extend(w, visited | 1 << w)
                path.pop()

        yield from extend(s, 1 << s)


def longest_cycles_all(g: Graph) -> list[CycleWitness]:
    c = circumference(g)
    if c is None:
        raise ValueError("graph is acyclic")
    return list(iter_cycles_of_length(g, c[0]))


# -- brute-force oracles --------------------------------------------------------


def _brute_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    if g.n > BRUTE_MAX_N:
        raise ValueError(f"brute-force oracle refuses n > {BRUTE_MAX_N}")
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]

    def walk(path: list[int], on_path: set[int]):
        head = path[-1]
        for w in sorted(nbrs[head]):
            if w <= path[0] or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if len(path) >= 3 and path[0] in nbrs[w]:
                yield tuple(path)
            yield from walk(path, on_path)
            on_path.discard(w)
            path.pop()

    for s in range(g.n):
        yield from walk([s], {s})


def brute_circumference(g: Graph) -> int | None:
    best = max((len(c) for c in _brute_cycles(g)), default=0)
    return best or None


def brute_induced_circumference(g: Graph) -> int | None:
    best = 0
    for c in _brute_cycles(g):
        if len(c) > best and _find_chord(g, c) is None:
            best = len(c)
    return best or None


def brute_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every cycle once per orientation, as raw vertex tuples (oracle use)."""
    return list(_brute_cycles(g))
