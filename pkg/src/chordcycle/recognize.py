"""Membership tests for wheels, ell-holed and chordal graphs, plus the
half-graph / ordering / compatibility conditions that define blow-ups of
cycles."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .cycles import CycleWitness, iter_induced_cycles, validate_cycle
from .graph import Graph, components_minus, iter_bits, mask_of


# -- wheels, universal vertices --------------------------------------------------


def find_universal_vertex(g: Graph) -> int | None:
    for v in range(g.n):
        if g.degree(v) == g.n - 1:
            return v
    return None


def wheel_structure(g: Graph) -> tuple[int, list[int]] | None:
    """``(center, rim)`` if ``g`` is a wheel, rim listed from its smallest vertex."""
    n = g.n
    if n < 4:
        return None
    for u in range(n):
        if g.degree(u) != n - 1:
            continue
        if any(g.degree(v) != 3 for v in range(n) if v != u):
            continue
        rim_mask = g.full_mask & ~(1 << u)
        start = (rim_mask & -rim_mask).bit_length() - 1
        rim = [start]
        prev, cur = None, start
        while True:
            nxt = [w for w in iter_bits(g.adj[cur] & rim_mask) if w != prev]
            step = min(nxt)
            if step == start:
                break
            if step in rim:
                break
            rim.append(step)
            prev, cur = cur, step
        if len(rim) == n - 1:
            return u, rim
    return None


def is_wheel(g: Graph) -> bool:
    return wheel_structure(g) is not None


# -- holes ------------------------------------------------------------------------


@dataclass(frozen=True)
class HoledCheck:
    ok: bool
    hole: CycleWitness | None = None
    reason: str = ""


def check_ell_holed(g: Graph, ell: int, allow_vacuous: bool = False) -> HoledCheck:
    """Whether every hole of ``g`` has length ``ell``.

    A graph without holes is rejected unless ``allow_vacuous`` is set; when
    the answer is no, a hole of the wrong length is returned if one exists.
    """
    if ell < 4:
        raise ValueError("ell must be at least 4")
    seen = None
    for hole in iter_induced_cycles(g, 4, g.n):
        if hole.length != ell:
            return HoledCheck(False, hole, f"hole of length {hole.length}")
        if seen is None:
            seen = hole
    if seen is None:
        return HoledCheck(allow_vacuous, None, "no holes")
    return HoledCheck(True, seen)


def is_ell_holed(g: Graph, ell: int, allow_vacuous: bool = False) -> bool:
    return check_ell_holed(g, ell, allow_vacuous).ok


def hole_lengths(g: Graph) -> set[int]:
    return {h.length for h in iter_induced_cycles(g, 4, g.n)}


# -- chordality -------------------------------------------------------------------


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """A perfect elimination ordering from maximum cardinality search, or
    ``None`` when ``g`` is not chordal."""
    n = g.n
    weight = [0] * n
    visited = 0
    visit = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        visit.append(v)
        visited |= 1 << v
        for w in iter_bits(g.adj[v] & ~visited):
            weight[w] += 1
    order = visit[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in iter_bits(g.adj[v]) if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        u = min(later, key=pos.__getitem__)
        rest = mask_of(w for w in later if w != u)
        if rest & ~g.adj[u]:
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def chordal_edge_triangle(g: Graph, c: CycleWitness, e: tuple[int, int]) -> int:
    """A vertex of ``c`` adjacent to both ends of the cycle edge ``e``.

    Only guaranteed to exist in chordal graphs, so other inputs are refused.
    """
    if not is_chordal(g):
        raise ValueError("graph is not chordal")
    validate_cycle(g, c.vertices)
    u, v = e
    if (u, v) not in c.edges() and (v, u) not in c.edges():
        raise ValueError(f"{e} is not an edge of the cycle")
    common = g.adj[u] & g.adj[v] & mask_of(c.vertices)
    if not common:
        raise AssertionError(f"no triangle on {e} inside {c.vertices} in a chordal graph")
    return (common & -common).bit_length() - 1


# -- bipartite conditions -------------------------------------------------------------


@dataclass(frozen=True)
class OrderedBipartition:
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Y", tuple(self.Y))
        if len(set(self.X)) != len(self.X) or len(set(self.Y)) != len(self.Y):
            raise ValueError("orderings must not repeat vertices")
        if set(self.X) & set(self.Y):
            raise ValueError("bipartition sides overlap")


def _check_sides(g: Graph, b: OrderedBipartition) -> None:
    for v in b.X + b.Y:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")


def half_graph_violation(g: Graph, b: OrderedBipartition) -> tuple[int, int, int, int] | None:
    """An induced two-edge matching ``(x, y, x2, y2)`` of ``G[X, Y]``, or None.

    Edges inside ``X`` or inside ``Y`` are not part of ``G[X, Y]`` and are
    ignored.
    """
    _check_sides(g, b)
    ymask = mask_of(b.Y)
    nb = [(x, g.adj[x] & ymask) for x in b.X]
    for (x, a), (x2, a2) in combinations(nb, 2):
        if a & ~a2 and a2 & ~a:
            y = ((a & ~a2) & -(a & ~a2)).bit_length() - 1
            y2 = ((a2 & ~a) & -(a2 & ~a)).bit_length() - 1
            return x, y, x2, y2
    return None


def is_half_graph(g: Graph, b: OrderedBipartition) -> bool:
    return half_graph_violation(g, b) is None


def obeys_orderings(g: Graph, b: OrderedBipartition) -> bool:
    """Each vertex on either side sees an initial segment of the other side."""
    _check_sides(g, b)
    for side, other in ((b.X, b.Y), (b.Y, b.X)):
        for v in side:
            seen_gap = False
            for w in other:
                if g.has_edge(v, w):
                    if seen_gap:
                        return False
                else:
                    seen_gap = True
    return True


def _require_clique(g: Graph, vs: Sequence[int], name: str) -> None:
    for u, v in combinations(vs, 2):
        if not g.has_edge(u, v):
            raise ValueError(f"{name} is not a clique: {u} and {v} are nonadjacent")


def are_compatible(g: Graph, X: Sequence[int], Y: Sequence[int], Z: Sequence[int]) -> bool:
    """Whether ``G[X, Y]`` and ``G[X, Z]`` are compatible, i.e. ``G[X, Y + Z]``
    is a half-graph."""
    if set(X) & set(Y) or set(X) & set(Z) or set(Y) & set(Z):
        raise ValueError("X, Y, Z must be disjoint")
    for vs, name in ((X, "X"), (Y, "Y"), (Z, "Z")):
        _require_clique(g, vs, name)
    return is_half_graph(g, OrderedBipartition(tuple(X), tuple(Y) + tuple(Z)))


def induced_yxxz_path(g: Graph, X: Sequence[int], Y: Sequence[int], Z: Sequence[int]) -> tuple[int, int, int, int] | None:
    """An induced path ``y-x-x2-z`` with ``y in Y``, ``x, x2 in X``, ``z in Z``."""
    for y in Y:
        for x in X:
            if not g.has_edge(y, x):
                continue
            for x2 in X:
                if x2 == x or not g.has_edge(x, x2) or g.has_edge(y, x2):
                    continue
                for z in Z:
                    if g.has_edge(x2, z) and not g.has_edge(x, z) and not g.has_edge(y, z):
                        return y, x, x2, z
    return None


# -- blow-ups of cycles -------------------------------------------------------------


@dataclass(frozen=True)
class CliquePartition:
    """Ordered parts ``W_1..W_ell``; each part lists its own internal order."""

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class BlowupVerdict:
    ok: bool
    condition: int | None = None
    detail: str = ""
    vertices: tuple[int, ...] = ()


def verify_blowup_of_cycle(g: Graph, p: CliquePartition) -> BlowupVerdict:
    """Check the four defining conditions of a blow-up of an ell-cycle against
    the supplied partition, reporting the first one that fails."""
    ell = len(p)
    if ell < 4:
        raise ValueError("a blow-up of a cycle needs at least 4 parts")
    flat = [v for part in p.parts for v in part]
    if len(flat) != len(set(flat)):
        raise ValueError("partition parts overlap")
    if set(flat) != set(range(g.n)):
        raise ValueError("partition does not cover the vertex set")
    parts = p.parts

    for i, part in enumerate(parts):
        if not part:
            return BlowupVerdict(False, 1, f"part {i} is empty")
        for u, v in combinations(part, 2):
            if not g.has_edge(u, v):
                return BlowupVerdict(False, 1, f"part {i} is not a clique", (u, v))

    for i in range(ell):
        bad = half_graph_violation(g, OrderedBipartition(parts[i - 1], parts[i]))
        if bad:
            return BlowupVerdict(False, 2, f"parts {(i - 1) % ell} and {i} induce a two-edge matching", bad)

    masks = [mask_of(part) for part in parts]
    for i in range(ell):
        for j in range(i + 2, ell):
            if i == 0 and j == ell - 1:
                continue
            for u in parts[i]:
                hit = g.adj[u] & masks[j]
                if hit:
                    v = (hit & -hit).bit_length() - 1
                    return BlowupVerdict(False, 3, f"edge between non-consecutive parts {i} and {j}", (u, v))

    for i in range(ell):
        others = parts[(i + 1) % ell] + parts[i - 1]
        bad = half_graph_violation(g, OrderedBipartition(parts[i], others))
        if bad:
            return BlowupVerdict(False, 4, f"boundaries of part {i} are not compatible", bad)
    return BlowupVerdict(True)


# -- clique cutsets -------------------------------------------------------------------


def _cliques_of_size(g: Graph, size: int):
    def grow(clique: list[int], cand: int):
        if len(clique) == size:
            yield tuple(clique)
            return
        for v in iter_bits(cand):
            clique.append(v)
            yield from grow(clique, cand & g.adj[v] & ~((1 << (v + 1)) - 1))
            clique.pop()

    yield from grow([], g.full_mask)


def find_clique_cutset(g: Graph) -> frozenset[int] | None:
    """A minimum-size clique whose removal disconnects ``g`` (lex-least among
    those), or None.  A disconnected graph yields the empty clique."""
    for size in range(0, g.n - 1):
        for clique in _cliques_of_size(g, size):
            if len(components_minus(g, clique)) >= 2:
                return frozenset(clique)
    return None
