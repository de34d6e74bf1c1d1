"""Small named graphs used as fixtures and in the CLI."""

from __future__ import annotations

from itertools import combinations

from ..graph import Graph, from_edge_list, join


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def wheel(rim: int) -> Graph:
    """``C_rim`` joined to one new vertex, which gets label ``rim``."""
    if rim < 3:
        raise ValueError("wheel rim must have at least 3 vertices")
    return join(cycle(rim), complete(1))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "wheel": wheel,
}
