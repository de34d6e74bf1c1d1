"""Isomorphism classes of small graphs, by vertex extension plus canonical
codes.

A graph in class ``(conn, min_degree)`` on ``n`` vertices is built from a
parent on ``n - 1`` vertices in a weaker class; duplicates are removed by
sorting canonical codes, so every level is a sorted ``int64`` array.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .. import _kernels as K
from ..graph import Graph

DEFAULT_MAX_N = 11
_CHUNK = 200_000


def max_order() -> int:
    raw = os.environ.get("CHORDCYCLE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"CHORDCYCLE_MAX_N must be an integer, got {raw!r}") from None
    return min(val, K.MAX_CODE_N)


@dataclass(frozen=True)
class GraphFilter:
    """``connectivity``: 0 any, 1 connected, 2 two-connected, 3 three-connected."""

    min_degree: int = 0
    connectivity: int = 0

    def __post_init__(self):
        if not 0 <= self.connectivity <= 3:
            raise ValueError("connectivity must be 0..3")
        if self.min_degree < 0:
            raise ValueError("min_degree must be non-negative")

    def describe(self) -> str:
        names = ("all", "connected", "2-connected", "3-connected")
        return f"{names[self.connectivity]}, min degree >= {self.min_degree}"


def _parent_class(conn: int, d: int) -> tuple[int, int]:
    # deleting a vertex costs at most one unit of connectivity and degree;
    # the connected class is closed under deleting some non-cut vertex
    if conn == 0:
        return 0, max(d - 1, 0)
    return max(conn - 1, 1), max(d - 1, 0)


_memo: dict[tuple[int, int, int], np.ndarray] = {}


def _level(n: int, conn: int, d: int) -> np.ndarray:
    key = (n, conn, d)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if n == 1:
        res = np.array([0], np.int64) if conn <= 1 and d == 0 else np.empty(0, np.int64)
    else:
        pc, pd = _parent_class(conn, d)
        parents = _level(n - 1, pc, pd)
        step = max(1, _CHUNK >> (n - 1))
        buf = np.empty(step << (n - 1), np.int64)
        chunks = []
        for i in range(0, len(parents), step):
            cnt = K.extend_chunk(parents[i:i + step], n - 1, d, conn, buf)
            chunks.append(np.unique(buf[:cnt]))
        res = np.unique(np.concatenate(chunks)) if chunks else np.empty(0, np.int64)
    res.setflags(write=False)
    _memo[key] = res
    return res


def clear_cache() -> None:
    _memo.clear()


def small_graph_codes(n: int, flt: GraphFilter = GraphFilter()) -> np.ndarray:
    """Sorted canonical codes of every class of order ``n`` passing ``flt``."""
    if n < 1:
        raise ValueError("order must be positive")
    limit = max_order()
    if n > limit:
        raise ValueError(f"built-in enumeration stops at n = {limit}; feed larger populations as graph6 streams")
    return _level(n, flt.connectivity, flt.min_degree)


def graph_from_code(code: int, n: int) -> Graph:
    adj = np.empty(n, np.int64)
    K.decode(np.int64(code), n, adj)
    return Graph._trusted(n, tuple(int(a) for a in adj))


def canonical_code(g: Graph) -> int:
    if g.n > K.MAX_CODE_N:
        raise ValueError(f"canonical codes need n <= {K.MAX_CODE_N}")
    return int(K.canonical_code(np.asarray(g.adj, np.int64), g.n))


def enumerate_small_graphs(n: int, flt: GraphFilter = GraphFilter()) -> Iterator[Graph]:
    """Pairwise non-isomorphic graphs of order ``n``, in canonical-code order."""
    for code in small_graph_codes(n, flt):
        yield graph_from_code(int(code), n)


def count_small_graphs(n: int, flt: GraphFilter = GraphFilter()) -> int:
    return len(small_graph_codes(n, flt))
