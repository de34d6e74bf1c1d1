"""Arborescences, their transitive closures, and the lives-in / coarboreal
relations against trees on the leaf set."""

from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass
from itertools import product

from ..graph import Graph, from_edge_list

COARBOREAL_MAX_LEAVES = 8

Node = Hashable


@dataclass(frozen=True)
class Arborescence:
    """A rooted tree with every edge ``(parent, child)`` directed away from the apex."""

    nodes: tuple
    edges: tuple

    def __post_init__(self):
        nodes = tuple(self.nodes)
        edges = tuple((u, v) for u, v in self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        if len(set(nodes)) != len(nodes) or not nodes:
            raise ValueError("arborescence nodes must be distinct and nonempty")
        known = set(nodes)
        parent = {}
        for u, v in edges:
            if u not in known or v not in known:
                raise ValueError(f"edge {(u, v)} uses an unknown node")
            if v in parent:
                raise ValueError(f"two edges share the head {v!r}")
            parent[v] = u
        roots = [v for v in nodes if v not in parent]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one apex, found {len(roots)}")
        # every node must reach the apex by walking up, i.e. no directed cycles
        for v in nodes:
            seen = set()
            while v in parent:
                if v in seen:
                    raise ValueError("arborescence contains a directed cycle")
                seen.add(v)
                v = parent[v]

    @classmethod
    def from_edges(cls, edges: Sequence[tuple], extra_nodes: Sequence = ()) -> Arborescence:
        order: dict = {}
        for u, v in edges:
            order.setdefault(u, None)
            order.setdefault(v, None)
        for v in extra_nodes:
            order.setdefault(v, None)
        return cls(tuple(order), tuple(edges))

    @classmethod
    def star(cls, apex, leaves: Sequence) -> Arborescence:
        return cls((apex, *leaves), tuple((apex, v) for v in leaves))

    @classmethod
    def directed_path(cls, nodes: Sequence) -> Arborescence:
        return cls(tuple(nodes), tuple(zip(nodes, nodes[1:])))

    def parent_map(self) -> dict:
        return {v: u for u, v in self.edges}

    def children(self, v) -> list:
        return [w for u, w in self.edges if u == v]

    @property
    def apex(self):
        heads = {v for _, v in self.edges}
        return next(v for v in self.nodes if v not in heads)

    @property
    def leaves(self) -> tuple:
        tails = {u for u, _ in self.edges}
        r = self.apex
        return tuple(v for v in self.nodes if v != r and v not in tails)

    def ancestors(self, v) -> list:
        """Proper ancestors of ``v``, apex first."""
        parent = self.parent_map()
        out = []
        while v in parent:
            v = parent[v]
            out.append(v)
        return out[::-1]

    def path_from_apex(self, v) -> list:
        return self.ancestors(v) + [v]

    def depth(self, v) -> int:
        return len(self.ancestors(v))

    def leaf_descendants(self) -> dict:
        """``D_v``: the leaves at or below each node."""
        leaves = set(self.leaves)
        out = {v: set() for v in self.nodes}
        for leaf in leaves:
            out[leaf].add(leaf)
            for a in self.ancestors(leaf):
                out[a].add(leaf)
        return {v: frozenset(s) for v, s in out.items()}


def transitive_closure(t: Arborescence) -> Graph:
    """Undirected comparability graph of the ancestor order; vertex ``i`` is ``t.nodes[i]``."""
    index = {v: i for i, v in enumerate(t.nodes)}
    edges = [(index[a], index[v]) for v in t.nodes for a in t.ancestors(v)]
    return from_edge_list(len(t.nodes), edges)


def _is_spanning_tree(vertices: set, edges: Sequence[tuple]) -> bool:
    if len(edges) != len(vertices) - 1:
        return False
    adj: dict = {v: set() for v in vertices}
    for u, v in edges:
        if u not in adj or v not in adj or u == v:
            return False
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _subtree(adj: Mapping, members: frozenset) -> bool:
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def lives_in(t: Arborescence, s_edges: Sequence[tuple]) -> bool:
    """Whether every leaf-descendant set of ``t`` spans a subtree of the tree
    ``s`` (given by its edges) on ``L(t)``."""
    leaves = set(t.leaves)
    if not _is_spanning_tree(leaves, s_edges) and leaves:
        raise ValueError("s must be a tree whose vertex set is exactly the leaves of t")
    adj: dict = {v: set() for v in leaves}
    for u, v in s_edges:
        adj[u].add(v)
        adj[v].add(u)
    return all(_subtree(adj, dv) for dv in t.leaf_descendants().values())


def _prufer_trees(labels: list):
    n = len(labels)
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(labels[0], labels[1])]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = degree.index(1)
            edges.append((labels[leaf], labels[x]))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (i for i in range(n) if degree[i] == 1)
        edges.append((labels[u], labels[v]))
        yield edges


def coarboreal(t1: Arborescence, t2: Arborescence, phi: Mapping | None = None) -> list[tuple] | None:
    """A tree on ``L(t1)`` in which both ``t1`` and ``t2`` (leaves pulled back
    through ``phi``) live, or None.  Exhaustive over all labelled trees."""
    l1 = list(t1.leaves)
    if phi is None:
        phi = {v: v for v in l1}
    if sorted(map(repr, (phi[v] for v in l1))) != sorted(map(repr, t2.leaves)) or len(l1) != len(t2.leaves):
        raise ValueError("phi must be a bijection between the leaf sets")
    if len(l1) > COARBOREAL_MAX_LEAVES:
        raise ValueError(f"coarboreal search refuses more than {COARBOREAL_MAX_LEAVES} leaves")
    back = {phi[v]: v for v in l1}
    families = [dv for dv in t1.leaf_descendants().values() if len(dv) > 1]
    families += [frozenset(back[x] for x in dv) for dv in t2.leaf_descendants().values() if len(dv) > 1]
    families = list(set(families))
    for edges in _prufer_trees(l1):
        adj: dict = {v: set() for v in l1}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        if all(_subtree(adj, f) for f in families):
            return edges
    return None
