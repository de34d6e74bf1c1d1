import json
import pathlib
from itertools import combinations

import pytest
from hypothesis import strategies as st

from chordcycle.graph import Graph, from_edge_list

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def graph_counts():
    with open(FIXTURES / "graph_counts.json") as fh:
        return json.load(fh)


@st.composite
def graphs(draw, min_n=1, max_n=9, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        mask = [draw(st.floats(0, 1)) < p for _ in pairs]
    return from_edge_list(n, [e for e, keep in zip(pairs, mask) if keep])


def to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
