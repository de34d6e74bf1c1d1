import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordcycle.generators import complete, cycle, enumerate_small_graphs, path, petersen, wheel
from chordcycle.graph import (
    Graph,
    Graph6Error,
    GraphError,
    components_minus,
    contract_edge,
    cut_vertex,
    distance_layers,
    from_edge_list,
    is_connected,
    is_three_connected,
    is_two_connected,
    join,
    min_degree,
    parse_edge_list_text,
    parse_graph6,
    two_vertex_cut,
    write_edge_list_text,
    write_graph6,
)

from conftest import graphs, to_nx


def nx_graph6(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


# -- construction ---------------------------------------------------------------


def test_triangle_and_k4():
    k3 = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert k3.num_edges == 3 and k3.degrees() == [2, 2, 2]
    k4 = from_edge_list(4, list(combinations(range(4), 2)))
    assert k4 == complete(4)


def test_single_vertex():
    g = from_edge_list(1, [])
    assert g.n == 1 and g.num_edges == 0


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("edge", [(0, 3), (-1, 0), (2, 2)])
def test_bad_edges_are_named(edge):
    with pytest.raises(GraphError, match=str(edge[0])):
        from_edge_list(3, [edge])


def test_constructor_rejects_asymmetric():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError):
        Graph(0, [])


# -- graph6 -----------------------------------------------------------------------


def test_graph6_known_strings():
    assert write_graph6(complete(4)) == "C~"
    assert parse_graph6("C~") == complete(4)
    assert parse_graph6("D??") == from_edge_list(5, [])
    assert write_graph6(from_edge_list(5, [])) == "D??"


def test_graph6_matches_networkx_on_named_graphs():
    for g in (complete(4), cycle(5), petersen(), wheel(6), path(1)):
        assert write_graph6(g) == nx_graph6(g)


def test_cycle5_round_trip():
    c5 = parse_graph6(write_graph6(cycle(5)))
    assert c5 == cycle(5)


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<C~") == complete(4)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("C", 1),  # truncated
        ("C~?", 2),  # trailing garbage
        ("~?", 0),  # long form
        ("\x20~", 0),  # bad header
    ],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset


def test_graph6_full_byte_has_no_padding():
    # n=4 uses exactly six data bits; '}' sets five of them
    assert parse_graph6("C}").num_edges == 5


def test_graph6_padding_must_be_zero():
    # n=3 has 3 data bits; the low three padding bits must be clear
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("B" + chr(63 + 0b000001))


def test_write_graph6_rejects_large():
    with pytest.raises(GraphError):
        write_graph6(from_edge_list(63, []))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=20))
def test_graph6_round_trip_property(g):
    s = write_graph6(g)
    assert parse_graph6(s) == g
    assert s == nx_graph6(g)


def test_graph6_round_trip_ten_thousand_random():
    rng = random.Random(2024)
    for _ in range(10_000):
        n = rng.randint(1, 62)
        p = rng.random()
        g = from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        assert parse_graph6(write_graph6(g)) == g


def test_edge_list_text_round_trip():
    g = wheel(5)
    assert parse_edge_list_text(write_edge_list_text(g)) == g
    with pytest.raises(GraphError, match="line 2"):
        parse_edge_list_text("3\n0 1 2\n")
    with pytest.raises(GraphError):
        parse_edge_list_text("x\n")


# -- contraction and join ----------------------------------------------------------------


def test_contract_cycle_and_complete():
    h, relabel = contract_edge(cycle(4), 0, 1)
    assert h == cycle(3)
    assert relabel[0] == relabel[1]
    h, _ = contract_edge(complete(4), 2, 3)
    assert h == complete(3)


def test_contract_c6_gives_induced_c5():
    h, relabel = contract_edge(cycle(6), 0, 1)
    assert h.n == 5 and h.degrees() == [2] * 5 and is_connected(h)


def test_contract_non_edge_rejected():
    with pytest.raises(GraphError):
        contract_edge(cycle(5), 0, 2)
    with pytest.raises(GraphError):
        contract_edge(cycle(5), 1, 1)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=10), st.data())
def test_contract_degree_law(g, data):
    edges = g.edges()
    if not edges:
        return
    u, v = data.draw(st.sampled_from(edges))
    h, relabel = contract_edge(g, u, v)
    assert h.n == g.n - 1
    merged = relabel[u]
    union = (g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)
    assert h.degree(merged) == union.bit_count()
    # every other edge survives under the relabelling
    for a, b in edges:
        if relabel[a] != relabel[b]:
            assert h.has_edge(relabel[a], relabel[b])


def test_join_examples():
    w = join(cycle(6), from_edge_list(1, []))
    assert w == wheel(6)
    assert join(from_edge_list(1, []), from_edge_list(1, [])) == complete(2)
    assert join(cycle(3), from_edge_list(1, [])) == complete(4)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_join_min_degree_law(g, h):
    j = join(g, h)
    assert j.n == g.n + h.n
    assert min_degree(j) == min(min_degree(g) + h.n, min_degree(h) + g.n)


def test_min_degree_examples():
    assert min_degree(wheel(6)) == 3
    assert min_degree(complete(4)) == 3
    assert min_degree(petersen()) == 3


# -- connectivity ---------------------------------------------------------------------


def test_connectivity_examples():
    c6 = cycle(6)
    assert is_connected(c6) and is_two_connected(c6) and not is_three_connected(c6)
    u, v = two_vertex_cut(c6)
    assert not c6.has_edge(u, v)
    assert is_three_connected(complete(4))
    bowtie = from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert not is_two_connected(bowtie)
    assert cut_vertex(bowtie) == 2


def _brute_two_connected(g):
    if g.n < 3 or not nx.is_connected(to_nx(g)):
        return False
    for v in range(g.n):
        h = to_nx(g)
        h.remove_node(v)
        if not nx.is_connected(h):
            return False
    return True


def test_two_connected_agrees_with_brute_force_all_graphs_up_to_8():
    for n in range(1, 9):
        for g in enumerate_small_graphs(n):
            assert is_two_connected(g) == _brute_two_connected(g), write_graph6(g)


def test_three_connected_agrees_with_networkx_up_to_7():
    for n in range(1, 8):
        for g in enumerate_small_graphs(n):
            expect = n >= 4 and nx.node_connectivity(to_nx(g)) >= 3
            assert is_three_connected(g) == expect, write_graph6(g)


# -- layers and components --------------------------------------------------------------


def test_distance_layers_examples():
    c6 = cycle(6)
    layers, unreachable = distance_layers(c6, range(6))
    assert layers == [frozenset(range(6))] and not unreachable
    layers, _ = distance_layers(wheel(6), range(6))
    assert layers == [frozenset(range(6)), frozenset({6})]
    layers, _ = distance_layers(path(3), [0])
    assert layers == [frozenset({0}), frozenset({1}), frozenset({2})]


def test_distance_layers_reports_unreachable():
    g = from_edge_list(4, [(0, 1)])
    layers, unreachable = distance_layers(g, [0])
    assert unreachable == frozenset({2, 3})
    with pytest.raises(GraphError):
        distance_layers(g, [])


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12), st.data())
def test_distance_layer_laws(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    layers, unreachable = distance_layers(g, s)
    assert sum(len(x) for x in layers) + len(unreachable) == g.n
    level = {v: i for i, layer in enumerate(layers) for v in layer}
    for u, v in g.edges():
        if u in level and v in level:
            assert abs(level[u] - level[v]) <= 1


def test_components_minus_examples():
    assert components_minus(complete(4), [0, 1]) == [frozenset({2, 3})]
    assert len(components_minus(cycle(6), [0, 3])) == 2
    assert components_minus(wheel(6), [6]) == [frozenset(range(6))]
