import random
from itertools import combinations, permutations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordcycle.cycles import CycleWitness, brute_cycles
from chordcycle.generators import complete, complete_bipartite, cycle, petersen, wheel
from chordcycle.graph import from_edge_list, join
from chordcycle.recognize import (
    CliquePartition,
    OrderedBipartition,
    are_compatible,
    check_ell_holed,
    chordal_edge_triangle,
    find_clique_cutset,
    find_universal_vertex,
    half_graph_violation,
    hole_lengths,
    induced_yxxz_path,
    is_chordal,
    is_ell_holed,
    is_half_graph,
    is_wheel,
    obeys_orderings,
    perfect_elimination_order,
    verify_blowup_of_cycle,
    wheel_structure,
)

from conftest import graphs, to_nx


# -- wheels -----------------------------------------------------------------------


@pytest.mark.parametrize("r", range(3, 13))
def test_wheels_are_recognised(r):
    w = wheel(r)
    centre, rim = wheel_structure(w)
    # in K4 = W3 every vertex is a centre, and the first one is reported
    assert centre == (0 if r == 3 else r)
    assert sorted(rim + [centre]) == list(range(r + 1)) and rim[0] == min(rim)
    for a, b in zip(rim, rim[1:] + rim[:1]):
        assert w.has_edge(a, b)


def test_non_wheels():
    assert not is_wheel(complete(5))  # K5 = K1 + K4, rim is not a cycle
    assert not is_wheel(cycle(6))
    assert not is_wheel(petersen())
    # centre plus two disjoint triangles: right degrees, disconnected rim
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_wheel(join(two_triangles, from_edge_list(1, [])))


def test_k4_is_the_smallest_wheel():
    assert is_wheel(complete(4))
    assert wheel_structure(complete(3)) is None


def test_universal_vertex():
    assert find_universal_vertex(wheel(6)) == 6
    assert find_universal_vertex(cycle(5)) is None
    assert find_universal_vertex(from_edge_list(1, [])) == 0


# -- holes --------------------------------------------------------------------------


def test_ell_holed_examples():
    assert is_ell_holed(cycle(7), 7)
    assert not is_ell_holed(cycle(7), 6)
    assert is_ell_holed(complete_bipartite(3, 4), 4)
    res = check_ell_holed(petersen(), 5)
    assert not res.ok and res.hole.length == 6


def test_chordal_graphs_are_not_ell_holed_unless_asked():
    res = check_ell_holed(complete(5), 4)
    assert not res.ok and res.reason == "no holes"
    assert is_ell_holed(complete(5), 4, allow_vacuous=True)
    with pytest.raises(ValueError):
        check_ell_holed(cycle(5), 3)


def test_hole_lengths():
    assert hole_lengths(petersen()) == {5, 6}
    assert hole_lengths(wheel(7)) == {7}
    assert hole_lengths(complete(6)) == set()


# -- chordality --------------------------------------------------------------------


def random_interval_graph(rng, n):
    ivs = []
    for _ in range(n):
        a = rng.uniform(0, 10)
        ivs.append((a, a + rng.uniform(0, 3)))
    edges = [(i, j) for i, j in combinations(range(n), 2) if ivs[i][0] <= ivs[j][1] and ivs[j][0] <= ivs[i][1]]
    return from_edge_list(n, edges)


def random_chordal_graph(rng, n):
    # attach each new vertex to a clique of what is already there
    edges = []
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        start = rng.randrange(v)
        clique = [start]
        for u in rng.sample(range(v), v):
            if u not in clique and all(u in adj[w] for w in clique) and rng.random() < 0.6:
                clique.append(u)
        for u in clique:
            edges.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
    return from_edge_list(n, edges)


def test_interval_graphs_are_chordal():
    rng = random.Random(7)
    for _ in range(200):
        g = random_interval_graph(rng, rng.randint(1, 12))
        assert is_chordal(g)
        assert hole_lengths(g) == set()


def test_chordality_examples():
    assert is_chordal(complete(6))
    assert not is_chordal(cycle(4))
    assert not is_chordal(wheel(5))
    assert perfect_elimination_order(cycle(5)) is None
    order = perfect_elimination_order(complete(4))
    assert sorted(order) == [0, 1, 2, 3]


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


def test_every_cycle_edge_of_a_chordal_graph_spans_a_triangle_inside_the_cycle():
    rng = random.Random(11)
    checked = 0
    for _ in range(60):
        g = random_chordal_graph(rng, rng.randint(3, 8))
        assert is_chordal(g)
        for raw in brute_cycles(g):
            c = CycleWitness.canonical(raw)
            for e in c.edges():
                w = chordal_edge_triangle(g, c, e)
                assert w in c.vertices and g.has_edge(w, e[0]) and g.has_edge(w, e[1])
                checked += 1
    assert checked > 1000


def test_chordal_edge_triangle_refuses_non_chordal():
    with pytest.raises(ValueError):
        chordal_edge_triangle(cycle(5), CycleWitness((0, 1, 2, 3, 4)), (0, 1))
    with pytest.raises(ValueError):
        chordal_edge_triangle(complete(4), CycleWitness((0, 1, 2, 3)), (0, 2))


# -- half-graphs, orderings, compatibility ---------------------------------------------------


def bip(nx_, ny, edges):
    """X = 0..nx-1, Y = nx..nx+ny-1, edges given as (i, j) meaning x_i y_j."""
    g = from_edge_list(nx_ + ny, [(i, nx_ + j) for i, j in edges])
    return g, OrderedBipartition(tuple(range(nx_)), tuple(range(nx_, nx_ + ny)))


def test_half_graph_examples():
    g, b = bip(2, 2, [(0, 0), (1, 1)])
    assert half_graph_violation(g, b) == (0, 2, 1, 3)
    g, b = bip(3, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)])
    assert is_half_graph(g, b) and obeys_orderings(g, b)
    g, b = bip(2, 2, [(0, 1), (1, 1)])
    assert is_half_graph(g, b) and not obeys_orderings(g, b)


def test_half_graph_ignores_edges_inside_a_side():
    g = from_edge_list(4, [(0, 1), (2, 3), (0, 2)])
    assert is_half_graph(g, OrderedBipartition((0, 1), (2, 3)))


def test_bipartition_must_be_disjoint():
    with pytest.raises(ValueError):
        OrderedBipartition((0, 1), (1, 2))
    with pytest.raises(ValueError):
        OrderedBipartition((0, 0), (1,))


def _all_bipartite(a, b):
    pairs = list(product(range(a), range(b)))
    for bits in range(1 << len(pairs)):
        yield [p for k, p in enumerate(pairs) if bits >> k & 1]


@pytest.mark.parametrize("a, b", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_half_graph_iff_some_orderings_are_obeyed(a, b):
    for edges in _all_bipartite(a, b):
        g, base = bip(a, b, edges)
        expect = any(
            obeys_orderings(g, OrderedBipartition(px, py))
            for px in permutations(base.X)
            for py in permutations(base.Y)
        )
        assert is_half_graph(g, base) == expect


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_obeying_orderings_survives_deleting_edges_at_the_end(a, b, data):
    # staircase rows: vertex i sees the first r_i of Y, r non-increasing
    rows = sorted(data.draw(st.lists(st.integers(0, b), min_size=a, max_size=a)), reverse=True)
    edges = [(i, j) for i in range(a) for j in range(rows[i])]
    g, ordb = bip(a, b, edges)
    assert obeys_orderings(g, ordb)
    # trim the last row by one: still a staircase
    i = max((k for k in range(a) if rows[k]), default=None)
    if i is not None:
        trimmed = [e for e in edges if e != (i, rows[i] - 1)]
        g2, _ = bip(a, b, trimmed)
        assert obeys_orderings(g2, ordb)
    # breaking the staircase in the middle of a row leaves the half-graph
    # intact but violates the orderings
    full = [k for k in range(a) if rows[k] >= 2]
    if full:
        k = full[0]
        broken = [e for e in edges if e != (k, 0)]
        g3, _ = bip(a, b, broken)
        assert not obeys_orderings(g3, ordb)


def _half_graph_edge_sets(a, b, off_x, off_y):
    out = []
    for edges in _all_bipartite(a, b):
        g, ordb = bip(a, b, edges)
        if is_half_graph(g, ordb):
            out.append([(off_x + i, off_y + j) for i, j in edges])
    return out


@pytest.mark.parametrize("sx, sy, sz", [(s1, s2, s3) for s1 in (1, 2, 3) for s2 in (1, 2, 3) for s3 in (1, 2, 3)])
def test_compatibility_iff_no_induced_yxxz_path(sx, sy, sz):
    """Exhaustive over cliques X, Y, Z of size <= 3 with Y, Z anticomplete and
    both G[X, Y] and G[X, Z] half-graphs."""
    X = tuple(range(sx))
    Y = tuple(range(sx, sx + sy))
    Z = tuple(range(sx + sy, sx + sy + sz))
    n = sx + sy + sz
    inside = [e for part in (X, Y, Z) for e in combinations(part, 2)]
    xy = _half_graph_edge_sets(sx, sy, 0, sx)
    xz = _half_graph_edge_sets(sx, sz, 0, sx + sy)
    for e1 in xy:
        for e2 in xz:
            g = from_edge_list(n, inside + e1 + e2)
            assert are_compatible(g, X, Y, Z) == (induced_yxxz_path(g, X, Y, Z) is None)


def test_compatibility_needs_half_graph_sides():
    # a matching between X and Y: not compatible, yet no induced Y-X-X-Z path
    g = from_edge_list(5, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert not are_compatible(g, (0, 1), (2, 3), (4,))
    assert induced_yxxz_path(g, (0, 1), (2, 3), (4,)) is None


def test_compatibility_rejects_bad_input():
    with pytest.raises(ValueError, match="clique"):
        are_compatible(cycle(5), (0, 2), (1,), (3,))
    with pytest.raises(ValueError, match="disjoint"):
        are_compatible(complete(4), (0, 1), (1,), (3,))


# -- blow-ups ---------------------------------------------------------------------------------


def test_cycle_is_a_blowup_of_itself():
    p = CliquePartition(tuple((i,) for i in range(7)))
    assert verify_blowup_of_cycle(cycle(7), p).ok


def test_chord_breaks_condition_three():
    g = from_edge_list(7, cycle(7).edges() + [(0, 3)])
    v = verify_blowup_of_cycle(g, CliquePartition(tuple((i,) for i in range(7))))
    assert not v.ok and v.condition == 3 and set(v.vertices) == {0, 3}


def test_non_clique_part_breaks_condition_one():
    p = CliquePartition(((0, 2),) + tuple((i,) for i in (1, 3, 4, 5, 6, 7)))
    v = verify_blowup_of_cycle(cycle(8), p)
    assert not v.ok and v.condition == 1


def test_matching_between_parts_breaks_condition_two():
    # parts {0,1} and {2,3}, with 0-2 and 1-3 only
    edges = [(0, 1), (2, 3), (0, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 0), (6, 1)]
    g = from_edge_list(7, edges)
    p = CliquePartition(((0, 1), (2, 3), (4,), (5,), (6,)))
    v = verify_blowup_of_cycle(g, p)
    assert not v.ok and v.condition == 2


def test_incompatible_boundaries_break_condition_four():
    # W0 = {0, 1}: 0 sees W1 only, 1 sees W_{ell-1} only
    edges = [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    g = from_edge_list(6, edges)
    p = CliquePartition(((0, 1), (2,), (3,), (4,), (5,)))
    v = verify_blowup_of_cycle(g, p)
    assert not v.ok and v.condition == 4


def test_blowup_partition_must_cover():
    with pytest.raises(ValueError):
        verify_blowup_of_cycle(cycle(5), CliquePartition(((0,), (1,), (2,), (3,))))
    with pytest.raises(ValueError):
        verify_blowup_of_cycle(cycle(5), CliquePartition(((0,), (1,), (2,), (3,), (4, 0))))


# -- clique cutsets ----------------------------------------------------------------------


def test_clique_cutset_examples():
    diamond = from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert find_clique_cutset(diamond) == frozenset({1, 2})
    assert find_clique_cutset(cycle(6)) is None
    assert find_clique_cutset(petersen()) is None
    assert find_clique_cutset(from_edge_list(3, [(0, 1)])) == frozenset()
    assert find_clique_cutset(complete(5)) is None


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_clique_cutset_is_a_separating_clique(g):
    cut = find_clique_cutset(g)
    if cut is None:
        return
    h = to_nx(g)
    assert all(h.has_edge(u, v) for u, v in combinations(cut, 2))
    h.remove_nodes_from(cut)
    assert not nx.is_connected(h)
