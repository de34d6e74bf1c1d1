import json
import os

import pytest
from hypothesis import given, settings

from chordcycle.cycles import validate_cycle
from chordcycle.generators import (
    GraphFilter,
    canonical_code,
    complete,
    complete_bipartite,
    cycle,
    enumerate_small_graphs,
    petersen,
    wheel,
)
from chordcycle.graph import from_edge_list, parse_graph6, write_graph6
from chordcycle.harness import (
    CHECKS,
    FAIL,
    NA,
    PASS,
    SCHEMA,
    Population,
    PreconditionError,
    Profile,
    check_ell_holed_theorem,
    check_harvey,
    check_nonham_gap,
    check_small_hole_theorem,
    check_thomassen,
    check_wheel_characterization,
    equivalence_reduction_step,
    harvey_min_degree,
    iter_graph6_lines,
    normalize_check_id,
    population_filter,
    run_check,
    scan,
    scan_graphs,
    verify_certificate,
)

from conftest import graphs


# -- single-graph checks -------------------------------------------------------------------


def test_petersen():
    assert check_nonham_gap(petersen()).status == PASS
    assert check_small_hole_theorem(petersen()).status == PASS
    assert check_thomassen(petersen()).status == PASS
    assert check_wheel_characterization(petersen()).status == PASS
    # holes of lengths 5 and 6: not ell-holed for any ell
    assert check_ell_holed_theorem(petersen()).status == NA


@pytest.mark.parametrize("r", [3, 4, 5, 6, 9])
def test_wheels(r):
    w = wheel(r)
    assert check_wheel_characterization(w).status == PASS
    assert check_nonham_gap(w).reason == "hamiltonian"
    # c' = r, c = r + 1: the gap of two fails on every wheel
    res = check_harvey(w, 2)
    assert res.status == FAIL and "hamiltonian" in res.reason


def test_k4():
    k4 = complete(4)
    assert check_thomassen(k4).status == PASS
    assert check_wheel_characterization(k4).status == PASS


def test_k34():
    k34 = complete_bipartite(3, 4)
    assert check_ell_holed_theorem(k34, 4).status == PASS
    assert check_ell_holed_theorem(k34).status == PASS
    assert check_ell_holed_theorem(k34, 5).status == NA
    assert check_small_hole_theorem(k34).status == PASS
    assert check_nonham_gap(k34).status == PASS


def test_cycle_is_out_of_scope_everywhere():
    c6 = cycle(6)
    for name in CHECKS:
        assert run_check(name, c6, {"ell": 6}).status == NA


def test_wheel_characterization_off_the_wheels():
    # K5 minus an edge: c' = 3 and c = 5, not a wheel
    g = from_edge_list(5, [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (0, 1)])
    assert check_wheel_characterization(g).status == PASS
    prism = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    p = Profile(prism)
    assert (p.c, p.ci) == (6, 4)
    assert check_wheel_characterization(p).status == PASS


def test_thomassen_exhaustive_matches_fast():
    for n in range(4, 9):
        for g in enumerate_small_graphs(n, GraphFilter(connectivity=3)):
            assert check_thomassen(g).status == check_thomassen(g, exhaustive=True).status == PASS


def test_harvey_thresholds():
    assert [harvey_min_degree(k) for k in (1, 2, 3, 4, 5)] == [3, 3, 4, 4, 5]
    with pytest.raises(ValueError):
        check_harvey(petersen(), 0)
    assert check_harvey(petersen(), 1).status == PASS
    assert check_harvey(petersen(), 2).status == PASS
    assert check_harvey(petersen(), 3).status == NA  # cubic, needs min degree 4
    assert check_harvey(complete(6), 3).status == PASS  # c' = 3 = 6 - 3
    assert check_harvey(complete(6), 4).status == FAIL  # c' = 3 > 6 - 4


def test_check_ids():
    assert normalize_check_id("Wheel") == "wheel-characterization"
    assert normalize_check_id("small_hole") == "small-hole"
    with pytest.raises(ValueError, match="unknown check"):
        normalize_check_id("collatz")
    with pytest.raises(ValueError):
        check_ell_holed_theorem(petersen(), 3)


def test_population_filter():
    assert population_filter(["thomassen"]) == GraphFilter(3, 3)
    assert population_filter(["thomassen", "nonham-gap"]) == GraphFilter(3, 2)
    assert population_filter(["harvey"], {"harvey_k": 4}) == GraphFilter(4, 2)


def test_profile_flags():
    flags = Profile(petersen()).flags()
    assert flags["n"] == 10 and flags["min_degree"] == 3


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=4, max_n=9))
def test_results_are_consistent_with_the_profile(g):
    p = Profile(g)
    for name in CHECKS:
        res = run_check(name, p, {"ell": 5})
        assert res.status in (PASS, FAIL, NA)
        if res.status != NA:
            assert p.connectivity >= 2
        if res.status == FAIL:
            validate_cycle(g, res.witness.vertices)
            assert verify_certificate(res.certificate(), {"ell": 5})


# -- scans -----------------------------------------------------------------------------------


def _all_checks_pop(max_order=7):
    return Population(1, max_order, GraphFilter(connectivity=2))


def test_fast_and_exact_paths_agree():
    checks = ["thomassen", "harvey", "nonham-gap", "wheel-characterization", "small-hole", "ell-holed"]
    fast = scan(_all_checks_pop(), checks)
    exact = scan_graphs(
        (g for n in range(1, 8) for g in enumerate_small_graphs(n, GraphFilter(connectivity=2))),
        checks,
    )
    assert fast.scanned == exact.scanned
    for c in checks:
        assert fast.tallies[c] == exact.tallies[c], c
    assert sorted(x["graph6"] for x in fast.counterexamples) == sorted(x["graph6"] for x in exact.counterexamples)


def test_tally_invariant_and_report_schema():
    rep = scan(_all_checks_pop(8), ["nonham-gap", "harvey"])
    for t in rep.tallies.values():
        assert t.passed + t.failed + t.skipped == rep.scanned
    doc = json.loads(rep.dumps())
    assert doc["schema"] == SCHEMA and doc["complete"] is True
    assert doc["results"]["nonham-gap"]["failed"] == 0
    assert doc["results"]["harvey"]["failed"] == len([c for c in doc["counterexamples"] if c["check"] == "harvey"]) > 0
    assert "elapsed_seconds" in doc and "elapsed_seconds" not in rep.to_json(stable=True)


def test_certificates_reverify():
    rep = scan(_all_checks_pop(7), ["harvey"], {"harvey_k": 2})
    assert rep.counterexamples
    for cert in rep.counterexamples:
        assert verify_certificate(cert, {"harvey_k": 2})
        for key in ("graph6", "witness", "circumference", "induced_circumference", "longest", "longest_induced", "min_degree"):
            assert key in cert


def test_harvey_counterexamples_up_to_seven_are_the_wheels():
    rep = scan(_all_checks_pop(7), ["harvey"])
    found = {canonical_code(parse_graph6(c["graph6"])) for c in rep.counterexamples}
    assert found == {canonical_code(wheel(r)) for r in (3, 4, 5, 6)}


def test_resume_gives_identical_report(tmp_path):
    pop = _all_checks_pop(8)
    whole = scan(pop, ["harvey", "small-hole"]).dumps(stable=True)
    cursor = str(tmp_path / "cursor.json")
    part = scan(pop, ["harvey", "small-hole"], resume=cursor, limit=1000)
    assert not part.complete and os.path.exists(cursor)
    while not part.complete:
        part = scan(pop, ["harvey", "small-hole"], resume=cursor, limit=1000)
    assert part.dumps(stable=True) == whole
    # a finished cursor short-circuits
    assert scan(pop, ["harvey", "small-hole"], resume=cursor).dumps(stable=True) == whole


def test_cursor_mismatch_is_refused(tmp_path):
    cursor = str(tmp_path / "c.json")
    scan(_all_checks_pop(5), ["harvey"], resume=cursor)
    with pytest.raises(ValueError, match="different scan"):
        scan(_all_checks_pop(6), ["harvey"], resume=cursor)


def test_jobs_do_not_change_the_report():
    pop = _all_checks_pop(8)
    one = scan(pop, ["harvey", "wheel-characterization"], jobs=1).dumps(stable=True)
    two = scan(pop, ["harvey", "wheel-characterization"], jobs=2).dumps(stable=True)
    assert one == two


def test_scan_argument_errors():
    with pytest.raises(ValueError):
        scan(_all_checks_pop(), [])
    with pytest.raises(ValueError):
        scan(_all_checks_pop(), ["harvey"], jobs=0)


def test_stream_scan_counts_unreadable_lines(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("\n".join([write_graph6(petersen()), "not graph6!", "", write_graph6(wheel(5)), "C~"]) + "\n")
    rep = scan(Population(stream=str(path)), ["nonham-gap", "harvey"])
    assert rep.scanned == 3 and rep.unreadable == 1 and rep.complete
    assert rep.tallies["harvey"].failed == 2  # W5 and K4
    assert rep.tallies["nonham-gap"].passed == 1


def test_stream_resume(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("\n".join(write_graph6(wheel(r)) for r in range(3, 12)) + "\n")
    pop = Population(stream=str(path))
    whole = scan(pop, ["wheel"]).dumps(stable=True)
    cursor = str(tmp_path / "cur.json")
    rep = scan(pop, ["wheel"], resume=cursor, limit=4)
    assert rep.scanned == 4 and not rep.complete
    rep = scan(pop, ["wheel"], resume=cursor)
    assert rep.dumps(stable=True) == whole


def test_empty_stream(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    rep = scan(Population(stream=str(path)), ["thomassen"])
    assert rep.scanned == 0 and rep.complete and rep.ok


def test_iter_graph6_lines():
    rows = list(iter_graph6_lines(["C~", "", "??", ">>graph6<<C~"]))
    assert [(i, g is None) for i, g, _ in rows] == [(0, False), (2, True), (3, False)]


def test_dump_layout(tmp_path):
    rep = scan(_all_checks_pop(5), ["harvey"], dump_dir=str(tmp_path))
    files = sorted(os.listdir(tmp_path / "harvey"))
    assert len(files) == len(rep.counterexamples) > 0
    assert all(f.startswith("n") and f.endswith(".json") for f in files)
    lines = (tmp_path / "harvey.g6").read_text().split()
    assert sorted(lines) == sorted(c["graph6"] for c in rep.counterexamples)
    cert = json.loads((tmp_path / "harvey" / files[0]).read_text())
    assert verify_certificate(cert)


# -- reduction step -------------------------------------------------------------------------------


def test_strict_reduction_needs_a_counterexample():
    with pytest.raises(PreconditionError, match="c != c'"):
        equivalence_reduction_step(petersen())
    with pytest.raises(PreconditionError, match="hamiltonian"):
        equivalence_reduction_step(wheel(6))
    with pytest.raises(PreconditionError, match="min degree"):
        equivalence_reduction_step(cycle(6))


def test_relaxed_reduction_on_petersen():
    h, audit = equivalence_reduction_step(petersen(), require_counterexample=False)
    assert h.n == 9 and audit.k == 6
    assert audit.ok, audit.unconditional
    assert audit.contracted_cycle.length == 5
    validate_cycle(petersen(), audit.lifted_cycle.vertices)
    doc = audit.to_json()
    assert doc["n_after"] == 9 and all(doc["unconditional"].values())


def test_relaxed_reduction_on_k34():
    # every rim edge of a 4-hole in K3,4 has common neighbours? no: K3,4 is
    # triangle-free, so the first rim edge is contracted
    h, audit = equivalence_reduction_step(complete_bipartite(3, 4), require_counterexample=False)
    assert audit.k == 4 and audit.contracted_cycle.length == 3
    assert audit.ok


def test_relaxed_reduction_audits_on_small_graphs():
    admissible = 0
    for n in range(4, 9):
        for g in enumerate_small_graphs(n, GraphFilter(min_degree=3, connectivity=2)):
            try:
                _, audit = equivalence_reduction_step(g, require_counterexample=False)
            except PreconditionError:
                continue
            admissible += 1
            assert audit.ok, (write_graph6(g), audit.unconditional)
    assert admissible == 15
