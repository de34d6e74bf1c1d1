"""Per-graph conjecture checks, the edge-contraction reduction step, and
resumable population scans with JSON reports."""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels as K
from .cycles import CycleWitness, circumference, induced_circumference, iter_cycles_of_length, has_chord, validate_cycle
from .generators.enumerate import GraphFilter, graph_from_code, small_graph_codes
from .graph import Graph, Graph6Error, GraphError, contract_edge, iter_bits, parse_graph6, write_graph6
from .recognize import check_ell_holed, hole_lengths, is_wheel

SCHEMA = "chordcycle.report/1"
PASS, FAIL, NA = "pass", "fail", "not_applicable"
CHUNK = 20_000


# -- per-graph facts ---------------------------------------------------------------


class Profile:
    """Lazily computed invariants of one graph, shared between checks."""

    def __init__(self, g: Graph):
        if g.n > K.MAX_KERNEL_N:
            raise ValueError(f"graphs beyond {K.MAX_KERNEL_N} vertices are not supported")
        self.g = g
        self._adj = np.asarray(g.adj, np.int64)

    @cached_property
    def connectivity(self) -> int:
        """Vertex connectivity capped at 3."""
        return int(K.conn_level(self._adj, self.g.n, 3))

    @cached_property
    def min_degree(self) -> int:
        return int(K.min_degree(self._adj, self.g.n))

    @cached_property
    def longest(self) -> tuple[int, CycleWitness] | None:
        return circumference(self.g)

    @cached_property
    def longest_induced(self) -> tuple[int, CycleWitness] | None:
        return induced_circumference(self.g)

    @property
    def c(self) -> int:
        return 0 if self.longest is None else self.longest[0]

    @property
    def ci(self) -> int:
        return 0 if self.longest_induced is None else self.longest_induced[0]

    @cached_property
    def hamiltonian(self) -> bool:
        return bool(K.is_hamiltonian(self._adj, self.g.n))

    @cached_property
    def wheel(self) -> bool:
        return is_wheel(self.g)

    def flags(self) -> dict:
        return {
            "n": self.g.n,
            "min_degree": self.min_degree,
            "connectivity": self.connectivity,
            "hamiltonian": self.hamiltonian,
            "wheel": self.wheel,
        }


@dataclass
class CheckResult:
    check: str
    status: str
    reason: str = ""
    witness: CycleWitness | None = None
    profile: Profile | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def certificate(self) -> dict:
        """Self-contained record of a failure: graph6, both cycle witnesses and
        every hypothesis flag."""
        p = self.profile
        doc = {
            "check": self.check,
            "status": self.status,
            "reason": self.reason,
            "graph6": write_graph6(p.g),
            "witness": None if self.witness is None else self.witness.to_json(),
        }
        doc.update(p.flags())
        doc["circumference"] = p.c or None
        doc["induced_circumference"] = p.ci or None
        doc["longest"] = None if p.longest is None else p.longest[1].to_json()
        doc["longest_induced"] = None if p.longest_induced is None else p.longest_induced[1].to_json()
        return doc


def _prof(g: Graph | Profile) -> Profile:
    return g if isinstance(g, Profile) else Profile(g)


def check_thomassen(g: Graph | Profile, exhaustive: bool = False) -> CheckResult:
    """Every longest cycle of a 3-connected graph has a chord.

    A chordless longest cycle exists exactly when ``c' = c``, so the default
    decides from the two numbers; ``exhaustive`` instead walks every longest
    cycle.
    """
    p = _prof(g)
    if p.connectivity < 3:
        return CheckResult("thomassen", NA, "not 3-connected", profile=p)
    if exhaustive:
        for cyc in iter_cycles_of_length(p.g, p.c):
            if not has_chord(p.g, cyc):
                return CheckResult("thomassen", FAIL, "chordless longest cycle", cyc, p)
        return CheckResult("thomassen", PASS, profile=p)
    if p.ci < p.c:
        return CheckResult("thomassen", PASS, profile=p)
    return CheckResult("thomassen", FAIL, "chordless longest cycle", p.longest_induced[1], p)


def harvey_min_degree(k: int) -> int:
    # ceil(k/2 + 2)
    return (k + 1) // 2 + 2


def check_harvey(g: Graph | Profile, k: int = 2) -> CheckResult:
    if k < 1:
        raise ValueError("k must be at least 1")
    p = _prof(g)
    if p.connectivity < 2 or p.min_degree < harvey_min_degree(k):
        return CheckResult("harvey", NA, f"needs 2-connected with min degree >= {harvey_min_degree(k)}", profile=p)
    if p.ci <= p.c - k:
        return CheckResult("harvey", PASS, profile=p)
    why = f"c' = {p.ci} > c - {k} = {p.c - k}"
    if p.hamiltonian:
        why += " (hamiltonian; compare wheel-characterization)"
    return CheckResult("harvey", FAIL, why, p.longest_induced[1], p)


def _two_conn_deg3(p: Profile) -> bool:
    return p.connectivity >= 2 and p.min_degree >= 3


def check_nonham_gap(g: Graph | Profile) -> CheckResult:
    p = _prof(g)
    if not _two_conn_deg3(p):
        return CheckResult("nonham-gap", NA, "needs 2-connected with min degree >= 3", profile=p)
    if p.hamiltonian:
        return CheckResult("nonham-gap", NA, "hamiltonian", profile=p)
    if p.ci <= p.c - 2:
        return CheckResult("nonham-gap", PASS, profile=p)
    return CheckResult("nonham-gap", FAIL, f"c' = {p.ci}, c = {p.c}", p.longest_induced[1], p)


def check_wheel_characterization(g: Graph | Profile) -> CheckResult:
    p = _prof(g)
    if not _two_conn_deg3(p):
        return CheckResult("wheel-characterization", NA, "needs 2-connected with min degree >= 3", profile=p)
    gap_one = p.c == p.ci + 1
    if gap_one == p.wheel:
        return CheckResult("wheel-characterization", PASS, profile=p)
    why = "c = c' + 1 but not a wheel" if gap_one else "wheel without c = c' + 1"
    return CheckResult("wheel-characterization", FAIL, why, p.longest_induced[1], p)


def check_small_hole_theorem(g: Graph | Profile) -> CheckResult:
    p = _prof(g)
    if not _two_conn_deg3(p):
        return CheckResult("small-hole", NA, "needs 2-connected with min degree >= 3", profile=p)
    if p.hamiltonian:
        return CheckResult("small-hole", NA, "hamiltonian", profile=p)
    if p.ci > 6:
        return CheckResult("small-hole", NA, "c' > 6", profile=p)
    if p.c >= p.ci + 2:
        return CheckResult("small-hole", PASS, profile=p)
    return CheckResult("small-hole", FAIL, f"c = {p.c} < c' + 2 = {p.ci + 2}", p.longest_induced[1], p)


def check_ell_holed_theorem(g: Graph | Profile, ell: int | None = None) -> CheckResult:
    """``ell=None`` tests the graph against the single hole length it has, if any."""
    if ell is not None and ell < 4:
        raise ValueError("ell must be at least 4")
    p = _prof(g)
    if not _two_conn_deg3(p):
        return CheckResult("ell-holed", NA, "needs 2-connected with min degree >= 3", profile=p)
    if p.hamiltonian:
        return CheckResult("ell-holed", NA, "hamiltonian", profile=p)
    if ell is None:
        lengths = hole_lengths(p.g)
        if len(lengths) != 1:
            return CheckResult("ell-holed", NA, "not l-holed for any l", profile=p)
        ell = lengths.pop()
    elif not check_ell_holed(p.g, ell).ok:
        return CheckResult("ell-holed", NA, f"not {ell}-holed", profile=p)
    if p.c >= ell + 2:
        return CheckResult("ell-holed", PASS, profile=p)
    return CheckResult("ell-holed", FAIL, f"{ell}-holed with c = {p.c} < {ell + 2}", p.longest[1], p)


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "thomassen": check_thomassen,
    "harvey": check_harvey,
    "nonham-gap": check_nonham_gap,
    "wheel-characterization": check_wheel_characterization,
    "small-hole": check_small_hole_theorem,
    "ell-holed": check_ell_holed_theorem,
}


def normalize_check_id(name: str) -> str:
    key = name.strip().lower().replace("_", "-")
    aliases = {"wheel": "wheel-characterization", "small-hole-theorem": "small-hole", "ell-holed-theorem": "ell-holed"}
    key = aliases.get(key, key)
    if key not in CHECKS:
        raise ValueError(f"unknown check id {name!r}; known: {', '.join(CHECKS)}")
    return key


def run_check(check: str, g: Graph | Profile, params: dict | None = None) -> CheckResult:
    params = params or {}
    check = normalize_check_id(check)
    if check == "harvey":
        return check_harvey(g, params.get("harvey_k", 2))
    if check == "ell-holed":
        return check_ell_holed_theorem(g, params.get("ell"))
    return CHECKS[check](g)


def population_filter(checks: Iterable[str], params: dict | None = None) -> GraphFilter:
    """Weakest built-in filter containing every graph any of ``checks`` applies to."""
    params = params or {}
    conn, deg = 3, 99
    for c in map(normalize_check_id, checks):
        if c == "thomassen":
            cc, dd = 3, 3
        elif c == "harvey":
            cc, dd = 2, harvey_min_degree(params.get("harvey_k", 2))
        else:
            cc, dd = 2, 3
        conn, deg = min(conn, cc), min(deg, dd)
    return GraphFilter(min_degree=deg, connectivity=conn)


# -- vectorised decisions on batch statistics ----------------------------------------


def _fast_status(check: str, st: np.ndarray, params: dict) -> tuple[np.ndarray, np.ndarray]:
    """(applicable, passed) boolean arrays from ``batch_stats`` rows."""
    conn, md = st[:, K.STAT_CONN], st[:, K.STAT_MINDEG]
    c, ci = st[:, K.STAT_C], st[:, K.STAT_CI]
    ham, wheel, holes = st[:, K.STAT_HAM] == 1, st[:, K.STAT_WHEEL] == 1, st[:, K.STAT_HOLES]
    base = (conn >= 2) & (md >= 3)
    if check == "thomassen":
        return conn >= 3, ci < c
    if check == "harvey":
        k = params.get("harvey_k", 2)
        return (conn >= 2) & (md >= harvey_min_degree(k)), ci <= c - k
    if check == "nonham-gap":
        return base & ~ham, ci <= c - 2
    if check == "wheel-characterization":
        return base, (c == ci + 1) == wheel
    if check == "small-hole":
        return base & ~ham & (ci <= 6), c >= ci + 2
    if check == "ell-holed":
        ell = params.get("ell")
        if ell is None:
            single = (holes > 0) & ((holes & (holes - 1)) == 0)
            ell_arr = np.zeros_like(holes)
            ell_arr[single] = np.log2(holes[single]).astype(np.int64)
            return base & ~ham & single, c >= ell_arr + 2
        if ell >= 63:
            return np.zeros(len(st), bool), np.ones(len(st), bool)
        return base & ~ham & (holes == (1 << ell)), c >= ell + 2
    raise ValueError(check)


def _stats_chunk(args) -> np.ndarray:
    codes, n = args
    out = np.empty((len(codes), K.NUM_STATS), np.int64)
    K.batch_stats(codes, n, out)
    return out


# -- reports ------------------------------------------------------------------------------


@dataclass
class Population:
    """Either the built-in classes of orders ``min_order..max_order`` or a
    graph6 stream."""

    min_order: int = 1
    max_order: int = 1
    filter: GraphFilter = field(default_factory=GraphFilter)
    stream: str | None = None

    @property
    def ident(self) -> str:
        if self.stream is not None:
            return f"stream:{self.stream}"
        f = self.filter
        return f"builtin:n={self.min_order}..{self.max_order}:conn>={f.connectivity}:mindeg>={f.min_degree}"

    def to_json(self) -> dict:
        doc = {"id": self.ident}
        if self.stream is not None:
            doc["source"] = self.stream
        else:
            doc.update(
                source="builtin",
                min_order=self.min_order,
                max_order=self.max_order,
                connectivity=self.filter.connectivity,
                min_degree=self.filter.min_degree,
            )
        return doc


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    def to_json(self) -> dict:
        return {"passed": self.passed, "failed": self.failed, "skipped": self.skipped}


@dataclass
class CheckReport:
    population: Population
    checks: list[str]
    params: dict = field(default_factory=dict)
    scanned: int = 0
    unreadable: int = 0
    tallies: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0
    cursor: dict | None = None
    complete: bool = False

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self, stable: bool = False) -> dict:
        doc = {
            "schema": SCHEMA,
            "population": self.population.to_json(),
            "checks": list(self.checks),
            "params": {k: v for k, v in sorted(self.params.items()) if v is not None},
            "scanned": self.scanned,
            "unreadable": self.unreadable,
            "results": {c: self.tallies[c].to_json() for c in self.checks},
            "counterexamples": sorted(self.counterexamples, key=lambda d: (d["check"], d["graph6"])),
            "complete": self.complete,
            "cursor": self.cursor,
        }
        if not stable:
            doc["elapsed_seconds"] = round(self.elapsed, 3)
        return doc

    def dumps(self, stable: bool = False) -> str:
        return json.dumps(self.to_json(stable), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        lines = [f"population: {self.population.ident}", f"scanned: {self.scanned}  unreadable: {self.unreadable}"]
        for c in self.checks:
            t = self.tallies[c]
            lines.append(f"{c}: passed {t.passed}, failed {t.failed}, skipped {t.skipped}")
        for cx in sorted(self.counterexamples, key=lambda d: (d["check"], d["graph6"])):
            lines.append(f"counterexample [{cx['check']}] {cx['graph6']}: {cx['reason']}")
        if not self.complete:
            lines.append("scan incomplete; resume from the cursor")
        return lines


def verify_certificate(cert: dict, params: dict | None = None) -> bool:
    """Re-run the named check from the graph6 string alone and confirm the failure."""
    g = parse_graph6(cert["graph6"])
    res = run_check(cert["check"], g, params)
    if res.status != FAIL:
        return False
    if cert.get("witness") is not None:
        validate_cycle(g, cert["witness"])
    return True


def _dump(dump_dir: str | None, cert: dict) -> None:
    if dump_dir is None:
        return
    sub = os.path.join(dump_dir, cert["check"])
    os.makedirs(sub, exist_ok=True)
    digest = hashlib.sha1(cert["graph6"].encode()).hexdigest()[:12]
    with open(os.path.join(sub, f"n{cert['n']}-{digest}.json"), "w") as fh:
        json.dump(cert, fh, indent=2, sort_keys=True)
    with open(os.path.join(dump_dir, f"{cert['check']}.g6"), "a") as fh:
        fh.write(cert["graph6"] + "\n")


def _save_cursor(path: str | None, report: CheckReport) -> None:
    if path is None:
        return
    doc = {
        "population": report.population.ident,
        "checks": report.checks,
        "params": report.params,
        "position": report.cursor,
        "scanned": report.scanned,
        "unreadable": report.unreadable,
        "tallies": {c: t.to_json() for c, t in report.tallies.items()},
        "counterexamples": report.counterexamples,
        "complete": report.complete,
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def _load_cursor(path: str, report: CheckReport) -> None:
    with open(path) as fh:
        doc = json.load(fh)
    if doc["population"] != report.population.ident or doc["checks"] != report.checks or doc["params"] != report.params:
        raise ValueError("cursor file belongs to a different scan")
    report.cursor = doc["position"]
    report.scanned = doc["scanned"]
    report.unreadable = doc["unreadable"]
    report.tallies = {c: Tally(**t) for c, t in doc["tallies"].items()}
    report.counterexamples = doc["counterexamples"]
    report.complete = doc["complete"]


def _record(report: CheckReport, res: CheckResult, dump_dir: str | None) -> None:
    t = report.tallies[res.check]
    if res.status == PASS:
        t.passed += 1
    elif res.status == NA:
        t.skipped += 1
    else:
        t.failed += 1
        cert = res.certificate()
        report.counterexamples.append(cert)
        _dump(dump_dir, cert)


def scan(
    population: Population,
    checks: Iterable[str],
    params: dict | None = None,
    resume: str | None = None,
    jobs: int = 1,
    dump_dir: str | None = None,
    limit: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> CheckReport:
    """Apply ``checks`` to every graph of ``population``.

    ``resume`` names a cursor file that is read if present and rewritten after
    every chunk.  ``limit`` stops (resumably) once that many graphs have been
    scanned in this call.  The report does not depend on ``jobs``.
    """
    checks = [normalize_check_id(c) for c in checks]
    if not checks:
        raise ValueError("no checks requested")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    params = {k: v for k, v in (params or {}).items() if v is not None}
    report = CheckReport(population, checks, params, tallies={c: Tally() for c in checks})
    if resume is not None and os.path.exists(resume):
        _load_cursor(resume, report)
    if report.complete:
        return report
    t0 = time.perf_counter()
    if population.stream is None:
        _scan_builtin(report, jobs, dump_dir, limit, resume, progress)
    else:
        _scan_stream(report, dump_dir, limit, resume)
    report.elapsed = time.perf_counter() - t0
    _save_cursor(resume, report)
    return report


def _scan_builtin(report, jobs, dump_dir, limit, resume, progress) -> None:
    pop = report.population
    start = report.cursor or {"order": pop.min_order, "index": 0}
    done_here = 0
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for n in range(start["order"], pop.max_order + 1):
            codes = small_graph_codes(n, pop.filter)
            first = start["index"] if n == start["order"] else 0
            bounds = [(i, min(i + CHUNK, len(codes))) for i in range(first, len(codes), CHUNK)]
            work = ((codes[a:b], n) for a, b in bounds)
            results = pool.map(_stats_chunk, work) if pool else map(_stats_chunk, work)
            for (a, b), st in zip(bounds, results):
                _apply_chunk(report, codes[a:b], n, st, dump_dir)
                report.scanned += b - a
                done_here += b - a
                report.cursor = {"order": n, "index": b}
                _save_cursor(resume, report)
                if progress:
                    progress(f"n={n}: {b}/{len(codes)}")
                if limit is not None and done_here >= limit:
                    return
            report.cursor = {"order": n + 1, "index": 0}
        report.complete = True
    finally:
        if pool:
            pool.shutdown()


def _apply_chunk(report: CheckReport, codes: np.ndarray, n: int, st: np.ndarray, dump_dir) -> None:
    for check in report.checks:
        app, ok = _fast_status(check, st, report.params)
        t = report.tallies[check]
        t.skipped += int((~app).sum())
        t.passed += int((app & ok).sum())
        for i in np.flatnonzero(app & ~ok):
            res = run_check(check, graph_from_code(int(codes[i]), n), report.params)
            if res.status != FAIL:
                raise AssertionError(f"fast and exact paths disagree on {write_graph6(res.profile.g)} for {check}")
            t.failed += 1
            cert = res.certificate()
            report.counterexamples.append(cert)
            _dump(dump_dir, cert)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | None, str]]:
    """``(line_number, graph or None, text)`` for every non-blank line; the
    header ``>>graph6<<`` is accepted only on a graph line."""
    for i, raw in enumerate(lines):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except (Graph6Error, GraphError):
            yield i, None, text
            continue
        yield i, g, text


def _scan_stream(report, dump_dir, limit, resume) -> None:
    path = report.population.stream
    skip = (report.cursor or {}).get("line", 0)
    done_here = 0
    fh = open(path) if path != "-" else None
    src = fh if fh is not None else sys.stdin
    try:
        for i, g, _ in iter_graph6_lines(src):
            if i < skip:
                continue
            if g is None:
                report.unreadable += 1
            else:
                p = Profile(g)
                for check in report.checks:
                    _record(report, run_check(check, p, report.params), dump_dir)
                report.scanned += 1
                done_here += 1
            report.cursor = {"line": i + 1}
            if limit is not None and done_here >= limit:
                return
        report.complete = True
    finally:
        if fh is not None:
            fh.close()


def scan_graphs(graphs: Iterable[Graph], checks: Iterable[str], params: dict | None = None, label: str = "inline") -> CheckReport:
    """Scan an in-memory collection (no resume support)."""
    checks = [normalize_check_id(c) for c in checks]
    params = {k: v for k, v in (params or {}).items() if v is not None}
    report = CheckReport(Population(stream=label), checks, params, tallies={c: Tally() for c in checks})
    t0 = time.perf_counter()
    for g in graphs:
        p = Profile(g)
        for check in checks:
            _record(report, run_check(check, p, params), None)
        report.scanned += 1
    report.complete = True
    report.elapsed = time.perf_counter() - t0
    return report


# -- reduction step ------------------------------------------------------------------------


class PreconditionError(ValueError):
    pass


@dataclass
class ReductionAudit:
    k: int
    cycle: CycleWitness
    edge: tuple[int, int]
    relabel: list[int]
    contracted_cycle: CycleWitness
    n_before: int
    n_after: int
    contracted_cycle_induced: bool
    min_degree_after: int
    induced_circumference_after: int
    circumference_after: int
    lifted_cycle: CycleWitness
    hamiltonian_after: bool
    two_connected_after: bool
    lifting_implication: bool | None

    @property
    def unconditional(self) -> dict[str, bool]:
        """Claims that must hold for every admissible input."""
        return {
            "one_vertex_fewer": self.n_after == self.n_before - 1,
            "contracted_cycle_induced": self.contracted_cycle_induced and self.contracted_cycle.length == self.k - 1,
            "min_degree_at_least_3": self.min_degree_after >= 3,
            "induced_circumference_at_least_k_minus_1": self.induced_circumference_after >= self.k - 1,
            "lifted_cycle_not_shorter": self.lifted_cycle.length >= self.circumference_after,
        }

    @property
    def ok(self) -> bool:
        return all(self.unconditional.values()) and self.lifting_implication is not False

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "cycle": self.cycle.to_json(),
            "edge": list(self.edge),
            "contracted_cycle": self.contracted_cycle.to_json(),
            "n_before": self.n_before,
            "n_after": self.n_after,
            "min_degree_after": self.min_degree_after,
            "induced_circumference_after": self.induced_circumference_after,
            "circumference_after": self.circumference_after,
            "lifted_cycle": self.lifted_cycle.to_json(),
            "hamiltonian_after": self.hamiltonian_after,
            "two_connected_after": self.two_connected_after,
            "lifting_implication": self.lifting_implication,
            "unconditional": self.unconditional,
        }


def _lift(g: Graph, cyc: CycleWitness, merged: int, relabel: list[int], u: int, v: int) -> CycleWitness:
    """Pull a cycle of ``G/uv`` back to ``G`` through the merged vertex."""
    back = {relabel[w]: w for w in range(g.n) if w not in (u, v)}
    vs = list(cyc.vertices)
    if merged not in vs:
        return CycleWitness(tuple(back[x] for x in vs))
    i = vs.index(merged)
    vs = vs[i + 1:] + vs[:i]  # the merged vertex sits between vs[-1] and vs[0]
    path = [back[x] for x in vs]
    x, y = path[-1], path[0]
    for mid in ([u], [v], [u, v], [v, u]):
        if g.has_edge(x, mid[0]) and g.has_edge(mid[-1], y):
            return CycleWitness(tuple(path + mid))
    raise AssertionError("merged vertex cannot be expanded")


def equivalence_reduction_step(g: Graph, require_counterexample: bool = True) -> tuple[Graph, ReductionAudit]:
    """Contract one rim edge of a longest chordless cycle and audit the result.

    With ``require_counterexample`` the input must be 2-connected,
    non-hamiltonian, of min degree >= 3 and have ``c = c' >= 4``, i.e. break
    the non-hamiltonian gap statement.  Without it ``c = c'`` is dropped: the
    cycle is a longest chordless one of length ``k = c' >= 4`` and the first
    rim edge whose ends have no common neighbour is contracted.
    """
    p = Profile(g)
    if p.connectivity < 2 or p.min_degree < 3:
        raise PreconditionError("needs a 2-connected graph with min degree >= 3")
    if p.hamiltonian:
        raise PreconditionError("graph is hamiltonian")
    k = p.ci
    if k < 4:
        raise PreconditionError("longest chordless cycle is a triangle")
    if require_counterexample and p.c != k:
        raise PreconditionError("c != c'")
    cyc = p.longest_induced[1]
    vs = cyc.vertices
    edge = None
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        if not g.adj[a] & g.adj[b]:
            edge = (a, b)
            break
    if edge is None:
        raise PreconditionError("every rim edge lies in a triangle")
    u, v = edge
    h, relabel = contract_edge(g, u, v)
    merged = relabel[u]
    seq = []
    for w in vs:
        x = relabel[w]
        if not seq or seq[-1] != x:
            seq.append(x)
    if seq[0] == seq[-1]:
        seq.pop()
    contracted = CycleWitness.canonical(seq)
    try:
        validate_cycle(h, contracted.vertices, chordless=True)
        induced = True
    except ValueError:
        induced = False
    ph = Profile(h)
    lifted = _lift(g, ph.longest[1], merged, relabel, u, v)
    validate_cycle(g, lifted.vertices)
    lifting = None
    if ph.connectivity >= 2 and ph.min_degree >= 3 and not ph.hamiltonian and ph.c >= ph.ci + 2:
        lifting = p.c >= k + 1
    audit = ReductionAudit(
        k=k,
        cycle=cyc,
        edge=edge,
        relabel=relabel,
        contracted_cycle=contracted,
        n_before=g.n,
        n_after=h.n,
        contracted_cycle_induced=induced,
        min_degree_after=ph.min_degree,
        induced_circumference_after=ph.ci,
        circumference_after=ph.c,
        lifted_cycle=lifted,
        hamiltonian_after=ph.hamiltonian,
        two_connected_after=ph.connectivity >= 2,
        lifting_implication=lifting,
    )
    return h, audit


def rim_common_neighbour(g: Graph, cyc: CycleWitness) -> tuple[int, int, int] | None:
    """Consecutive rim vertices of ``cyc`` with a common neighbour ``(a, b, w)``."""
    vs = cyc.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        common = g.adj[a] & g.adj[b]
        if common:
            return a, b, next(iter_bits(common))
    return None
