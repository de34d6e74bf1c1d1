"""Command line: ``analyze`` single graphs, ``generate`` families, ``verify``
statements over populations.

Exit codes: 0 success / no counterexample, 1 counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import __version__
from .cycles import cycle_stats
from .generators import (
    BlowupCycleSpec,
    FrameworkError,
    FrameworkSpec,
    GraphFilter,
    SpecError,
    blowup_of_cycle,
    canonical_framework_spec,
    framework,
    framework_witness_cycle,
    random_blowup_cycle_spec,
    wheel,
)
from .generators.enumerate import max_order
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    cut_vertex,
    is_connected,
    is_three_connected,
    is_two_connected,
    min_degree,
    parse_edge_list_text,
    parse_graph6,
    two_vertex_cut,
    write_graph6,
)
from .harness import CHECKS, Population, normalize_check_id, population_filter, scan
from .recognize import wheel_structure

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    input_format: str = "graph6"
    json_output: bool = False
    min_order: int = 1
    max_order: int = 8
    min_degree: int | None = None
    checks: tuple[str, ...] = ()
    ell: int | None = None
    harvey_k: int = 2
    spec_path: str | None = None
    resume: str | None = None
    jobs: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if self.min_order < 1 or self.max_order < self.min_order:
            raise UsageError("order bounds must satisfy 1 <= min-order <= max-order")
        if self.max_order > max_order():
            raise UsageError(f"--max-order {self.max_order} exceeds the built-in guard {max_order()} (see CHORDCYCLE_MAX_N)")
        if self.ell is not None and self.ell < 4:
            raise UsageError("--ell must be at least 4")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="chordcycle", description="Longest and chordless cycles of small graphs.")
    ap.add_argument("--version", action="version", version=f"chordcycle {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", help="cycle statistics of graphs read from a file or stdin")
    an.add_argument("--input", "-i", default="-", help="path, or - for stdin")
    an.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")
    an.add_argument("--json", action="store_true")

    gen = sub.add_parser("generate", help="emit graphs of a family as graph6")
    gen.add_argument("family", choices=("wheel", "blowup-cycle", "framework"))
    gen.add_argument("--rim", type=int, default=None, help="wheel rim length")
    gen.add_argument("--spec", default=None, help="JSON spec file")
    gen.add_argument("--ell", type=int, default=None)
    gen.add_argument("--k", type=int, default=3, help="vertical paths in a canonical framework")
    gen.add_argument("--canonical", action="store_true", help="use the canonical framework family")
    gen.add_argument("--random", type=int, default=0, metavar="COUNT", help="random blow-up specs to draw")
    gen.add_argument("--max-order", type=int, default=14)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="scan a population against one or more statements")
    ver.add_argument("--conjecture", "-c", action="append", required=True, help=f"one of {', '.join(CHECKS)}; repeatable")
    ver.add_argument("--min-order", type=int, default=1)
    ver.add_argument("--max-order", type=int, default=8)
    ver.add_argument("--min-degree", type=int, default=None, help="override the population's degree filter")
    ver.add_argument("--ell", type=int, default=None, help="hole length for ell-holed (default: inferred per graph)")
    ver.add_argument("--harvey-k", type=int, default=2)
    ver.add_argument("--input", "-i", "--stream", dest="input", default=None, help="graph6 stream instead of the built-in enumeration")
    ver.add_argument("--format", choices=("graph6",), default="graph6")
    ver.add_argument("--resume", default=None, help="cursor file, read if present and updated while scanning")
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--dump", default=None, help="directory for counterexample certificates")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--json", action="store_true")
    return ap


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "edge-list":
        return [parse_edge_list_text(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line.strip()))
        except Graph6Error as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc
    if not graphs:
        raise UsageError("no graphs in input")
    return graphs


def _analysis(g: Graph) -> dict:
    st = cycle_stats(g)
    cv = cut_vertex(g) if g.n >= 3 else None
    cut2 = two_vertex_cut(g) if g.n >= 4 else None
    ws = wheel_structure(g)
    doc = {
        "graph6": write_graph6(g),
        "n": g.n,
        "edges": g.num_edges,
        "min_degree": min_degree(g),
        "connected": is_connected(g),
        "two_connected": is_two_connected(g),
        "three_connected": is_three_connected(g),
        "cut_vertex": cv,
        "two_cut": None if cut2 is None else list(cut2),
        "wheel": None if ws is None else {"center": ws[0], "rim": ws[1]},
    }
    doc.update(st.to_json())
    return doc


def _human_analysis(doc: dict) -> str:
    def fmt(x):
        return "none" if x is None else str(x)

    lines = [
        f"graph {doc['graph6']}: n={doc['n']} m={doc['edges']} min degree={doc['min_degree']}",
        f"  connected={doc['connected']} 2-connected={doc['two_connected']} 3-connected={doc['three_connected']}",
        f"  c={fmt(doc['circumference'])} c'={fmt(doc['induced_circumference'])} hamiltonian={doc['hamiltonian']}",
        f"  longest cycle: {fmt(doc['longest'])}",
        f"  longest chordless cycle: {fmt(doc['longest_induced'])}",
    ]
    if doc["wheel"]:
        lines.append(f"  wheel: center {doc['wheel']['center']}, rim {doc['wheel']['rim']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    graphs = _load_graphs(_read(args.input), args.format)
    docs = [_analysis(g) for g in graphs]
    if args.json:
        print(json.dumps(docs if len(docs) > 1 else docs[0], indent=2, sort_keys=True))
    else:
        print("\n".join(_human_analysis(d) for d in docs))
    return EXIT_OK


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc


def cmd_generate(args) -> int:
    out = []
    if args.family == "wheel":
        if args.rim is None:
            raise UsageError("generate wheel needs --rim")
        out.append({"graph6": write_graph6(wheel(args.rim))})
    elif args.family == "blowup-cycle":
        specs = []
        if args.spec:
            specs.append(BlowupCycleSpec.from_json(_load_json(args.spec)))
        elif args.random:
            if args.ell is None:
                raise UsageError("random blow-ups need --ell")
            rng = random.Random(args.seed)
            specs = [random_blowup_cycle_spec(rng, args.ell, args.max_order) for _ in range(args.random)]
        else:
            raise UsageError("generate blowup-cycle needs --spec or --random COUNT")
        for spec in specs:
            g, part = blowup_of_cycle(spec)
            out.append({"graph6": write_graph6(g), "parts": [list(p) for p in part.parts], "spec": spec.to_json()})
    else:
        if args.spec:
            spec = FrameworkSpec.from_json(_load_json(args.spec))
        elif args.canonical:
            if args.ell is None:
                raise UsageError("canonical frameworks need --ell")
            spec = canonical_framework_spec(args.ell, args.k)
        else:
            raise UsageError("generate framework needs --canonical or --spec")
        fg = framework(spec)
        wit = framework_witness_cycle(fg)
        out.append({
            "graph6": write_graph6(fg.G),
            "n": fg.G.n,
            "witness": wit.to_json(),
            "witness_length": wit.length,
            "labels": [fg.label_of(v) for v in range(fg.G.n)],
        })
    if args.json:
        print(json.dumps(out if len(out) > 1 else out[0], indent=2, sort_keys=True))
    else:
        for doc in out:
            print(doc["graph6"])
            if "witness" in doc:
                print(f"witness ({doc['witness_length']}): {' '.join(map(str, doc['witness']))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        checks = [normalize_check_id(c) for arg in args.conjecture for c in arg.split(",") if c]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cfg = CliConfig(
        min_order=args.min_order,
        max_order=args.max_order,
        min_degree=args.min_degree,
        checks=tuple(checks),
        ell=args.ell,
        harvey_k=args.harvey_k,
        resume=args.resume,
        jobs=args.jobs,
        seed=args.seed,
    )
    if args.input is None:
        cfg.validate()
    elif cfg.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if cfg.harvey_k < 1:
        raise UsageError("--harvey-k must be at least 1")
    params = {"ell": cfg.ell, "harvey_k": cfg.harvey_k if "harvey" in checks else None}
    if args.input is not None:
        if args.input != "-":
            try:
                open(args.input).close()
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc}") from exc
        pop = Population(stream=args.input)
    else:
        flt = population_filter(checks, params)
        if cfg.min_degree is not None:
            flt = GraphFilter(min_degree=cfg.min_degree, connectivity=flt.connectivity)
        pop = Population(cfg.min_order, cfg.max_order, flt)
    try:
        report = scan(pop, checks, params, resume=cfg.resume, jobs=cfg.jobs, dump_dir=args.dump)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(report.dumps())
    else:
        print("\n".join(report.summary_lines()))
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {"analyze": cmd_analyze, "generate": cmd_generate, "verify": cmd_verify}[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"chordcycle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, Graph6Error, SpecError, FrameworkError) as exc:
        print(f"chordcycle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
