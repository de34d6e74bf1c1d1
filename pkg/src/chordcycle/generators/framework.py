"""Odd and even ell-frameworks, their clique blow-ups, and the explicit
long cycle through two vertical paths.

Vertices of the base graph ``D`` carry string labels: ``a0..ak``, ``b1..bk``
(plus ``b0`` when ell is even), ``p{i}.{j}`` for the ``j``-th interior vertex
of the vertical path from ``a{i}`` to ``b{i}``, and any extra names used
inside tents.  Clique copies in the blow-up are labelled ``{t}#{r}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from ..cycles import CycleWitness, validate_cycle
from ..graph import Graph, from_edge_list
from ..recognize import BlowupVerdict, OrderedBipartition, check_ell_holed, half_graph_violation, obeys_orderings
from .arborescence import Arborescence, coarboreal

_RESERVED = re.compile(r"^(a\d+|b\d+|p\d+\.\d+)$")


class FrameworkError(ValueError):
    pass


@dataclass(frozen=True)
class Tent:
    """An arborescence with ``apex`` whose leaves are exactly ``base``;
    ``edges=None`` means the star from the apex."""

    apex: str
    base: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        if self.edges is not None:
            object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))

    def arborescence(self) -> Arborescence:
        if self.edges is None:
            return Arborescence.star(self.apex, self.base)
        t = Arborescence.from_edges(self.edges, (self.apex,))
        if t.apex != self.apex or set(t.leaves) != set(self.base):
            raise FrameworkError(f"tent at {self.apex} does not have apex {self.apex} and leaves {self.base}")
        return t

    def to_json(self) -> dict:
        return {"apex": self.apex, "base": list(self.base), "edges": None if self.edges is None else [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc: dict) -> Tent:
        edges = doc.get("edges")
        return cls(doc["apex"], tuple(doc["base"]), None if edges is None else tuple(tuple(e) for e in edges))


def _idx(label: str) -> int:
    return int(label[1:])


@dataclass(frozen=True)
class FrameworkSpec:
    ell: int
    k: int
    m: int = 0
    upper_tents: tuple[Tent, ...] = ()
    lower_tents: tuple[Tent, ...] = ()
    t_links: dict = field(default_factory=dict)
    s_links: dict = field(default_factory=dict)
    blow_sizes: dict = field(default_factory=dict)
    profiles: dict = field(default_factory=dict)

    @property
    def parity(self) -> str:
        return "odd" if self.ell % 2 else "even"

    def path_length(self, i: int) -> int:
        if self.ell % 2:
            return (self.ell - 3) // 2
        return self.ell // 2 - 1 if i <= self.m else self.ell // 2 - 2

    def path_labels(self, i: int) -> list[str]:
        inner = [f"p{i}.{j}" for j in range(1, self.path_length(i))]
        return [f"a{i}", *inner, f"b{i}"]

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "parity": self.parity,
            "k": self.k,
            "m": self.m,
            "upper_tents": [t.to_json() for t in self.upper_tents],
            "lower_tents": [t.to_json() for t in self.lower_tents],
            "t_links": {str(i): v for i, v in sorted(self.t_links.items())},
            "s_links": {str(i): v for i, v in sorted(self.s_links.items())},
            "blow_sizes": dict(sorted(self.blow_sizes.items())),
            "profiles": {key: list(v) for key, v in sorted(self.profiles.items())},
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> FrameworkSpec:
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            ell = int(doc["ell"])
            if "parity" in doc and doc["parity"] != ("odd" if ell % 2 else "even"):
                raise FrameworkError("parity does not match ell")
            return cls(
                ell=ell,
                k=int(doc["k"]),
                m=int(doc.get("m", 0)),
                upper_tents=tuple(Tent.from_json(t) for t in doc.get("upper_tents", ())),
                lower_tents=tuple(Tent.from_json(t) for t in doc.get("lower_tents", ())),
                t_links={int(i): v for i, v in doc.get("t_links", {}).items()},
                s_links={int(i): v for i, v in doc.get("s_links", {}).items()},
                blow_sizes={t: int(s) for t, s in doc.get("blow_sizes", {}).items()},
                profiles={key: tuple(v) for key, v in doc.get("profiles", {}).items()},
            )
        except (KeyError, TypeError) as exc:
            raise FrameworkError(f"malformed framework spec: {exc}") from exc


def canonical_framework_spec(ell: int, k: int = 3, blow: int = 2) -> FrameworkSpec:
    """``m = 0`` with one star tent on ``a0``; even ell pairs it with the star
    on ``b0``.  Each ``a_i'`` (the path neighbour of ``a_i``) becomes a clique
    of size ``blow``."""
    a_base = tuple(f"a{i}" for i in range(1, k + 1))
    upper = (Tent("a0", a_base),)
    lower = () if ell % 2 else (Tent("b0", tuple(f"b{i}" for i in range(1, k + 1))),)
    sizes = {f"p{i}.1": blow for i in range(1, k + 1)} if blow > 1 else {}
    return FrameworkSpec(ell=ell, k=k, m=0, upper_tents=upper, lower_tents=lower, blow_sizes=sizes)


@dataclass
class FrameworkGraph:
    spec: FrameworkSpec
    D: Graph
    G: Graph
    labels: list[str]
    W: dict[str, tuple[int, ...]]
    T: Arborescence
    S: Arborescence

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def label_of(self, v: int) -> str:
        for t, part in self.W.items():
            if v in part:
                r = part.index(v)
                return t if r == 0 else f"{t}#{r}"
        raise KeyError(v)


def _interval(labels: tuple[str, ...], prefix: str, lo: int, hi: int) -> bool:
    if not labels or any(not re.fullmatch(prefix + r"\d+", x) for x in labels):
        return False
    idx = sorted(_idx(x) for x in labels)
    return idx == list(range(idx[0], idx[-1] + 1)) and lo <= idx[0] and idx[-1] <= hi


def _check_spec(spec: FrameworkSpec) -> None:
    ell, k, m = spec.ell, spec.k, spec.m
    if ell < 7:
        raise FrameworkError("ell-frameworks need ell >= 7")
    if k < 2:
        raise FrameworkError("need at least two vertical paths")
    if not 0 <= m < k:
        raise FrameworkError("need 0 <= m < k")
    odd = ell % 2 == 1
    if not spec.upper_tents or not any(t.apex == "a0" for t in spec.upper_tents):
        raise FrameworkError("there must be an upper tent with apex a0")
    for t in spec.upper_tents:
        if not re.fullmatch(r"a\d+", t.apex) or _idx(t.apex) > m:
            raise FrameworkError(f"upper tent apex {t.apex} must be one of a0..a{m}")
        if not _interval(t.base, "a", m + 1, k):
            raise FrameworkError(f"upper tent base {t.base} must be an interval of a{m + 1}..a{k}")
    covered = [x for t in spec.upper_tents for x in t.base]
    if sorted(covered, key=_idx) != [f"a{i}" for i in range(m + 1, k + 1)]:
        raise FrameworkError(f"upper tent bases must partition a{m + 1}..a{k}")
    if odd:
        if m == 0 and spec.lower_tents:
            raise FrameworkError("with m = 0 there are no lower tents")
        for t in spec.lower_tents:
            if not re.fullmatch(r"b\d+", t.apex) or not m + 1 <= _idx(t.apex) <= k:
                raise FrameworkError(f"lower tent apex {t.apex} must be one of b{m + 1}..b{k}")
            if not _interval(t.base, "b", 1, m + 1):
                raise FrameworkError(f"lower tent base {t.base} must be an interval of b1..b{m + 1}")
    else:
        if not any(t.apex == f"a{m}" for t in spec.upper_tents):
            raise FrameworkError(f"there must be an upper tent with apex a{m}")
        if len(spec.lower_tents) != len(spec.upper_tents):
            raise FrameworkError("upper and lower tents must be paired")
        lower = {tuple(_idx(x) for x in t.base): t for t in spec.lower_tents}
        for up in spec.upper_tents:
            key = tuple(_idx(x) for x in up.base)
            low = lower.get(key)
            i = _idx(up.apex)
            want = "b0" if i == m else f"b{i + 1}"
            if low is None or low.apex != want:
                raise FrameworkError(f"upper tent at {up.apex} needs a paired lower tent at {want} on the same base")
            phi = {f"a{j}": f"b{j}" for j in key}
            if coarboreal(up.arborescence(), low.arborescence(), phi) is None:
                raise FrameworkError(f"tents at {up.apex} and {want} are not coarboreal")
    for t in spec.upper_tents + spec.lower_tents:
        for u, v in t.edges or ():
            for x in (u, v):
                if _RESERVED.match(x) and x not in (t.apex, *t.base):
                    raise FrameworkError(f"tent at {t.apex} uses reserved label {x}")
    path_vertices = {x for i in range(1, k + 1) for x in spec.path_labels(i)}
    for t, size in spec.blow_sizes.items():
        if size < 1:
            raise FrameworkError(f"blow size of {t} must be positive")
        if size > 1 and t not in path_vertices:
            raise FrameworkError(f"only vertical path vertices may be blown up, not {t}")


def _assemble(spec: FrameworkSpec) -> tuple[Arborescence, Arborescence]:
    k, m = spec.k, spec.m
    odd = spec.ell % 2 == 1
    upper = {t.apex: t.arborescence() for t in spec.upper_tents}
    lower = {t.apex: t.arborescence() for t in spec.lower_tents}

    def link_source(tents: dict, owner: str, links: dict, i: int) -> str:
        src = links.get(i, owner)
        if owner in tents:
            tree = tents[owner]
            if src not in tree.nodes or src in tree.leaves:
                raise FrameworkError(f"link into {i} must leave a nonleaf of the tent at {owner}")
        elif src != owner:
            raise FrameworkError(f"link into {i} must come from {owner}")
        return src

    t_edges = [e for t in upper.values() for e in t.edges]
    for i in range(1, m + 1):
        t_edges.append((link_source(upper, f"a{i - 1}", spec.t_links, i), f"a{i}"))
    try:
        T = Arborescence.from_edges(t_edges, [f"a{i}" for i in range(k + 1)])
    except ValueError as exc:
        raise FrameworkError(f"T is not an arborescence: {exc}") from exc
    if T.apex != "a0":
        raise FrameworkError("T must have apex a0")

    s_edges = [e for t in lower.values() for e in t.edges]
    if odd:
        for i in range(m + 1, k):
            s_edges.append((link_source(lower, f"b{i + 1}", spec.s_links, i), f"b{i}"))
        apex = f"b{k}"
        nodes = [f"b{i}" for i in range(1, k + 1)]
    else:
        for i in range(1, m):
            s_edges.append((link_source(lower, f"b{i + 1}", spec.s_links, i), f"b{i}"))
        if m >= 1:
            s_edges.append((link_source(lower, "b0", spec.s_links, m), f"b{m}"))
        apex = "b0"
        nodes = [f"b{i}" for i in range(0, k + 1)]
    try:
        S = Arborescence.from_edges(s_edges, nodes)
    except ValueError as exc:
        raise FrameworkError(f"S is not an arborescence: {exc}") from exc
    if S.apex != apex:
        raise FrameworkError(f"S must have apex {apex}")
    if set(T.nodes) & set(S.nodes):
        raise FrameworkError("T and S share vertices")
    return T, S


def _d_edges(spec: FrameworkSpec, T: Arborescence, S: Arborescence) -> set[frozenset]:
    out = set()
    for tree in (T, S):
        for v in tree.nodes:
            for a in tree.ancestors(v):
                out.add(frozenset((a, v)))
    for i in range(1, spec.k + 1):
        p = spec.path_labels(i)
        out.update(frozenset(e) for e in zip(p, p[1:]))
    return out


def framework(spec: FrameworkSpec, validate: bool = True) -> FrameworkGraph:
    """Build ``D`` and its blow-up ``G``.  With ``validate`` the blow-up
    conditions are re-checked and ``G`` must be ell-holed."""
    _check_spec(spec)
    T, S = _assemble(spec)
    labels: list[str] = []
    for name in list(T.nodes) + list(S.nodes):
        if name not in labels:
            labels.append(name)
    for i in range(1, spec.k + 1):
        for name in spec.path_labels(i):
            if name not in labels:
                labels.append(name)
    index = {t: i for i, t in enumerate(labels)}
    d_edges = _d_edges(spec, T, S)
    D = from_edge_list(len(labels), [tuple(index[x] for x in e) for e in d_edges])

    W: dict[str, tuple[int, ...]] = {}
    nxt = len(labels)
    for t in labels:
        size = spec.blow_sizes.get(t, 1)
        W[t] = (index[t], *range(nxt, nxt + size - 1))
        nxt += size - 1
    path_pairs = {frozenset(e) for i in range(1, spec.k + 1) for e in zip(spec.path_labels(i), spec.path_labels(i)[1:])}
    edges = []
    for part in W.values():
        edges.extend((u, v) for u in part for v in part if u < v)
    used = set()
    for e in d_edges:
        t, u = sorted(e, key=index.__getitem__)
        prof = None
        for key in (f"{t}~{u}", f"{u}~{t}"):
            if key in spec.profiles:
                prof = spec.profiles[key]
                used.add(key)
                t, u = key.split("~")
                break
        if prof is None:
            edges.extend((x, y) for x in W[t] for y in W[u])
            continue
        if e not in path_pairs:
            raise FrameworkError(f"profile {t}~{u} given for a non-path edge")
        if len(prof) != len(W[t]) or prof[0] != len(W[u]) or min(prof) < 1 or any(a < b for a, b in zip(prof, prof[1:])):
            raise FrameworkError(f"profile {t}~{u} must be non-increasing, start at |W_{u}| and stay positive")
        for j, cnt in enumerate(prof):
            edges.extend((W[t][j], W[u][r]) for r in range(cnt))
    stray = set(spec.profiles) - used
    if stray:
        raise FrameworkError(f"profiles for non-edges: {sorted(stray)}")
    G = from_edge_list(nxt, edges)
    fg = FrameworkGraph(spec, D, G, labels, W, T, S)
    if validate:
        verdict = verify_framework_blowup(fg)
        if not verdict.ok:
            raise FrameworkError(f"blow-up condition ({verdict.condition}) fails: {verdict.detail}")
        holes = check_ell_holed(G, spec.ell)
        if not holes.ok:
            where = "" if holes.hole is None else f" {[fg.label_of(v) for v in holes.hole.vertices]}"
            raise FrameworkError(f"generated graph is not {spec.ell}-holed: {holes.reason}{where}")
    return fg


def _complete(g: Graph, xs, ys) -> bool:
    return all(g.has_edge(x, y) for x in xs for y in ys)


def _anticomplete(g: Graph, xs, ys) -> bool:
    return not any(g.has_edge(x, y) for x in xs for y in ys)


def verify_framework_blowup(fg: FrameworkGraph) -> BlowupVerdict:
    """Re-check the five blow-up conditions on ``fg.G`` against ``fg.D``."""
    spec, G, D, W = fg.spec, fg.G, fg.D, fg.W
    nd = D.n
    index = {t: i for i, t in enumerate(fg.labels)}
    path_vertices = {x for i in range(1, spec.k + 1) for x in spec.path_labels(i)}

    # (1)
    for u in range(nd):
        for v in range(u + 1, nd):
            if G.has_edge(u, v) != D.has_edge(u, v):
                return BlowupVerdict(False, 1, "D is not induced in G", (u, v))
    flat = [v for part in W.values() for v in part]
    if sorted(flat) != list(range(G.n)):
        return BlowupVerdict(False, 1, "cliques W_t do not partition V(G)")
    for t, part in W.items():
        if part[0] != index[t] or any(v < nd for v in part[1:]):
            return BlowupVerdict(False, 1, f"W_{t} must meet V(D) exactly in {t}")
        if len(part) > 1 and t not in path_vertices:
            return BlowupVerdict(False, 1, f"W_{t} must be a singleton")
        if any(not G.has_edge(x, y) for x in part for y in part if x < y):
            return BlowupVerdict(False, 1, f"W_{t} is not a clique")

    # (2)
    labels = fg.labels
    for i, t in enumerate(labels):
        for u in labels[i + 1:]:
            if not D.has_edge(index[t], index[u]):
                if not _anticomplete(G, W[t], W[u]):
                    return BlowupVerdict(False, 2, f"W_{t} and W_{u} must be anticomplete")
                continue
            if not obeys_orderings(G, OrderedBipartition(W[t], W[u])):
                return BlowupVerdict(False, 2, f"G[W_{t}, W_{u}] does not obey the orderings")
            if any(not any(G.has_edge(x, y) for y in W[u]) for x in W[t]) or any(
                not any(G.has_edge(x, y) for x in W[t]) for y in W[u]
            ):
                return BlowupVerdict(False, 2, f"G[W_{t}, W_{u}] has an isolated vertex")

    # (3)
    for prefix in ("a", "b"):
        side = [f"{prefix}{i}" for i in range(1, spec.k + 1)]
        for i, t in enumerate(side):
            for u in side[i + 1:]:
                if D.has_edge(index[t], index[u]) and not _complete(G, W[t], W[u]):
                    return BlowupVerdict(False, 3, f"W_{t} must be complete to W_{u}")

    # (4)
    odd = spec.ell % 2 == 1
    s_range = range(spec.m + 1, spec.k + 1) if odd else range(0, spec.m + 1)
    for tree, prefix, rng in ((fg.T, "a", range(0, spec.m + 1)), (fg.S, "b", s_range)):
        for i in rng:
            hub = f"{prefix}{i}"
            for t in tree.nodes:
                if t != hub and D.has_edge(index[t], index[hub]) and not _complete(G, W[t], W[hub]):
                    return BlowupVerdict(False, 4, f"W_{t} must be complete to W_{hub}")

    # (5)
    for tree, tents in ((fg.T, spec.upper_tents), (fg.S, spec.lower_tents)):
        for tent in tents:
            for t in tent.base:
                q = tree.path_from_apex(t)
                j = q.index(tent.apex)
                head, tail = q[: j + 1], q[j + 1: -1]
                if not _complete(G, W[t], [index[y] for y in head]):
                    return BlowupVerdict(False, 5, f"W_{t} must be complete to the path above {tent.apex}")
                off = [v for u in tree.nodes if u not in q for v in W[u]]
                if not _anticomplete(G, W[t], off):
                    return BlowupVerdict(False, 5, f"W_{t} must be anticomplete to the rest of its arborescence")
                zs = tuple(index[z] for z in tail)
                if zs:
                    b = OrderedBipartition(W[t], zs)
                    if half_graph_violation(G, b) or not obeys_orderings(G, b):
                        return BlowupVerdict(False, 5, f"G[W_{t}, tent path] is not an ordered half-graph")
    return BlowupVerdict(True)


def framework_witness_cycle(fg: FrameworkGraph) -> CycleWitness:
    """The cycle through ``a0``, the last two vertical paths, and one extra
    clique vertex next to each of ``a_{k-1}`` and ``a_k``."""
    spec, W = fg.spec, fg.W
    k = spec.k

    def idx(t: str) -> int:
        return W[t][0]

    def second(t: str) -> int:
        if len(W[t]) < 2:
            raise FrameworkError(f"clique W_{t} has size 1; min degree 3 requires blown path vertices")
        return W[t][1]

    pk = spec.path_labels(k)
    pk1 = spec.path_labels(k - 1)
    seq = [idx("a0"), idx(f"a{k}"), second(pk[1])]
    seq += [idx(t) for t in pk[1:]]
    if spec.ell % 2 == 0:
        seq.append(idx("b0"))
    seq += [idx(t) for t in reversed(pk1[1:])]
    seq += [second(pk1[1]), idx(f"a{k - 1}")]
    try:
        validate_cycle(fg.G, seq)
    except ValueError as exc:
        raise FrameworkError(f"witness is not a cycle of the blow-up: {exc}") from exc
    if len(seq) < spec.ell + 2:
        raise FrameworkError("witness shorter than ell + 2")
    return CycleWitness(tuple(seq))
