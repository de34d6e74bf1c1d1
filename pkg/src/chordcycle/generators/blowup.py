"""Blow-ups of cycles built from staircase boundary profiles."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from ..graph import Graph, from_edge_list
from ..recognize import CliquePartition, OrderedBipartition, half_graph_violation, verify_blowup_of_cycle


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class BlowupCycleSpec:
    """Cliques ``W_0..W_{ell-1}`` and, for each boundary ``i`` (between
    ``W_i`` and ``W_{i+1}``), a staircase: ``steps[i][j]`` is how many leading
    vertices of ``W_{i+1}`` the ``j``-th vertex of ``W_i`` sees.

    ``flip_left[i]`` / ``flip_right[i]`` read ``W_i`` / ``W_{i+1}`` backwards at
    boundary ``i``.  Unflipped staircases are always compatible; flips are how
    incompatible specs can be written down at all.
    """

    ell: int
    sizes: tuple[int, ...]
    steps: tuple[tuple[int, ...], ...]
    flip_left: tuple[bool, ...] = field(default=())
    flip_right: tuple[bool, ...] = field(default=())

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        steps = tuple(tuple(int(x) for x in row) for row in self.steps)
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "steps", steps)
        for name in ("flip_left", "flip_right"):
            val = tuple(bool(x) for x in getattr(self, name)) or (False,) * self.ell
            object.__setattr__(self, name, val)
        self.validate()

    def validate(self) -> None:
        ell = self.ell
        if ell < 4:
            raise SpecError("ell must be at least 4")
        if len(self.sizes) != ell or len(self.steps) != ell:
            raise SpecError("need exactly ell sizes and ell boundary profiles")
        if len(self.flip_left) != ell or len(self.flip_right) != ell:
            raise SpecError("flip flags must have length ell")
        for i, s in enumerate(self.sizes):
            if s < 1:
                raise SpecError(f"clique {i} is empty")
        for i, row in enumerate(self.steps):
            right = self.sizes[(i + 1) % ell]
            if len(row) != self.sizes[i]:
                raise SpecError(f"boundary {i}: profile needs one entry per vertex of clique {i}")
            if not row or row[0] < 1:
                raise SpecError(f"boundary {i}: first vertex must have a neighbour across")
            if any(x < 0 or x > right for x in row):
                raise SpecError(f"boundary {i}: step out of range 0..{right}")
            if any(a < b for a, b in zip(row, row[1:])):
                raise SpecError(f"boundary {i}: profile must be non-increasing")
        for i in range(ell):
            # vertex j of W_i sees W_{i+1} iff steps[i][j] > 0 and W_{i-1}
            # iff it is among the first steps[i-1][0] vertices there
            right = [x > 0 for x in self.steps[i]]
            if self.flip_left[i]:
                right = right[::-1]
            left = [j < self.steps[i - 1][0] for j in range(self.sizes[i])]
            if self.flip_right[i - 1]:
                left = left[::-1]
            for j, (a, b) in enumerate(zip(left, right)):
                if not (a or b):
                    raise SpecError(f"vertex {j} of clique {i} has no neighbour outside its clique")

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @classmethod
    def complete(cls, sizes) -> BlowupCycleSpec:
        """Every boundary complete bipartite."""
        sizes = tuple(sizes)
        ell = len(sizes)
        return cls(ell, sizes, tuple((sizes[(i + 1) % ell],) * sizes[i] for i in range(ell)))

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "sizes": list(self.sizes),
            "steps": [list(r) for r in self.steps],
            "flip_left": list(self.flip_left),
            "flip_right": list(self.flip_right),
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> BlowupCycleSpec:
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            return cls(
                ell=int(doc["ell"]),
                sizes=tuple(doc["sizes"]),
                steps=tuple(tuple(r) for r in doc["steps"]),
                flip_left=tuple(doc.get("flip_left", ())),
                flip_right=tuple(doc.get("flip_right", ())),
            )
        except (KeyError, TypeError) as exc:
            raise SpecError(f"malformed blow-up spec: {exc}") from exc


def blowup_of_cycle(spec: BlowupCycleSpec) -> tuple[Graph, CliquePartition]:
    """Build the graph and its partition; refuse specs whose boundaries at
    some clique are not compatible."""
    ell = spec.ell
    starts = [0]
    for s in spec.sizes:
        starts.append(starts[-1] + s)
    parts = [tuple(range(starts[i], starts[i + 1])) for i in range(ell)]
    edges = []
    for part in parts:
        edges.extend((u, v) for u in part for v in part if u < v)
    for i, row in enumerate(spec.steps):
        left = parts[i][::-1] if spec.flip_left[i] else parts[i]
        right = parts[(i + 1) % ell]
        right = right[::-1] if spec.flip_right[i] else right
        for j, cnt in enumerate(row):
            edges.extend((left[j], right[t]) for t in range(cnt))
    g = from_edge_list(spec.order, edges)
    p = CliquePartition(tuple(parts))
    for i in range(ell):
        b = OrderedBipartition(parts[i], parts[(i + 1) % ell] + parts[i - 1])
        if half_graph_violation(g, b):
            raise SpecError(f"boundaries at clique {i} are not compatible")
    verdict = verify_blowup_of_cycle(g, p)
    if not verdict.ok:
        raise SpecError(f"generated graph fails condition ({verdict.condition}): {verdict.detail}")
    return g, p


def random_blowup_cycle_spec(rng: random.Random, ell: int, max_order: int, flip_prob: float = 0.0) -> BlowupCycleSpec:
    """A random spec with ``ell <= order <= max_order``; may be incompatible
    when ``flip_prob > 0``."""
    if max_order < ell:
        raise ValueError("max_order must be at least ell")
    sizes = [1] * ell
    for _ in range(rng.randint(0, max_order - ell)):
        sizes[rng.randrange(ell)] += 1
    steps = []
    for i in range(ell):
        right = sizes[(i + 1) % ell]
        row = sorted((rng.randint(0, right) for _ in range(sizes[i])), reverse=True)
        row[0] = max(row[0], 1)
        steps.append(row)
    flips_l = [rng.random() < flip_prob for _ in range(ell)]
    flips_r = [rng.random() < flip_prob for _ in range(ell)]
    # give every vertex a neighbour on at least one side, by extending the
    # right-hand staircase where needed (this keeps it non-increasing)
    for i in range(ell):
        reach_left = steps[i - 1][0]
        for j in range(sizes[i]):
            pos = sizes[i] - 1 - j if flips_r[i - 1] else j
            sees_left = pos < reach_left
            row_j = sizes[i] - 1 - j if flips_l[i] else j
            if not sees_left and steps[i][row_j] == 0:
                for r in range(row_j + 1):
                    steps[i][r] = max(steps[i][r], 1)
    return BlowupCycleSpec(ell, tuple(sizes), tuple(map(tuple, steps)), tuple(flips_l), tuple(flips_r))
