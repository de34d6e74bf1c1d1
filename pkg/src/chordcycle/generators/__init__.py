from .arborescence import Arborescence, coarboreal, lives_in, transitive_closure
from .blowup import BlowupCycleSpec, SpecError, blowup_of_cycle, random_blowup_cycle_spec
from .enumerate import (
    GraphFilter,
    canonical_code,
    count_small_graphs,
    enumerate_small_graphs,
    graph_from_code,
    small_graph_codes,
)
from .families import complete, complete_bipartite, cycle, path, petersen, wheel
from .framework import (
    FrameworkError,
    FrameworkGraph,
    FrameworkSpec,
    Tent,
    canonical_framework_spec,
    framework,
    framework_witness_cycle,
    verify_framework_blowup,
)

__all__ = [
    "Arborescence", "coarboreal", "lives_in", "transitive_closure",
    "BlowupCycleSpec", "SpecError", "blowup_of_cycle", "random_blowup_cycle_spec",
    "GraphFilter", "canonical_code", "count_small_graphs", "enumerate_small_graphs",
    "graph_from_code", "small_graph_codes",
    "complete", "complete_bipartite", "cycle", "path", "petersen", "wheel",
    "FrameworkError", "FrameworkGraph", "FrameworkSpec", "Tent", "canonical_framework_spec",
    "framework", "framework_witness_cycle", "verify_framework_blowup",
]
