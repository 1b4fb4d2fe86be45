"""Exact minimum-bisection solver on unbreakable tree decompositions."""

from .bisect import (
    BisectionResult,
    SolveOptions,
    group_values,
    solve_bisection,
    solve_sized_cut,
    solve_weighted_bisection,
)
from .chips import Chip, enumerate_maximal_chips, touches
from .decompose import (
    Constants,
    TreeDecomposition,
    build_decomposition,
    enhanced_local_decomposition,
    local_decomposition,
    strengthen_adhesions,
    validate_decomposition,
)
from .dimacs import parse_graph
from .graph import (
    Graph,
    GraphError,
    Separation,
    connected_components,
    edge_cut_size,
    edge_cut_weight,
    induced_subgraph,
    min_vertex_cut,
    reachable_set,
)
from .hp import (
    Assignment,
    ComponentGraph,
    HPInstance,
    HPSolution,
    HPWeightedInstance,
    KnapsackFn,
    min_fn,
    oplus,
    oplus_fft,
    perfect_family,
    solve_hp,
    solve_hp_weighted,
    splitter_family,
)
from .separators import (
    BreakabilityWitness,
    ImportantSeparator,
    enumerate_important_separators,
    is_unbreakable,
)
from .sparsify import SparsificationResult, sparsify

__version__ = "0.1.0"
