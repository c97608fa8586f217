"""dspath: disjoint shortest paths.

Linear-time randomized decision for two vertex-disjoint shortest paths on
weighted DAGs and undirected graphs, O(mn) solution extraction via circuit
differentiation, k edge-disjoint shortest paths on DAGs through an implicit
product graph, and generators for clique-hardness instances -- all backed by
brute-force oracles that make the algebra exactly checkable at small scale.
"""

from .circuit import Circuit, GradientMap, build_circuit, eval_all_partials
from .dsp2 import PathTables, Verdict, decide_2dsp, eval_disjoint_sum
from .errors import (
    DspathError,
    EnumerationLimitError,
    GraphFormatError,
    InvalidGraphError,
    UnsupportedInputError,
)
from .gf2 import Assignment, FieldElement
from .graph import (
    DistanceMap,
    Graph,
    ShortestPathDag,
    build_sp_dag,
    format_graph,
    load_graph,
    sssp,
)
from .kedsp import decide_kedsp, reduce_dp_to_dsp, reduce_edsp_to_dsp, solve_kedsp
from .reductions import (
    CliqueInstance,
    CoveringFamily,
    ReductionInstance,
    clique_to_kdsp,
    clique_to_pdp,
    covering_family,
)
from .search import find_2dsp, verify_solution

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "Circuit",
    "CliqueInstance",
    "CoveringFamily",
    "DistanceMap",
    "DspathError",
    "EnumerationLimitError",
    "FieldElement",
    "GradientMap",
    "Graph",
    "GraphFormatError",
    "InvalidGraphError",
    "PathTables",
    "ReductionInstance",
    "ShortestPathDag",
    "UnsupportedInputError",
    "Verdict",
    "build_circuit",
    "build_sp_dag",
    "clique_to_kdsp",
    "clique_to_pdp",
    "covering_family",
    "decide_2dsp",
    "decide_kedsp",
    "eval_all_partials",
    "eval_disjoint_sum",
    "find_2dsp",
    "format_graph",
    "load_graph",
    "reduce_dp_to_dsp",
    "reduce_edsp_to_dsp",
    "solve_kedsp",
    "sssp",
    "verify_solution",
]
