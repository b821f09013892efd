"""Parameter diminishers, strict kernels and a Turing kernel for triangle
problems and small-pattern subgraph isomorphism."""
from trikern._kernels import BACKEND
from trikern.diminishers import (
    Decided,
    DiminisherConfig,
    EdgeBudget,
    Reduced,
    diminish,
    diminish_component_order,
    diminish_degeneracy,
    diminish_max_degree,
    verify_diminisher,
)
from trikern.edge_coloring import EdgeColoring, greedy_edge_color
from trikern.graph import (
    Graph,
    GraphError,
    ParamKind,
    ProvenanceMap,
    components,
    degeneracy_ordering,
    disjoint_union,
    max_degree,
    param_value,
)
from trikern.instance import Instance, Pattern, ProblemKind
from trikern.kernelize import interleave_solve, strict_kernel, trivial_instance
from trikern.solvers import solve, solve_hsi, solve_nwt, solve_per_component, solve_tc
from trikern.turing import ball, turing_solve

__version__ = "0.1.0"
