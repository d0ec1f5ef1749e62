"""Exact solvers for relaxed transitive-free vertex deletion.

The decision problem: given a digraph and budgets (k, ell), can deleting
at most k vertices leave at most ell transitive arcs?  An arc is
transitive when its head stays reachable from its tail without it.

Modules: ``digraph`` (representation, recognizers, transitive-arc
machinery), ``oracle`` (brute-force ground truth), ``bounded``
(tournaments and bounded-independence digraphs), ``acyclic_local``
(connected acyclic local tournaments), ``hitting`` (zero-budget
in-/out-tournaments), ``kernel`` (in-tournament kernelization),
``reductions`` (hardness-construction instance generators),
``generators`` (seeded graph-class generators), ``cli`` (file format and
command-line interface).
"""

from .digraph import (
    AcyclicTriangle,
    Arc,
    Digraph,
    ReachProfile,
    count_transitive_arcs,
    enumerate_acyclic_triangles,
    independence_number,
    induced_subgraph,
    is_acyclic,
    is_connected,
    is_in_tournament,
    is_local_tournament,
    is_out_tournament,
    is_singly_connected,
    is_tournament,
    is_transitive_arc,
    reach_profile,
    reverse,
    topological_ordering,
    transitive_arcs,
    without_vertices,
)
from .errors import (
    CapExceededError,
    CycleError,
    GeneratorBudgetError,
    GraphClassError,
    InstanceParseError,
    RtvdError,
)
from .oracle import (
    Instance,
    Solution,
    all_digraphs,
    all_tournaments,
    decide_rtvd_oracle,
    min_rtvd_oracle,
    verify_solution,
)
from .bounded import (
    RetainBound,
    alpha_retain_cap,
    solve_alpha_bounded,
    solve_tournament,
    tournament_retain_cap,
)
from .acyclic_local import (
    ExtInstance,
    IntervalSubinstance,
    compute_forced_set,
    min_rtvd_alt,
    min_tvd_alt,
    solve_ext,
    split_intervals,
)
from .hitting import (
    HittingInstance,
    KernelizedHitting,
    kernelize_hitting,
    solve_hitting,
    to_hitting_instance,
    tvd_in_tournament,
)
from .kernel import (
    TriangleCatalog,
    TrianglePacking,
    assemble_kernel,
    build_catalog,
    cut_preserving_set,
    flow_provider,
    greedy_packing,
    vertex_disjoint_paths,
    whole_graph_provider,
)
from .reductions import (
    MulticutInstance,
    UndirectedGraph,
    multicut_oracle,
    multicut_to_tvd,
    vc_to_rtvd,
    vertex_cover_oracle,
)
from .generators import (
    ReachFunction,
    all_reach_functions,
    gen_acyclic_local_tournament,
    gen_dag,
    gen_in_tournament,
    gen_out_tournament,
    gen_tournament,
    random_reach_function,
)

__version__ = "0.1.0"
