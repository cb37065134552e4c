"""Maximal clique search by penalized rank-one nonnegative matrix
approximation, with classical simplex-relaxation baselines and an exact
enumeration oracle for desk-scale validation."""

from .baselines import (
    BaselineConfig,
    IndependentSupportError,
    ding_step,
    extend_to_maximal,
    pelillo_step,
    postprocess_greedy,
    run_baseline,
)
from .graph import (
    CliqueSet,
    CoordinateFormatError,
    DimacsFormatError,
    DimacsWarning,
    EdgeRangeError,
    EdgelessGraphError,
    Graph,
    cooccurrence_graph,
    graph_from_edge_list,
    is_clique,
    is_maximal_clique,
    parse_coordinate_matrix,
    parse_dimacs,
    random_graph,
    read_dimacs,
    serialize_dimacs,
    write_dimacs,
)
from .harness import (
    ALGORITHMS,
    BenchRecord,
    VerifyCheck,
    VerifyReport,
    cmd_bench_dimacs,
    cmd_bench_random,
    cmd_ingest_text,
    cmd_solve,
    cmd_verify,
    records_to_csv,
    run_algorithm,
)
from .oracle import (
    OracleLimitError,
    OracleLimits,
    enumerate_maximal_cliques,
    maximum_clique_exact,
    motzkin_straus_value,
)
from .solver import (
    ArmijoStep,
    IterateRecord,
    NumericalDivergenceError,
    RoundingInvariantError,
    SolverConfig,
    SolverResult,
    SolverState,
    armijo_outer_iteration,
    d_max,
    default_d0,
    gradient,
    lift_ball_point,
    md_matvec,
    md_norm_sq,
    objective_shifted,
    project_nonneg,
    round_phi,
    solve,
    stationarity_residual,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ArmijoStep",
    "BaselineConfig",
    "BenchRecord",
    "CliqueSet",
    "CoordinateFormatError",
    "DimacsFormatError",
    "DimacsWarning",
    "EdgeRangeError",
    "EdgelessGraphError",
    "Graph",
    "IndependentSupportError",
    "IterateRecord",
    "NumericalDivergenceError",
    "OracleLimitError",
    "OracleLimits",
    "RoundingInvariantError",
    "SolverConfig",
    "SolverResult",
    "SolverState",
    "VerifyCheck",
    "VerifyReport",
    "armijo_outer_iteration",
    "cmd_bench_dimacs",
    "cmd_bench_random",
    "cmd_ingest_text",
    "cmd_solve",
    "cmd_verify",
    "cooccurrence_graph",
    "d_max",
    "default_d0",
    "ding_step",
    "enumerate_maximal_cliques",
    "extend_to_maximal",
    "gradient",
    "graph_from_edge_list",
    "is_clique",
    "is_maximal_clique",
    "lift_ball_point",
    "maximum_clique_exact",
    "md_matvec",
    "md_norm_sq",
    "motzkin_straus_value",
    "objective_shifted",
    "parse_coordinate_matrix",
    "parse_dimacs",
    "pelillo_step",
    "postprocess_greedy",
    "project_nonneg",
    "random_graph",
    "read_dimacs",
    "records_to_csv",
    "round_phi",
    "run_algorithm",
    "run_baseline",
    "serialize_dimacs",
    "solve",
    "stationarity_residual",
    "write_dimacs",
]
