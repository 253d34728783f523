"""Connectivity analysis for solution graphs of integer linear systems."""

from ilsconn.elimination import (
    EliminationResult,
    ElimRule,
    can_eliminate_at,
    eliminate,
    has_eo_exhaustive,
    run_algorithm1,
)
from ilsconn.graph import (
    SolutionGraph,
    build_graph,
    enumerate_solutions,
    export_dot,
    is_connected,
)
from ilsconn.matrix import CoeffMatrix, IlsInstance, Point, hamming, is_feasible, sgn
from ilsconn.oracle import (
    CanonicalRhsSpace,
    OracleVerdict,
    canonical_rhs_space,
    connected_for_all_b,
    validate_witness,
)
from ilsconn.witness import (
    DisconnectWitness,
    WitnessSearch,
    counterexample_matrix,
    find_witness,
    lemma1_path,
    lift_expansion,
    three_row_witness,
    two_column_witness,
    two_row_witness,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalRhsSpace",
    "CoeffMatrix",
    "DisconnectWitness",
    "ElimRule",
    "EliminationResult",
    "IlsInstance",
    "OracleVerdict",
    "Point",
    "SolutionGraph",
    "WitnessSearch",
    "build_graph",
    "can_eliminate_at",
    "canonical_rhs_space",
    "connected_for_all_b",
    "counterexample_matrix",
    "eliminate",
    "enumerate_solutions",
    "export_dot",
    "find_witness",
    "hamming",
    "has_eo_exhaustive",
    "is_connected",
    "is_feasible",
    "lemma1_path",
    "lift_expansion",
    "run_algorithm1",
    "sgn",
    "three_row_witness",
    "two_column_witness",
    "two_row_witness",
    "validate_witness",
]
