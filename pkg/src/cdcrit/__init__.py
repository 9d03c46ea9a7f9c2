"""Exact solvers and checkers for connected-domination criticality."""

from .graphs import (
    CanonicalForm,
    CapacityError,
    BudgetExceededError,
    Graph,
    Graph6Error,
    canonical_form,
    is_isomorphic,
    new_graph,
    parse_graph6,
    to_dot,
    to_graph6,
)
from .invariants import (
    InvariantProfile,
    all_maximum_independent_sets,
    all_minimum_cut_sets,
    connectivity,
    independence_number,
    max_degree,
    maximum_independent_set,
    min_degree,
    profile,
)
from .domination import (
    CriticalityReport,
    DisconnectedGraphError,
    IsolatedVertexError,
    all_min_connected_dominating_sets,
    gamma,
    gamma_c,
    gamma_t,
    is_k_gamma_c_critical,
    is_k_gamma_t_critical,
)
from .families import (
    FamilyParameterError,
    FamilySpec,
    Layout,
    build_class_g1,
    build_class_g2,
    build_class_g3,
    build_cutvertex_g1,
    build_cutvertex_g2,
    build_family,
    build_star_forest,
    class_g2_member,
    parse_family_spec,
)
from .theorems import (
    CHECKS,
    CheckReport,
    Facts,
    hamiltonian_connected,
    open_problem_probe,
    run_check,
    scattering_condition,
)
from .enumeration import enumerate_connected_graphs
from .scan import (
    ScanInputError,
    SweepSummary,
    probe_enumeration,
    probe_stream,
    scan_enumeration,
    scan_stream,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CHECKS",
    "CanonicalForm",
    "CapacityError",
    "CheckReport",
    "CriticalityReport",
    "DisconnectedGraphError",
    "Facts",
    "FamilyParameterError",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "InvariantProfile",
    "IsolatedVertexError",
    "Layout",
    "ScanInputError",
    "SweepSummary",
    "all_maximum_independent_sets",
    "all_min_connected_dominating_sets",
    "all_minimum_cut_sets",
    "build_class_g1",
    "build_class_g2",
    "build_class_g3",
    "build_cutvertex_g1",
    "build_cutvertex_g2",
    "build_family",
    "build_star_forest",
    "canonical_form",
    "class_g2_member",
    "connectivity",
    "enumerate_connected_graphs",
    "gamma",
    "gamma_c",
    "gamma_t",
    "hamiltonian_connected",
    "independence_number",
    "is_isomorphic",
    "is_k_gamma_c_critical",
    "is_k_gamma_t_critical",
    "max_degree",
    "maximum_independent_set",
    "min_degree",
    "new_graph",
    "open_problem_probe",
    "parse_family_spec",
    "parse_graph6",
    "probe_enumeration",
    "probe_stream",
    "profile",
    "run_check",
    "scan_enumeration",
    "scan_stream",
    "scattering_condition",
    "to_dot",
    "to_graph6",
]
