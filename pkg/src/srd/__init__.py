"""Exact models and feasibility checks for strongly regular designs.

A strongly regular design is a two-fiber incidence structure whose
coherent configuration has type [3 2; 3]: three relations on each fiber
and two between them.  This package builds such configurations from
concrete 0/1 matrices, computes their coherent closure and intersection
numbers exactly, checks the fifteen classical parameter identities
(including the corrected form of identity (15), whose originally published
form is demonstrably wrong), re-verifies them along three independent
routes, enumerates feasible parameter tuples, and audits the published
multiplication table against first-principles derivations.
"""

from .audit import AuditFinding, AuditReport, audit_published_table
from .config import (
    AxiomReport,
    CoherentConfiguration,
    TripleViolation,
    canonical_relabel,
    detect_type,
    format_matrix_text,
    from_adjacency,
    from_color_matrix,
    from_incidence,
    parse_matrix_text,
    structure_constants,
    verify_axioms,
    wl_closure,
)
from .errors import CoherenceError, InfeasibleParameters, SpectrumInfeasible, TypeMismatchError
from .exact import Matrix, QuadValue, Rational, mat_mul, quad_roots, squarefree_decomposition
from .feasibility import (
    MUTATIONS,
    EquationResult,
    FeasibilityReport,
    Mutation,
    RegularRep,
    RouteInstance,
    RouteReport,
    build_regular_representation,
    check_equations,
    check_params,
    complete_params,
    enumerate_feasible,
    feasible_srg_params,
    load_params_json,
    mutate_params,
    params_from_dict,
    route_A_intersection,
    route_B_regular_rep,
    route_C_characters,
)
from .models import EXAMPLE_NAMES, example_configuration, gen_example
from .tensor import StructureTensor
from .theory import (
    CharacterRow,
    CharacterTable,
    SrdParams,
    SrgParams,
    character_table,
    choose_labeling,
    expected_structure_constants,
    extract_srd_params,
    multiplication_vectors,
    srg_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AuditFinding",
    "AuditReport",
    "AxiomReport",
    "CharacterRow",
    "CharacterTable",
    "CoherenceError",
    "CoherentConfiguration",
    "EXAMPLE_NAMES",
    "EquationResult",
    "FeasibilityReport",
    "InfeasibleParameters",
    "Matrix",
    "MUTATIONS",
    "Mutation",
    "QuadValue",
    "Rational",
    "RegularRep",
    "RouteInstance",
    "RouteReport",
    "SpectrumInfeasible",
    "SrdParams",
    "SrgParams",
    "StructureTensor",
    "TripleViolation",
    "TypeMismatchError",
    "audit_published_table",
    "build_regular_representation",
    "canonical_relabel",
    "character_table",
    "check_equations",
    "check_params",
    "choose_labeling",
    "complete_params",
    "detect_type",
    "enumerate_feasible",
    "example_configuration",
    "expected_structure_constants",
    "extract_srd_params",
    "feasible_srg_params",
    "format_matrix_text",
    "from_adjacency",
    "from_color_matrix",
    "from_incidence",
    "gen_example",
    "load_params_json",
    "mat_mul",
    "multiplication_vectors",
    "mutate_params",
    "params_from_dict",
    "parse_matrix_text",
    "quad_roots",
    "route_A_intersection",
    "route_B_regular_rep",
    "route_C_characters",
    "squarefree_decomposition",
    "srg_spectrum",
    "structure_constants",
    "verify_axioms",
    "wl_closure",
]
