"""
cyclepack - Vertex-disjoint cycle packing under degree conditions.

Given a simple graph G and an integer k, cyclepack either finds k
vertex-disjoint cycles or returns a certificate explaining why none exist.

Key features:
- Constructive packer driven by local improvement moves
- Exact oracle for small graphs and multigraphs
- Decision procedure combining minimum-degree and Ore-degree conditions
- Classification of graphs without two disjoint cycles
- Triangle partitions via equitable coloring of the complement
- Theorem verification over enumerated or sampled graph streams
"""

from cyclepack.config import SearchBudgets
from cyclepack.decide import decide
from cyclepack.enumeration import enumerate_graphs, random_graph_stream
from cyclepack.equitable import (
    EquitableColoring,
    equitable_coloring,
    has_k_triangle_partition,
    theta,
)
from cyclepack.exceptions import (
    BudgetExceededError,
    CyclePackError,
    EnumerationLimitError,
    EquitableColoringUndetermined,
    GraphFormatError,
    InvalidGraphError,
    InvalidPackingError,
    InvalidParameterError,
    SummaryWriteError,
)
from cyclepack.families import FamilyKind, FamilySpec, named_family
from cyclepack.graph import Graph, Multigraph, complement, degree_stats, vertex_classes
from cyclepack.graph6 import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from cyclepack.hypotheses import check_hypotheses, is_exceptional
from cyclepack.independence import independence_number
from cyclepack.isomorphism import canonical_form, is_isomorphic
from cyclepack.lovasz import classify_no_two_cycles, reduce_multigraph, verify_family_witness
from cyclepack.models import (
    CandidateCounterexample,
    CyclePacking,
    Decision,
    ExceptionalGraph,
    ExceptionKind,
    HypothesisReport,
    HypothesisViolation,
    IndependentSetCertificate,
    OptimalityKey,
    Packing,
    PackerResult,
    Verdict,
)
from cyclepack.oracle import oracle_max_packing, oracle_max_packing_multigraph
from cyclepack.packer import find_disjoint_cycles, improve_step, optimality_key, validate_result
from cyclepack.report import render_machine, render_text, write_summary
from cyclepack.verifier import (
    Outcome,
    TheoremCheck,
    TheoremId,
    VerificationMode,
    VerificationReport,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    # Graphs
    "Graph",
    "Multigraph",
    "complement",
    "degree_stats",
    "vertex_classes",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "FamilyKind",
    "FamilySpec",
    "named_family",
    "independence_number",
    "canonical_form",
    "is_isomorphic",
    # Packing
    "CyclePacking",
    "OptimalityKey",
    "PackerResult",
    "Packing",
    "IndependentSetCertificate",
    "ExceptionalGraph",
    "HypothesisViolation",
    "CandidateCounterexample",
    "find_disjoint_cycles",
    "improve_step",
    "optimality_key",
    "validate_result",
    "oracle_max_packing",
    "oracle_max_packing_multigraph",
    # Characterization
    "HypothesisReport",
    "ExceptionKind",
    "Verdict",
    "Decision",
    "check_hypotheses",
    "is_exceptional",
    "decide",
    "reduce_multigraph",
    "classify_no_two_cycles",
    "verify_family_witness",
    # Equitable coloring
    "EquitableColoring",
    "equitable_coloring",
    "has_k_triangle_partition",
    "theta",
    # Verification
    "TheoremId",
    "TheoremCheck",
    "Outcome",
    "VerificationMode",
    "VerificationReport",
    "verify",
    "enumerate_graphs",
    "random_graph_stream",
    "render_machine",
    "render_text",
    "write_summary",
    # Configuration and errors
    "SearchBudgets",
    "CyclePackError",
    "GraphFormatError",
    "InvalidGraphError",
    "InvalidParameterError",
    "InvalidPackingError",
    "BudgetExceededError",
    "EquitableColoringUndetermined",
    "EnumerationLimitError",
    "SummaryWriteError",
]
