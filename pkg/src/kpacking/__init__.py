"""Exact k-limited packing, open packing and domination invariants, with bound auditing."""

from .audit import AuditConfig, AuditReport, BoundCheck, TheoremId, audit_all, evaluate_bound, stream_audit
from .generators import (
    GkrBlueprint,
    InfeasibleConstruction,
    gen_complete,
    gen_corona_tree,
    gen_cycle,
    gen_disjoint_copies,
    gen_gkr,
    gen_path,
    gen_petersen,
    gen_star,
    random_graph,
    random_tree,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    StructuralSummary,
    complement,
    delete_vertex,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    structural_summary,
)
from .packing import (
    AnchoringError,
    Optimality,
    PackingCertificate,
    PackingKind,
    SolverError,
    designated_pendants,
    domination_number,
    is_dominating_set,
    is_k_limited_packing,
    is_maximal_k_limited_packing,
    is_open_packing,
    is_total_dominating_set,
    lemma21_maximality,
    lower_packing_number,
    max_k_limited_packing,
    max_open_packing,
    min_maximal_k_limited_packing,
    packing_number,
    pendant_anchored_max_open_packing,
    pendant_anchored_max_packing,
    total_domination_number,
    verify_certificate,
)
from .trees import NotATreeError, tree_domination, tree_total_domination

__version__ = "0.1.0"
