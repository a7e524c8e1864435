"""Construction, verification and analysis of d-disjunct matrices.

A t x n binary matrix is d-disjunct when the boolean sum of any d columns
contains no other column; such matrices are exactly the nonadaptive
group-testing schemes that identify up to d positives among n items in t
tests.  This package provides bit-packed matrices, an exact disjunctness
checker with witnesses, affine-plane and random constructions, the naive
decoder with exhaustive guarantee verification, private-pair analysis,
evaluation of the known row lower bounds, and exhaustive searches for the
smallest schemes that beat individual testing.
"""

from ._kernels import active_backend, set_backend
from .bounds import (
    KAPPA,
    BoundReport,
    TDNBound,
    Theorem1Certificate,
    Theorem2Audit,
    ceil_kappa_times,
    floor_kappa_times,
    kappa_bounds,
    lower_bounds,
    t_dn_lower_bound,
    theorem1_certificate,
    theorem2_audit,
)
from .constructions import (
    AffinePlaneSpec,
    affine_plane_matrix,
    affine_plane_spec,
    identity_matrix,
    random_disjunct_corpus,
)
from .disjunctness import (
    DisjunctVerdict,
    PeelResult,
    Witness,
    delete_column_and_rows,
    find_isolated_columns,
    is_d_disjunct,
    max_disjunct_order,
    peel_isolated,
    peel_to_core,
)
from .group_testing import (
    BudgetExceededError,
    IdentificationReport,
    OutcomeVector,
    naive_decode,
    outcomes,
    verify_identification,
)
from .matrix import (
    BinaryMatrix,
    ColumnSupport,
    DmatFormatError,
    boolean_sum,
    contains,
    load_matrix,
    read_matrix,
    save_matrix,
    write_matrix,
)
from .pairs import (
    Lemma3Report,
    PairBudget,
    PairClassification,
    PairGraph,
    classify_pairs,
    complete_graph_matchings,
    erdos_gallai_bound,
    formula_one,
    matching_number,
    matching_numbers_all_graphs,
    max_edges_matching_bounded,
    pair_graph,
    private_pair_budget,
    verify_lemma3,
)
from .search import SearchCertificate, exhaustive_T

__version__ = "0.1.0"

__all__ = [
    "KAPPA",
    "AffinePlaneSpec",
    "BinaryMatrix",
    "BoundReport",
    "BudgetExceededError",
    "ColumnSupport",
    "DisjunctVerdict",
    "DmatFormatError",
    "IdentificationReport",
    "Lemma3Report",
    "OutcomeVector",
    "PairBudget",
    "PairClassification",
    "PairGraph",
    "PeelResult",
    "SearchCertificate",
    "TDNBound",
    "Theorem1Certificate",
    "Theorem2Audit",
    "Witness",
    "active_backend",
    "affine_plane_matrix",
    "affine_plane_spec",
    "boolean_sum",
    "ceil_kappa_times",
    "classify_pairs",
    "complete_graph_matchings",
    "contains",
    "delete_column_and_rows",
    "erdos_gallai_bound",
    "exhaustive_T",
    "find_isolated_columns",
    "floor_kappa_times",
    "formula_one",
    "identity_matrix",
    "is_d_disjunct",
    "kappa_bounds",
    "load_matrix",
    "lower_bounds",
    "matching_number",
    "matching_numbers_all_graphs",
    "max_disjunct_order",
    "max_edges_matching_bounded",
    "naive_decode",
    "outcomes",
    "pair_graph",
    "peel_isolated",
    "peel_to_core",
    "private_pair_budget",
    "random_disjunct_corpus",
    "read_matrix",
    "save_matrix",
    "set_backend",
    "t_dn_lower_bound",
    "theorem1_certificate",
    "theorem2_audit",
    "verify_identification",
    "verify_lemma3",
    "write_matrix",
]
