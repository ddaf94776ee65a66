"""Exact-arithmetic Y-seed mutation, maximal green sequence search, and
rank-3 invariant auditing for skew-symmetrizable matrices."""

__version__ = "0.1.0"

from .core import (
    ExchangeMatrix,
    SkewSymmetrizer,
    YSeed,
    apply_sequence,
    find_skew_symmetrizer,
    load_seed,
    mutate_matrix,
    mutate_seed,
    seed_from_dict,
    seed_to_dict,
    sign_of,
)
from .diagram import (
    CyclicityVerdict,
    Diagram,
    classify_mutation_cyclicity,
    diagram_of,
    is_cyclic,
    sources_and_sinks,
)
from .radical import (
    IdentityReport,
    NoMgsCertificate,
    RadicalVector,
    certify_no_mgs,
    check_radical_identity,
    coordinate_change,
    radical_vector,
    track_step,
)
from .search import (
    PassageReport,
    SearchReport,
    VerificationReport,
    check_acyclic_passage,
    is_final,
    is_green_vertex,
    search_mgs,
    verify_sequence,
)
from . import errors

__all__ = [
    "ExchangeMatrix",
    "SkewSymmetrizer",
    "YSeed",
    "apply_sequence",
    "find_skew_symmetrizer",
    "load_seed",
    "mutate_matrix",
    "mutate_seed",
    "seed_from_dict",
    "seed_to_dict",
    "sign_of",
    "CyclicityVerdict",
    "Diagram",
    "classify_mutation_cyclicity",
    "diagram_of",
    "is_cyclic",
    "sources_and_sinks",
    "IdentityReport",
    "NoMgsCertificate",
    "RadicalVector",
    "certify_no_mgs",
    "check_radical_identity",
    "coordinate_change",
    "radical_vector",
    "track_step",
    "PassageReport",
    "SearchReport",
    "VerificationReport",
    "check_acyclic_passage",
    "is_final",
    "is_green_vertex",
    "search_mgs",
    "verify_sequence",
    "errors",
]
