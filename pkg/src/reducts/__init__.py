"""Attribute reduction for categorical information systems.

The package derives discernibility set families from tables, classifies
attributes as core, relatively necessary, or unnecessary, and constructs
reducts either row by row over the discernibility matrix or through
substitute-family recursion.  A brute-force enumerator of all reducts
backs the fast paths in tests, pairwise attribute relations are computed
from their definitions, and an audit measures a catalog of quantified
claims on any concrete table.
"""

from .characters import (
    AttributeEvidence,
    Character,
    CharacterReport,
    classify,
    classify_all,
    classify_by_refinement,
    is_refinement,
    precise_refinement_witness,
    precise_refines,
)
from .covering import (
    CoveringSpace,
    SingletonChecks,
    cov_lower,
    cov_upper,
    covering_from_family,
    minimal_description,
    neighborhood,
    singleton_equivalences,
)
from .discern import (
    Absorption,
    DiscernibilityMatrix,
    SetFamily,
    absorb,
    canonical_key,
    containing_sets,
    discernibility_matrix,
    family_from_names,
    hits_all,
    reducts_by_expansion,
    substitute_sets,
)
from .errors import InputError, InvariantViolation, ResourceLimitError
from .model import (
    InformationSystem,
    Partition,
    approximations,
    indiscernibility_partition,
    is_consistent,
    is_precise,
    is_reduct,
    load_table,
    refines,
)
from .reducers import (
    ReductCheck,
    ReductStatus,
    ReductTrace,
    RowwiseStep,
    SelectionPolicy,
    SubstituteStep,
    all_reducts_bruteforce,
    ea_reduce,
    red_of_family,
    verify_reduct,
    yao_row_wise,
)
from .relations import (
    AuditReport,
    ClaimInstance,
    RelationReport,
    attr_equivalent,
    attr_finer,
    audit_theorems,
    coupled,
    equivalent_by_membership,
    excludes,
    finer_by_membership,
    relation_report_from_family,
    relation_report_from_system,
)

__all__ = [
    "AttributeEvidence",
    "Character",
    "CharacterReport",
    "classify",
    "classify_all",
    "classify_by_refinement",
    "is_refinement",
    "precise_refinement_witness",
    "precise_refines",
    "CoveringSpace",
    "SingletonChecks",
    "cov_lower",
    "cov_upper",
    "covering_from_family",
    "minimal_description",
    "neighborhood",
    "singleton_equivalences",
    "Absorption",
    "DiscernibilityMatrix",
    "SetFamily",
    "absorb",
    "canonical_key",
    "containing_sets",
    "discernibility_matrix",
    "family_from_names",
    "hits_all",
    "reducts_by_expansion",
    "substitute_sets",
    "InputError",
    "InvariantViolation",
    "ResourceLimitError",
    "InformationSystem",
    "Partition",
    "approximations",
    "indiscernibility_partition",
    "is_consistent",
    "is_precise",
    "is_reduct",
    "load_table",
    "refines",
    "ReductCheck",
    "ReductStatus",
    "ReductTrace",
    "RowwiseStep",
    "SelectionPolicy",
    "SubstituteStep",
    "all_reducts_bruteforce",
    "ea_reduce",
    "red_of_family",
    "verify_reduct",
    "yao_row_wise",
    "AuditReport",
    "ClaimInstance",
    "RelationReport",
    "attr_equivalent",
    "attr_finer",
    "audit_theorems",
    "coupled",
    "equivalent_by_membership",
    "excludes",
    "finer_by_membership",
    "relation_report_from_family",
    "relation_report_from_system",
]
