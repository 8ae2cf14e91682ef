"""Arf numerical semigroups with a fixed Frobenius number.

The package enumerates the family of all Arf semigroups sharing a Frobenius
number as a rooted tree, converts semigroups to and from their difference
sequences, computes hulls (smallest Arf member containing a given set),
minimal hull-generating sets and ranks, and ships a deliberately naive
brute-force oracle for cross-checking.
"""

from .closure import (
    ClosureResult,
    ar_closure,
    ar_rank,
    count_rank_one,
    minimal_ar_generators,
    rank_one_catalog,
)
from .core import (
    AperyTable,
    GeneratorSet,
    NumericalSemigroup,
    med_frobenius_genus_formula,
    pseudo_frobenius_from_apery,
    special_gaps_from_apery,
)
from .errors import (
    ContradictionError,
    EmptyInputError,
    InconsistentTableError,
    InternalInvariantError,
    InvalidAdjunctionError,
    InvalidFrobeniusError,
    InvalidRefinementError,
    InvalidSequenceError,
    NoGapsError,
    NotAMemberError,
    NotArfError,
    NotCofiniteError,
    NotInCovarietyError,
    NotMedError,
    ScaleLimitError,
    SemigroupError,
)
from .oracle import brute_all_semigroups, brute_is_arf
from .sequences import (
    ArfSequence,
    admits_proper_refinement,
    apply_refinement,
    arf_sequences_with_total,
    iter_refinements,
    maximal_elements,
    refinement_candidates,
    refinement_free_sequences,
    semigroup_of_sequence,
    sequence_of_semigroup,
    validate_sequence,
)
from .tree import (
    CovarietyTree,
    EnumerationReport,
    TreeNode,
    apery_after_adjoin,
    children,
    enumerate_ar,
    is_member_ar,
    med_adjunction_test,
    msg_after_adjoin,
)

__version__ = "0.1.0"

__all__ = [
    "AperyTable",
    "ArfSequence",
    "ClosureResult",
    "ContradictionError",
    "CovarietyTree",
    "EmptyInputError",
    "EnumerationReport",
    "GeneratorSet",
    "InconsistentTableError",
    "InternalInvariantError",
    "InvalidAdjunctionError",
    "InvalidFrobeniusError",
    "InvalidRefinementError",
    "InvalidSequenceError",
    "NoGapsError",
    "NotAMemberError",
    "NotArfError",
    "NotCofiniteError",
    "NotInCovarietyError",
    "NotMedError",
    "NumericalSemigroup",
    "ScaleLimitError",
    "SemigroupError",
    "TreeNode",
    "admits_proper_refinement",
    "apery_after_adjoin",
    "apply_refinement",
    "ar_closure",
    "ar_rank",
    "arf_sequences_with_total",
    "brute_all_semigroups",
    "brute_is_arf",
    "children",
    "count_rank_one",
    "enumerate_ar",
    "is_member_ar",
    "iter_refinements",
    "maximal_elements",
    "med_adjunction_test",
    "med_frobenius_genus_formula",
    "minimal_ar_generators",
    "msg_after_adjoin",
    "pseudo_frobenius_from_apery",
    "rank_one_catalog",
    "refinement_candidates",
    "refinement_free_sequences",
    "semigroup_of_sequence",
    "sequence_of_semigroup",
    "special_gaps_from_apery",
    "validate_sequence",
]
