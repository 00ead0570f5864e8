"""Hook multisets of integer partitions and when equal hooks force conjugacy."""
from .criterion import (
    ConjugacyVerdict,
    HooksDifferError,
    IdenticalSetsError,
    MaxMismatchError,
    NotSymmetricError,
    Status,
    Step1Result,
    SymmetricDiffWitness,
    decide_conjugacy,
    herman_chung_beta_pair,
    herman_chung_pair,
    is_conjugate_direct,
    is_n_symmetric,
    proof_identity_residual,
    proof_identity_residuals,
    step1_derived_sets,
    theorem_criterion,
)
from .multiset import (
    HookMultiset,
    IntMultiset,
    PreconditionError,
    complement_in,
    conjugate_beta,
    hooks_direct,
    hooks_via_beta,
    mdiff,
    msum,
    multiplicity,
)
from .partition import (
    BetaSet,
    DomainError,
    HookGrid,
    Partition,
    PartitionError,
    beta_set,
    conjugate,
    hook_grid,
    hook_length,
    make_partition,
    parse_beta_set,
    parse_partition,
    partition_from_beta,
)
from .search import (
    EquivClass,
    SearchReport,
    enumerate_beta_sets,
    find_hook_equivalent_pairs,
    group_by_hook_multiset,
    validate_theorem,
)

__version__ = "0.1.0"
