"""Solvers and generators for finite partially ordered sets.

Decides existential first-order model checking, induced embedding,
homomorphism, and isomorphism on finite posets, with fast paths for
bounded-width targets and brute-force reference oracles.
"""

from .errors import (
    BlowupLimitExceededError,
    BudgetExceededError,
    BudgetExhaustedError,
    CapExceededError,
    ChainMismatchError,
    ColoringRangeError,
    CyclicCoversError,
    FormulaNotInClassError,
    FreeVariableError,
    InfeasibleKError,
    InternalError,
    LatticeTooLargeError,
    NonExistentialQuantifierError,
    NotAntisymmetricError,
    NotReflexiveError,
    NotTransitiveError,
    PosetAxiomError,
    PosetCheckError,
    SentenceSyntaxError,
    SizeCapExceededError,
    TooLargeToVerifyError,
    VocabularyMismatchError,
)
from .poset import (
    ChainPartition,
    CoverDigraph,
    InvariantReport,
    Poset,
    depth,
    format_poset_text,
    from_covers,
    hasse_dot,
    invariants,
    parse_poset_text,
    poset_from_json,
    poset_to_json,
    to_covers,
    validate_poset,
    width,
    width_and_chain_partition,
)
from .structures import (
    POSET_VOCABULARY,
    Structure,
    Vocabulary,
    poset_of_structure,
    structure_of_poset,
    try_poset_of_structure,
)
from .logic import (
    Sentence,
    evaluate,
    format_sentence,
    mc,
    parse_sentence,
    reduced_completion,
    sentence_of_structure,
)
from .hashfam import (
    HashFamily,
    build_family,
    family_from_json,
    family_to_json,
    find_uncovered_subset,
    verify_k_perfect,
)
from .compilation import (
    Coloring,
    Compilation,
    Coordinatization,
    check_polymorphism,
    compile_poset,
    coordinatization_of_chains,
    coordinatize,
    find_polymorphism_violation,
    materialize,
)
from .homsolver import HomInstance, arc_consistency_trace, solve_semilattice_hom
from .embedder import EmbeddingWitness, SearchBudget, embed, verify_embedding
from .isomorphism import (
    DistributiveLattice,
    antichain_lattice,
    iso,
    join_irreducibles,
    lattice_iso,
)
from .oracle import brute_embed, brute_hom, brute_iso, brute_mc

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
