"""Exact linear algebra for pairs of maps S: X -> Y, T: Y -> X.

The package computes the four defect numbers of a pair and its index, the
decomposition of X and Y by the kernels and ranges of S and T, generalized
inverse pairs, the range-sequence classification with its canonical block
presentation, folds of chains into pairs, and the induced pair on quotients.
Arithmetic is over the rationals throughout.
"""

from .chains import C1, C2, ChainComplex, chain_report, fold, is_split_chain, splitting_homotopy
from .checks import CheckResult, run_checks
from .classification import (
    Classification,
    canonical_form,
    classify,
    full_decomposition,
    index_formulas,
    is_regular_weyl,
    is_weyl,
    level_presentation,
    presentation,
    range_sequences,
    subspace_families,
    unmatched_blocks,
)
from .errors import (
    ContainmentError,
    DimensionError,
    FredpairsError,
    InconsistencyError,
    InfeasibleComplementError,
    NotAComplexError,
    NotGeneralizedInverseError,
    SpecValidationError,
    TheoremViolation,
)
from .generators import (
    SplitMix64,
    SynthSpec,
    conjugate,
    exact_chain,
    feasible_specs,
    pseudo_inverse_counterexample,
    random_chain,
    random_pair,
    symmetric_index_pair,
    synth_from_case,
    validate_spec,
)
from .matrix import Matrix, identity, zeros
from .pair import (
    ID2,
    P1,
    SYM1,
    DefectProfile,
    OperatorPair,
    Z,
    adjoint_pair,
    decompose,
    defects,
    generalized_inverse,
    is_symmetrical,
    pair_index,
    swap,
)
from .quotient import quotient_pair, verify_transfer
from .subspace import Subspace, intersect, kernel, span, sum_of

__version__ = "0.1.0"

__all__ = [
    "C1",
    "C2",
    "ChainComplex",
    "CheckResult",
    "Classification",
    "ContainmentError",
    "DefectProfile",
    "DimensionError",
    "FredpairsError",
    "ID2",
    "InconsistencyError",
    "InfeasibleComplementError",
    "Matrix",
    "NotAComplexError",
    "NotGeneralizedInverseError",
    "OperatorPair",
    "P1",
    "SYM1",
    "SpecValidationError",
    "SplitMix64",
    "Subspace",
    "SynthSpec",
    "TheoremViolation",
    "Z",
    "adjoint_pair",
    "canonical_form",
    "chain_report",
    "classify",
    "conjugate",
    "exact_chain",
    "decompose",
    "defects",
    "feasible_specs",
    "fold",
    "full_decomposition",
    "generalized_inverse",
    "identity",
    "index_formulas",
    "intersect",
    "is_regular_weyl",
    "is_split_chain",
    "is_symmetrical",
    "is_weyl",
    "kernel",
    "level_presentation",
    "pair_index",
    "presentation",
    "pseudo_inverse_counterexample",
    "quotient_pair",
    "random_chain",
    "random_pair",
    "range_sequences",
    "run_checks",
    "span",
    "splitting_homotopy",
    "subspace_families",
    "sum_of",
    "swap",
    "symmetric_index_pair",
    "synth_from_case",
    "unmatched_blocks",
    "validate_spec",
    "verify_transfer",
    "zeros",
]
