"""Exact computations with valuations on K[X] over (Q, v_p) and (F_p(t), v_t)."""

from .values import INF, LexValue, UndefinedOperationError
from .groundfield import (
    FieldMismatchError,
    PAdicRationals,
    Polynomial,
    RationalFunctions,
    make_field,
)
from .valuations import (
    CertificationError,
    InadmissibleAugmentationError,
    InductiveValuation,
    MinimalValuation,
    PairValuation,
    TruncationValuation,
    augment,
    epsilon,
    q_expansion,
    truncate,
    w_equivalent,
)
from .algebraic import (
    AlgebraicElement,
    AmbiguityError,
    CandidateSet,
    MinimalPairValuation,
    check_distinguished_pair,
    delta_K_probe,
    minimal_pair_eval,
    mutual_valuations,
    optimal_value,
)

__version__ = "0.1.0"
