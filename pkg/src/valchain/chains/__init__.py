from .complete import (
    Block,
    ChainInvariantError,
    CommensurabilityError,
    CompleteSet,
    Entry,
    NotConvertibleError,
    NotFiniteError,
    alpha_probe,
    completeness_check,
    monic_sweep,
    psi_membership,
)
from .family import (
    ContinuousFamily,
    GeneratorError,
    HorizonError,
    LimitAugmentation,
    ScopeError,
    default_horizon,
    family_check,
    limit_augment,
    rho_values,
    stable_value,
)
from .maclane import (
    LimitStep,
    MLVChain,
    OptimalMacLaneChain,
    OrdinaryStep,
    complete_to_maclane,
    complete_to_mlv,
    maclane_to_complete,
    mlv_to_complete,
)
from .okutsu import (
    DistinguishedChain,
    MinimalPairViolation,
    OkutsuFrame,
    convert_sdc_okutsu,
    sdc_to_complete,
    validate_okutsu,
    validate_sdc,
)
from .reports import Check, Report
