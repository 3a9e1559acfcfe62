"""Weyl discrepancy norms for event sequences from threshold-based sampling.

Core pieces: sequence norms (`norms`), integer event trains and their
metric (`events`), SOD/IF encoders with quasi-isometry verification
(`sampling`), Jordan-type monotone decompositions (`decomposition`), dual
norms and the monotonicity measure (`duality`), misalignment profiles and
the discrepancy-variation inequality (`analysis`), plus a CLI (`cli`).
"""

from .analysis import (
    HeisenbergReport,
    MisalignmentProfile,
    check_shift_lipschitz,
    check_shift_monotone,
    heisenberg_check,
    misalignment,
    shifted_difference,
    sign_changes,
)
from .decomposition import (
    ContinuousJordan,
    DiscreteJordan,
    RangeFunction,
    jordan_continuous,
    jordan_discrete,
    range_function,
)
from .duality import (
    DualNormReport,
    FunctionalWeights,
    alexiewicz_dual,
    apply_functional,
    boundedness_check,
    dual_discrepancy_fast,
    dual_discrepancy_oracle,
    dual_report,
    monotonicity_measure,
)
from .events import EventSequence, difference, distance, event_discrepancy, restrict
from .norms import (
    DEFAULT_TOL,
    NormKind,
    alexiewicz_norm,
    compute_norm,
    discrepancy_fast,
    discrepancy_naive,
    p_norm,
    prefix_extremes,
    total_variation,
)
from .sampling import (
    QuasiIsometryReport,
    SamplerConfig,
    Scheme,
    Signal,
    cumulative_integral,
    encode,
    if_encode,
    input_distance,
    integral_discrepancy,
    output_distance,
    quasi_isometry_check,
    range_seminorm,
    sod_encode,
    sod_hypercube_image,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
