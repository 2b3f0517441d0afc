"""Norm-concentration experiments for band-limited functions on thick sets.

The package measures how much of the Lp norm of a function with bounded
spectrum survives restriction to a relatively dense (thick) subset of the
line or the torus, and compares measured ratios with closed-form lower
bounds.
"""
from .bandlimited import (
    BandSpec,
    NormQuery,
    TrigPoly,
    bernstein_ratio,
    full_torus,
    lattice_indices,
    lp_norm,
    random_bandlimited,
)
from .bounds import (
    BoundConstants,
    DEFAULT_CONSTANTS,
    MultiDimParams,
    NazarovRemezBounds,
    Remark1Bounds,
    lemma1_corollary_bound,
    lemma3_bound,
    multidim_bound,
    nazarov_remez_bounds,
    remark1_bounds,
    theorem1_bound,
    theorem1_bound_log10,
    theorem2_bound,
    theorem2_bound_log10,
    theorem2prime_bound,
)
from .concentration import (
    ConcentrationResult,
    GramMatrix,
    SharpnessReport,
    gram_matrix,
    jacobi_eigh,
    min_concentration,
    sharpness_gap,
)
from .errors import (
    BandOverlapError,
    BandTooSmallError,
    ConfigError,
    DuplicateFrequencyError,
    EmptyBandError,
    EmptySetError,
    InsufficientDataError,
    InvalidBandError,
    InvalidDegreeError,
    InvalidExponentError,
    InvalidGammaError,
    InvalidIntervalError,
    InvalidMError,
    InvalidWindowError,
    NonIntegrableError,
    SizeLimitError,
    ThicksetError,
    ZeroFunctionError,
)
from .extremal import (
    ExponentFit,
    ExtremalInstance,
    default_truncation,
    exponent_fit,
    extremal_pair,
    extremal_ratio,
    spectral_mass_outside_band,
)
from .proofcheck import (
    BandComponentNorms,
    ClassifierParams,
    ExpSumCheck,
    GrowthEnvelope,
    IntervalClassification,
    LocalEstimate,
    TaylorSplit,
    band_component_norms,
    classify_intervals,
    exp_sum_verifier,
    good_mass_check,
    growth_envelope,
    local_estimate_check,
    minimal_transfer_constant,
    taylor_remainder_bound,
    taylor_split,
    unit_partition,
)
from .sets import (
    IntervalSet,
    ThicknessCertificate,
    measure_within,
    normalize,
    thickness,
    two_sliver_set,
)

__version__ = "0.1.0"

__all__ = [
    "BandComponentNorms",
    "BandOverlapError",
    "BandSpec",
    "BandTooSmallError",
    "BoundConstants",
    "ClassifierParams",
    "ConcentrationResult",
    "ConfigError",
    "DEFAULT_CONSTANTS",
    "DuplicateFrequencyError",
    "EmptyBandError",
    "EmptySetError",
    "ExpSumCheck",
    "ExponentFit",
    "ExtremalInstance",
    "GramMatrix",
    "GrowthEnvelope",
    "InsufficientDataError",
    "IntervalClassification",
    "IntervalSet",
    "InvalidBandError",
    "InvalidDegreeError",
    "InvalidExponentError",
    "InvalidGammaError",
    "InvalidIntervalError",
    "InvalidMError",
    "InvalidWindowError",
    "LocalEstimate",
    "MultiDimParams",
    "NazarovRemezBounds",
    "NonIntegrableError",
    "NormQuery",
    "Remark1Bounds",
    "SharpnessReport",
    "SizeLimitError",
    "TaylorSplit",
    "ThicknessCertificate",
    "ThicksetError",
    "TrigPoly",
    "ZeroFunctionError",
    "band_component_norms",
    "bernstein_ratio",
    "classify_intervals",
    "default_truncation",
    "exp_sum_verifier",
    "exponent_fit",
    "extremal_pair",
    "extremal_ratio",
    "full_torus",
    "good_mass_check",
    "gram_matrix",
    "growth_envelope",
    "jacobi_eigh",
    "lattice_indices",
    "lemma1_corollary_bound",
    "lemma3_bound",
    "local_estimate_check",
    "lp_norm",
    "measure_within",
    "min_concentration",
    "minimal_transfer_constant",
    "multidim_bound",
    "nazarov_remez_bounds",
    "normalize",
    "random_bandlimited",
    "remark1_bounds",
    "sharpness_gap",
    "spectral_mass_outside_band",
    "taylor_remainder_bound",
    "taylor_split",
    "theorem1_bound",
    "theorem1_bound_log10",
    "theorem2_bound",
    "theorem2_bound_log10",
    "theorem2prime_bound",
    "thickness",
    "two_sliver_set",
    "unit_partition",
]
