"""Fréchet bounds of the 1st kind for finite event sets, with exact-rational
LP verification and half-rare projection machinery."""

from .bounds import (
    BoundaryDistributions,
    CovarianceBounds,
    boundary_distributions,
    covariance_bounds_doublet,
    covariance_first_kind,
    doublet_bounds,
    lower_bound_general,
    lower_bound_half_rare,
    upper_bound_general,
    upper_bound_half_rare,
)
from .core import (
    EventSet,
    HalfRareMarginalSet,
    MarginalSet,
    TerraceDistribution,
    indicator_string,
    make_event_set,
    marginals_from_values,
    subset_iter,
    validate_marginals,
)
from .oracle import (
    JointDistribution,
    VerificationReport,
    lp_extremize_terrace,
    random_marginals,
    verify_bounds,
)
from .transforms import (
    PhenomenonMap,
    apply_phenomenon,
    bounds_via_projection,
    half_rare_projection,
    independent_epd,
    independent_value,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryDistributions",
    "CovarianceBounds",
    "EventSet",
    "HalfRareMarginalSet",
    "JointDistribution",
    "MarginalSet",
    "PhenomenonMap",
    "TerraceDistribution",
    "VerificationReport",
    "apply_phenomenon",
    "boundary_distributions",
    "bounds_via_projection",
    "covariance_bounds_doublet",
    "covariance_first_kind",
    "doublet_bounds",
    "half_rare_projection",
    "independent_epd",
    "independent_value",
    "indicator_string",
    "lower_bound_general",
    "lower_bound_half_rare",
    "lp_extremize_terrace",
    "make_event_set",
    "marginals_from_values",
    "random_marginals",
    "subset_iter",
    "upper_bound_general",
    "upper_bound_half_rare",
    "validate_marginals",
    "verify_bounds",
]
