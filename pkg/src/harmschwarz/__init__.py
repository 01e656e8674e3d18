"""Pre-Schwarzian and Schwarzian derivatives, norms and coefficient bounds for
harmonic mappings of the unit disk."""

from .analytic import (
    AnalyticFn,
    Antiderivative,
    Compose,
    Const,
    Identity,
    Mobius,
    MobiusParams,
    Polynomial,
    Power,
    Product,
    Quotient,
    RecipLinear,
    Sum,
    disk_automorphism,
    jet_eval,
    mobius,
    series_from,
)
from .coeffs import coefficient_bound_check, distortion_check, g_coefficients
from .errors import (
    ConstructionError,
    DegenerateError,
    DomainError,
    HarmonicError,
    MissingQError,
    ParamError,
    SenseError,
    SeriesError,
    SingularityError,
)
from .harmonic import (
    HarmonicMap,
    derivative_bundle,
    dilatation,
    jacobian,
    pre_schwarzian_analytic,
    pre_schwarzian_cdo,
    pre_schwarzian_hm,
    q_functional,
    schwarzian_analytic,
    schwarzian_cdo,
    schwarzian_hm,
)
from .jets import Jet3
from .norms import GridConfig, NormEstimate, bloch_constant, estimate, norm_pre_schwarzian, norm_schwarzian
from .series import PowerSeries
from .transforms import AffineParams, affine_transform, koebe_transform, rotate
from .verify import SUITES, run_suite

__version__ = "0.1.0"
