"""Piecewise-linear probability densities with exact closed-form statistics.

The package represents one-dimensional densities that are linear on each
piece of a breakpoint grid and may jump at the breakpoints.  Everything
downstream of that representation is exact: normalization, PDF/CDF
evaluation, moments up to order twelve, median sets and quantile
preimages (interval-valued where the CDF is flat), generalized mode sets
for discontinuous densities, triangular and tetragonal special-case
constructors with closed-form statistics, interpolatory polygonal fits,
and a JSON-driven command line (``pwldist``).
"""

from .density import (
    NORMALIZATION_RTOL,
    Grid,
    NormalizationReport,
    PiecewiseLinearDensity,
    PolygonalDensity,
    canonicalize,
    normalize,
    promote,
    raw_mass,
    require_normalized,
    scale,
    validate,
)
from .errors import (
    BadOrderError,
    BadProbabilityError,
    DensityError,
    EmptySupportError,
    LengthMismatchError,
    NegativeValueError,
    NotIncreasingError,
    NotNondecreasingError,
    NotNormalizedError,
    OrderTooLargeError,
    OutOfSupportError,
    ParseError,
    SchemaError,
    ZeroMassError,
)
from .evaluate import (
    POINT_RULES,
    CdfTable,
    breakpoint_values,
    cdf,
    cdf_table,
    pdf,
    piece_index,
)
from .moments import (
    MAX_MOMENT_ORDER,
    MomentSummary,
    mean,
    mean_polygonal,
    raw_moment,
    summary,
    variance,
    variance_polygonal,
)
from .order_stats import (
    QUANTILE_RULES,
    MedianSet,
    QuantilePreimage,
    median_set,
    quantile,
    quantile_preimage,
    sample,
)
from .modes import (
    CONVENTIONS,
    DEFAULT_CONVENTION,
    ModeLocus,
    ModeSet,
    f_sup,
    mode_set,
    mode_set_continuous,
)
from .families import (
    TetragonalParams,
    TetragonalStats,
    TriangularParams,
    TriangularStats,
    tetragonal,
    tetragonal_from_weight,
    tetragonal_mean_alpha,
    tetragonal_stats,
    triangular,
    triangular_stats,
)
from .approximation import FitRequest, fit, fit_error
from .cli import DistributionSpecFile, parse_spec, seeded_uniforms

__version__ = "0.1.0"

__all__ = [
    "NORMALIZATION_RTOL",
    "Grid",
    "NormalizationReport",
    "PiecewiseLinearDensity",
    "PolygonalDensity",
    "canonicalize",
    "normalize",
    "promote",
    "raw_mass",
    "require_normalized",
    "scale",
    "validate",
    "DensityError",
    "BadOrderError",
    "BadProbabilityError",
    "EmptySupportError",
    "LengthMismatchError",
    "NegativeValueError",
    "NotIncreasingError",
    "NotNondecreasingError",
    "NotNormalizedError",
    "OrderTooLargeError",
    "OutOfSupportError",
    "ParseError",
    "SchemaError",
    "ZeroMassError",
    "POINT_RULES",
    "CdfTable",
    "breakpoint_values",
    "cdf",
    "cdf_table",
    "pdf",
    "piece_index",
    "MAX_MOMENT_ORDER",
    "MomentSummary",
    "mean",
    "mean_polygonal",
    "raw_moment",
    "summary",
    "variance",
    "variance_polygonal",
    "QUANTILE_RULES",
    "MedianSet",
    "QuantilePreimage",
    "median_set",
    "quantile",
    "quantile_preimage",
    "sample",
    "CONVENTIONS",
    "DEFAULT_CONVENTION",
    "ModeLocus",
    "ModeSet",
    "f_sup",
    "mode_set",
    "mode_set_continuous",
    "TetragonalParams",
    "TetragonalStats",
    "TriangularParams",
    "TriangularStats",
    "tetragonal",
    "tetragonal_from_weight",
    "tetragonal_mean_alpha",
    "tetragonal_stats",
    "triangular",
    "triangular_stats",
    "FitRequest",
    "fit",
    "fit_error",
    "DistributionSpecFile",
    "parse_spec",
    "seeded_uniforms",
]
