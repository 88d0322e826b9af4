"""Weekly market series analysis: cleaning, statistics, seasonal indices and DTW."""

from ._core import (
    DomainError,
    InsufficientDataError,
    InvalidInputError,
    NoValidPathError,
    SeasonwarpError,
    __version__,
    adf_test,
    describe,
    dtw_align,
    generate_fixture,
    iqr_outliers,
    iso_week_of,
    jarque_bera,
    log_diff,
    moments,
    quantile,
    rank_pairs,
    run_cli,
    seasonal_index,
    spline_interpolate,
)

__all__ = [
    "DomainError",
    "InsufficientDataError",
    "InvalidInputError",
    "NoValidPathError",
    "SeasonwarpError",
    "__version__",
    "adf_test",
    "describe",
    "dtw_align",
    "generate_fixture",
    "iqr_outliers",
    "iso_week_of",
    "jarque_bera",
    "log_diff",
    "moments",
    "quantile",
    "rank_pairs",
    "run_cli",
    "seasonal_index",
    "spline_interpolate",
]
