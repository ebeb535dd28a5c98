"""
DRINFELD Series Components

Truncated u-expansions graded by type, with explicit precision
bookkeeping, plus their text cache and JSON payloads.
"""

from .useries import USeries, SeriesComparison, sum_series
from .codec import dump_series, load_series, series_payload, FORMAT_VERSION

__all__ = [
    'USeries',
    'SeriesComparison',
    'sum_series',
    'dump_series',
    'load_series',
    'series_payload',
    'FORMAT_VERSION',
]
