"""Depth-based ordering of sample functions and tie-breaking refinements.

Infimal depths of sample functions are integer pointwise ranks divided
by ``n``, so ties are pervasive.  Two refinements break them:

``erl``
    Extreme rank length.  Each function gets the vector of its two-sided
    pointwise ranks, sorted ascending; vectors are compared
    lexicographically and the score of a function is the fraction of
    functions whose vector precedes or equals its own.  Scores lie in
    ``(0, 1]`` and higher means deeper.

``area``
    Extreme rank level minus the average shortfall of the continuous
    pointwise ranks below that level.  The continuous rank refines the
    integer rank by linear interpolation between neighboring order
    statistics within each column, so the score separates functions that
    share an extreme rank by how close to the data edge they run.

Two-sided pointwise ranks use closed counts, ``min(#{<= v}, #{>= v})``
within a column, so tied values share the count of their whole tie group
and the rank of a sample value is exactly ``n`` times its halfspace
depth in that column.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .fdepth import DepthVector, _column_counts
from .grids import Band, FunctionalSample

__all__ = [
    "DepthRanking",
    "rank_by_depth",
    "two_sided_ranks",
    "erl_scores",
    "area_scores",
    "outlyingness_index",
    "outlyingness_indices",
]


@dataclass(frozen=True, eq=False)
class DepthRanking:
    """Ordering of sample functions from deepest to shallowest.

    ``order`` is a permutation of row indices sorted by decreasing depth,
    with refinement scores (when present) and then the original index
    breaking ties.  ``ranks`` carries average ranks: functions with equal
    depth share the mean of the ranks they occupy, deepest rank being 1.
    """

    depth: DepthVector
    order: np.ndarray
    ranks: np.ndarray
    refinement: np.ndarray | None = None


def rank_by_depth(depth: DepthVector, refinement=None) -> DepthRanking:
    """Order functions by decreasing depth with deterministic tie handling.

    Ties in depth are broken by the refinement scores when given, then by
    the original index (lower index ranks deeper), so the ordering is
    reproducible.  Average ranks are computed from the depth values
    alone.
    """
    d = depth.values
    n = d.size
    if refinement is None:
        ref = np.zeros(n)
    else:
        ref = np.asarray(refinement, dtype=float)
        if ref.shape != d.shape:
            raise ValueError("refinement scores must match the depth vector")
    order = np.lexsort((np.arange(n), -ref, -d))
    ranks = rankdata(-d, method="average")
    kept = None if refinement is None else ref
    return DepthRanking(depth=depth, order=order, ranks=ranks, refinement=kept)


def two_sided_ranks(values: np.ndarray) -> np.ndarray:
    """Column-wise two-sided ranks ``min(#{<= v}, #{>= v})``, an integer matrix."""
    values = np.asarray(values, dtype=float)
    lt, le = _column_counts(values, values)
    n = values.shape[0]
    return np.minimum(le, n - lt)


def erl_scores(sample: FunctionalSample) -> np.ndarray:
    """Extreme rank length score of every sample function, in ``(0, 1]``."""
    n = sample.n_functions
    if n < 2:
        raise ValueError("erl scores need at least two functions")
    profiles = np.sort(two_sided_ranks(sample.values), axis=1)
    order = np.lexsort(profiles.T[::-1])
    sorted_profiles = profiles[order]
    new_group = np.ones(n, dtype=bool)
    new_group[1:] = np.any(sorted_profiles[1:] != sorted_profiles[:-1], axis=1)
    group_id = np.cumsum(new_group) - 1
    group_last = np.cumsum(np.bincount(group_id))
    scores = np.empty(n)
    scores[order] = group_last[group_id] / n
    return scores


def _continuous_two_sided_ranks(values: np.ndarray, lt: np.ndarray, le: np.ndarray) -> np.ndarray:
    """Interpolated two-sided column ranks, scaled to ``(0, n/2]``.

    Within a column the one-sided ranks from below and from above each
    get an interpolation fraction between the neighboring distinct order
    statistics (the range is extended by mirroring the first and last gap
    so the fraction is 1/2 at both extremes); exact ties are averaged via
    the usual midrank offset.  The two one-sided ranks always sum to
    ``n``, so their minimum lies in ``(0, n/2]``.
    """
    n, m = values.shape
    out = np.empty((n, m))
    for j in range(m):
        z, inv = np.unique(values[:, j], return_inverse=True)
        if z.size == 1:
            psi = np.array([0.5])
        else:
            zext = np.concatenate(([2.0 * z[0] - z[1]], z, [2.0 * z[-1] - z[-2]]))
            psi = (zext[1:-1] - zext[:-2]) / (zext[2:] - zext[:-2])
        half_tie = 0.5 * (le[:, j] - lt[:, j] - 1)
        below = lt[:, j] + half_tie + psi[inv]
        above = (n - le[:, j]) + half_tie + (1.0 - psi[inv])
        out[:, j] = np.minimum(below, above)
    return out


def area_scores(sample: FunctionalSample) -> np.ndarray:
    """Area score of every sample function; higher means deeper.

    The score of a function is its extreme rank level (the minimum of its
    integer two-sided pointwise ranks) minus the grid-weighted average of
    ``max(0, level - c(t))``, where ``c(t)`` are the continuous pointwise
    ranks.  For tie-free columns the continuous rank stays within one
    unit below the integer rank, so scores refine the extreme-rank
    ordering without ever reordering it.
    """
    n = sample.n_functions
    if n < 2:
        raise ValueError("area scores need at least two functions")
    values = sample.values
    lt, le = _column_counts(values, values)
    ranks = np.minimum(le, n - lt)
    level = ranks.min(axis=1).astype(float)
    cont = _continuous_two_sided_ranks(values, lt, le)
    deficit = np.maximum(0.0, level[:, np.newaxis] - cont)
    return level - deficit @ sample.grid.weights


def outlyingness_indices(band: Band, median, values: np.ndarray) -> np.ndarray:
    """Smallest inflation factor putting each row inside the inflated band.

    For a row ``f`` the index is the maximum over grid points of the
    deviation from the median divided by the half-width of the band on
    the relevant side; a zero half-width with a deviating value yields
    ``inf``.  A row is contained in ``inflate(band, median, c)`` exactly
    when its index is at most ``c``.
    """
    median = np.asarray(median, dtype=float)
    if median.shape != (band.grid.size,):
        raise ValueError("length mismatch between median and grid")
    if np.any(median < band.lower) or np.any(median > band.upper):
        raise ValueError("median outside band")
    values = np.atleast_2d(np.asarray(values, dtype=float))
    if values.shape[1] != band.grid.size:
        raise ValueError("length mismatch between rows and grid")
    up = band.upper - median
    down = median - band.lower
    dev = values - median
    ratios = np.zeros_like(values)
    with np.errstate(divide="ignore", invalid="ignore"):
        r_up = dev / up
        r_down = -dev / down
    pos = dev > 0.0
    neg = dev < 0.0
    ratios[pos] = r_up[pos]
    ratios[neg] = r_down[neg]
    return ratios.max(axis=1)


def outlyingness_index(band: Band, median, f) -> float:
    """Outlyingness of a single function; see :func:`outlyingness_indices`."""
    f = np.asarray(f, dtype=float)
    if f.shape != (band.grid.size,):
        raise ValueError("length mismatch between function and grid")
    return float(outlyingness_indices(band, median, f[np.newaxis, :])[0])
