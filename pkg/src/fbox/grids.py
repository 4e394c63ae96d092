"""Evaluation grids, functional samples, and band algebra.

A band is the closed region between a lower and an upper envelope over a
shared grid of evaluation points.  Central regions, whiskers, and data
envelopes are all bands, and the boxplot machinery is assembled from the
pointwise band operations in this module: construction from a subset of
sample rows, containment, mean width, and inflation around a center
curve.

Integrals over the domain are discretized to weighted sums over the grid
and infima to minima over the grid points; the grid therefore carries a
quadrature weight vector (uniform by default).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Grid",
    "FunctionalSample",
    "Band",
    "uniform_grid",
    "band_of",
    "inflate",
    "fence",
    "grids_equal",
]

_WEIGHT_SUM_TOL = 1e-12


def _readonly(array, dtype=float) -> np.ndarray:
    out = np.array(array, dtype=dtype, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class Grid:
    """Strictly increasing evaluation points in [0, 1] with quadrature weights.

    Parameters
    ----------
    points : array_like
        Evaluation points ``t_1 < ... < t_m`` inside the unit interval,
        at least two of them.
    weights : array_like, optional
        Nonnegative quadrature weights summing to one.  Defaults to the
        uniform rule ``1/m``.
    """

    points: np.ndarray
    weights: np.ndarray | None = None

    def __post_init__(self):
        points = _readonly(self.points)
        if points.ndim != 1:
            raise ValueError("grid points must be one-dimensional")
        if points.size < 2:
            raise ValueError("a grid needs at least two points")
        if not np.all(np.isfinite(points)):
            raise ValueError("grid points must be finite")
        if points[0] < 0.0 or points[-1] > 1.0:
            raise ValueError("grid points must lie in [0, 1]")
        if np.any(np.diff(points) <= 0.0):
            raise ValueError("grid points must be strictly increasing")
        if self.weights is None:
            weights = _readonly(np.full(points.size, 1.0 / points.size))
        else:
            weights = _readonly(self.weights)
            if weights.shape != points.shape:
                raise ValueError("weights must match the grid points")
            if not np.all(np.isfinite(weights)) or np.any(weights < 0.0):
                raise ValueError("weights must be finite and nonnegative")
            if abs(float(weights.sum()) - 1.0) > _WEIGHT_SUM_TOL:
                raise ValueError("weights must sum to one")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return self.points.size


def uniform_grid(size: int = 101) -> Grid:
    """Equispaced grid on [0, 1] including both endpoints."""
    return Grid(np.linspace(0.0, 1.0, size))


def grids_equal(a: Grid, b: Grid) -> bool:
    return np.array_equal(a.points, b.points) and np.array_equal(a.weights, b.weights)


@dataclass(frozen=True, eq=False)
class FunctionalSample:
    """Discretized functions on a shared grid, one matrix row per function."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True)
        if values.ndim == 1:
            values = values[np.newaxis, :]
        if values.ndim != 2:
            raise ValueError("values must form an n-by-m matrix")
        if values.shape[0] < 1:
            raise ValueError("a sample needs at least one function")
        if values.shape[1] != self.grid.size:
            raise ValueError("row length must match the grid size")
        if not np.all(np.isfinite(values)):
            raise ValueError("function values must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def n_functions(self) -> int:
        return self.values.shape[0]

    def row(self, index: int) -> np.ndarray:
        return self.values[index]


@dataclass(frozen=True, eq=False)
class Band:
    """Closed region between a lower and an upper envelope over a grid.

    Envelope values live on the extended real line: ``-inf`` entries in
    the lower envelope and ``+inf`` entries in the upper one encode
    unbounded slices.  Containment is closed, so touching an envelope
    still counts as being inside.
    """

    grid: Grid
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = _readonly(self.lower)
        upper = _readonly(self.upper)
        if lower.shape != (self.grid.size,) or upper.shape != (self.grid.size,):
            raise ValueError("envelopes must match the grid size")
        if np.any(np.isnan(lower)) or np.any(np.isnan(upper)):
            raise ValueError("envelopes must not contain NaN")
        if np.any(lower > upper):
            raise ValueError("lower envelope must not exceed the upper one")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def contains(self, f) -> bool:
        """Whether ``f`` stays inside the band at every grid point."""
        f = np.asarray(f, dtype=float)
        if f.shape != (self.grid.size,):
            raise ValueError("length mismatch between function and grid")
        return bool(np.all((self.lower <= f) & (f <= self.upper)))

    def contains_rows(self, values: np.ndarray) -> np.ndarray:
        """Vector of containment flags for every row of ``values``."""
        values = np.asarray(values, dtype=float)
        if values.ndim != 2 or values.shape[1] != self.grid.size:
            raise ValueError("length mismatch between rows and grid")
        return np.all((values >= self.lower) & (values <= self.upper), axis=1)

    def widths(self) -> np.ndarray:
        return self.upper - self.lower

    def mean_width(self) -> float:
        """Weighted average slice width over the grid."""
        if not (np.all(np.isfinite(self.lower)) and np.all(np.isfinite(self.upper))):
            raise ValueError("unbounded band")
        return float(np.dot(self.grid.weights, self.upper - self.lower))


def band_of(sample: FunctionalSample, indices) -> Band:
    """Band spanned by the selected sample rows.

    The lower envelope is the pointwise minimum over the selected rows
    and the upper envelope the pointwise maximum.
    """
    idx = np.asarray(indices, dtype=np.intp).ravel()
    if idx.size == 0:
        raise ValueError("empty band")
    if np.any(idx < 0) or np.any(idx >= sample.n_functions):
        raise IndexError("band index out of range")
    rows = sample.values[idx]
    return Band(sample.grid, rows.min(axis=0), rows.max(axis=0))


def inflate(band: Band, median, factor: float) -> Band:
    """Inflate a band around a center curve by a constant factor.

    Each slice is stretched away from ``median`` so that the distances to
    both envelopes grow by ``factor``; ``factor=1`` returns the band
    unchanged.
    """
    median = np.asarray(median, dtype=float)
    if median.shape != (band.grid.size,):
        raise ValueError("length mismatch between median and grid")
    if factor < 1.0:
        raise ValueError("inflation factor must be at least 1")
    if np.any(median < band.lower) or np.any(median > band.upper):
        raise ValueError("median outside band")
    if factor == 1.0:
        return band
    lower = median - factor * (median - band.lower)
    upper = median + factor * (band.upper - median)
    return Band(band.grid, lower, upper)


def fence(band: Band, factor: float) -> Band:
    """Widen a band by adding ``(factor - 1)/2`` times its width to both sides.

    Alternative whisker rule: for a centered median this coincides with
    :func:`inflate`, but the two differ when the median is off-center
    within the band.
    """
    if factor < 1.0:
        raise ValueError("inflation factor must be at least 1")
    margin = 0.5 * (factor - 1.0) * (band.upper - band.lower)
    return Band(band.grid, band.lower - margin, band.upper + margin)
