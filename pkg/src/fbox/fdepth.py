"""Functional depths for discretized samples.

Every depth here reduces to one-dimensional depths of the empirical
column distributions.  Writing ``D1(u; col_t)`` for the depth of a value
within column ``t`` of the sample:

* integrated depths average the pointwise profile ``t -> D1(f(t); col_t)``
  with the grid weights,
* infimal depths take the minimum of that profile over the grid,
* the band depth counts ordered pairs ``(i, j)`` of sample functions,
  drawn with replacement, whose pointwise envelope carries ``f`` at every
  grid point.

The modified band depth is the integrated simplicial depth; :func:`mbd`
is literally that code path.  Integrated and infimal depths cost
``O(n m log n)`` for the whole sample (per-column sorting dominates); the
band depth is quadratic in ``n`` per query function.

Query functions that are not part of the sample are evaluated against
the sample's column distributions without being added to them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import FunctionalSample, Grid

__all__ = [
    "PointwiseDepthMatrix",
    "DepthVector",
    "DEPTH_KINDS",
    "pointwise_depths",
    "integrated_depth",
    "infimal_depth",
    "mbd",
    "band_depth",
    "compute_depths",
]

DEPTH_KINDS = (
    "integrated-halfspace",
    "integrated-simplicial",
    "infimal-halfspace",
    "infimal-simplicial",
    "band",
)

_BASES = ("halfspace", "simplicial")


@dataclass(frozen=True, eq=False)
class PointwiseDepthMatrix:
    """Per-function, per-grid-point one-dimensional depths, all in [0, 1]."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[1] != self.grid.size:
            raise ValueError("depth matrix must be n-by-m")
        if values.min() < 0.0 or values.max() > 1.0 + 1e-9:
            raise ValueError("pointwise depths must lie in [0, 1]")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True, eq=False)
class DepthVector:
    """Depth of every sample function under one depth kind."""

    kind: str
    values: np.ndarray

    def __post_init__(self):
        if self.kind not in DEPTH_KINDS:
            raise ValueError(f"unknown depth kind {self.kind!r}")
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise ValueError("depth vector must be one-dimensional")
        if values.min() < -1e-12 or values.max() > 1.0 + 1e-9:
            raise ValueError("depths must lie in [0, 1]")
        object.__setattr__(self, "values", values)


def _column_counts(reference: np.ndarray, queries: np.ndarray):
    """Strict-below and at-or-below counts of each query within its column."""
    m = reference.shape[1]
    lt = np.empty(queries.shape, dtype=np.int64)
    le = np.empty(queries.shape, dtype=np.int64)
    for j in range(m):
        col = np.sort(reference[:, j])
        lt[:, j] = np.searchsorted(col, queries[:, j], side="left")
        le[:, j] = np.searchsorted(col, queries[:, j], side="right")
    return lt, le


def _pointwise(reference: np.ndarray, queries: np.ndarray, base: str) -> np.ndarray:
    if base not in _BASES:
        raise ValueError(f"unknown base depth {base!r}")
    lt, le = _column_counts(reference, queries)
    n = reference.shape[0]
    if base == "halfspace":
        return np.minimum(le, n - lt) / n
    gt = n - le
    return (n * n - lt * lt - gt * gt) / float(n * n)


def _query_rows(sample: FunctionalSample, f) -> np.ndarray:
    if isinstance(f, (int, np.integer)):
        if not 0 <= int(f) < sample.n_functions:
            raise IndexError("function index out of range")
        return sample.values[int(f)][np.newaxis, :]
    f = np.asarray(f, dtype=float)
    if f.shape != (sample.grid.size,):
        raise ValueError("length mismatch between function and grid")
    return f[np.newaxis, :]


def pointwise_depths(sample: FunctionalSample, base: str = "halfspace") -> PointwiseDepthMatrix:
    """One-dimensional depth of every sample value within its own column."""
    return PointwiseDepthMatrix(sample.grid, _pointwise(sample.values, sample.values, base))


def integrated_depth(sample: FunctionalSample, f, base: str = "halfspace") -> float:
    """Grid-weighted average of the pointwise depth profile of ``f``.

    ``f`` may be a sample row index or an external vector of matching
    length.
    """
    profile = _pointwise(sample.values, _query_rows(sample, f), base)[0]
    return float(profile @ sample.grid.weights)


def infimal_depth(sample: FunctionalSample, f, base: str = "halfspace") -> float:
    """Minimum of the pointwise depth profile of ``f`` over the grid."""
    profile = _pointwise(sample.values, _query_rows(sample, f), base)[0]
    return float(profile.min())


def mbd(sample: FunctionalSample, f) -> float:
    """Modified band depth: the integrated simplicial depth of ``f``."""
    return integrated_depth(sample, f, "simplicial")


def _band_depth_one(values: np.ndarray, f: np.ndarray) -> float:
    # Ordered pairs (i, j) with replacement; a pair fails iff both rows
    # are strictly above f somewhere or strictly below f somewhere.
    above = (values > f).astype(np.float64)
    below = (values < f).astype(np.float64)
    bad = (above @ above.T > 0.0) | (below @ below.T > 0.0)
    n = values.shape[0]
    return (n * n - int(np.count_nonzero(bad))) / (n * n)


def band_depth(sample: FunctionalSample, f) -> float:
    """Fraction of ordered sample pairs whose band contains ``f`` everywhere.

    Pairs are drawn with replacement, so a pair ``(i, i)`` contributes
    only when ``f`` coincides with row ``i``.  Cost is ``O(n^2 m)`` per
    query.
    """
    query = _query_rows(sample, f)[0]
    return _band_depth_one(sample.values, query)


def compute_depths(sample: FunctionalSample, kind: str) -> DepthVector:
    """Depth of every sample row under the requested depth kind.

    ``kind`` is one of :data:`DEPTH_KINDS`; ``"mbd"`` is accepted as an
    alias for ``"integrated-simplicial"``.
    """
    if kind == "mbd":
        kind = "integrated-simplicial"
    if kind not in DEPTH_KINDS:
        raise ValueError(f"unknown depth kind {kind!r}; expected one of {DEPTH_KINDS}")
    if kind == "band":
        values = sample.values
        depths = np.array([_band_depth_one(values, values[i]) for i in range(len(values))])
        return DepthVector("band", depths)
    family, base = kind.split("-")
    matrix = _pointwise(sample.values, sample.values, base)
    if family == "integrated":
        return DepthVector(kind, matrix @ sample.grid.weights)
    return DepthVector(kind, matrix.min(axis=1))
