"""One-dimensional sample depths over empirical distributions.

All depths are plug-in versions: the empirical distribution places mass
``1/n`` on every observation, repeated values included.  Counts use the
closed-tail conventions below so that the scalar functions here agree
exactly with the vectorized column kernels in :mod:`fbox.fdepth`.

* halfspace depth of ``u``: ``min(#{y <= u}, #{y >= u}) / n``
* simplicial depth of ``u``: the probability that ``u`` lies between two
  independent draws (with replacement), which equals
  ``(n^2 - #{y < u}^2 - #{y > u}^2) / n^2``.

Both are piecewise constant between order statistics, so properties such
as unimodality or threshold conditions can be decided on a finite probe
set: the sample values, the midpoints between adjacent distinct values,
and one point beyond each end of the range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "UnivariateSample",
    "halfspace_depth",
    "simplicial_depth",
    "median_set",
    "probe_points",
    "check_md",
    "DEPTH_FUNCTIONS",
]


@dataclass(frozen=True, eq=False)
class UnivariateSample:
    """Nonempty collection of finite reals, each carrying mass 1/n."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True).ravel()
        if values.size == 0:
            raise ValueError("sample must be nonempty")
        if not np.all(np.isfinite(values)):
            raise ValueError("sample values must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return self.values.size


def _values(q) -> np.ndarray:
    if isinstance(q, UnivariateSample):
        return q.values
    return UnivariateSample(np.asarray(q)).values


def halfspace_depth(u: float, q) -> float:
    """Smaller of the two closed tail probabilities at ``u``."""
    v = _values(q)
    n = v.size
    le = int(np.count_nonzero(v <= u))
    ge = int(np.count_nonzero(v >= u))
    return min(le, ge) / n


def simplicial_depth(u: float, q) -> float:
    """Probability that ``u`` is covered by the range of two independent draws.

    The two draws are taken with replacement, so the value equals
    ``1 - P(both draws < u) - P(both draws > u)`` computed with exact
    integer counts.
    """
    v = _values(q)
    n = v.size
    lt = int(np.count_nonzero(v < u))
    gt = int(np.count_nonzero(v > u))
    return (n * n - lt * lt - gt * gt) / (n * n)


def median_set(q) -> tuple[float, float]:
    """Closed interval of medians in the broad sense.

    These are the points ``u`` with ``F(u-) <= 1/2 <= F(u)`` for the
    empirical distribution function ``F``: the middle order statistic for
    odd sample sizes, the interval between the two middle order
    statistics for even ones.
    """
    s = np.sort(_values(q))
    n = s.size
    if n % 2 == 1:
        mid = float(s[(n - 1) // 2])
        return (mid, mid)
    return (float(s[n // 2 - 1]), float(s[n // 2]))


def probe_points(q) -> np.ndarray:
    """Finite probe set on which the depths take all their values.

    Contains every sample value, the midpoint of each pair of adjacent
    distinct values, and one point beyond each end of the range.
    """
    u = np.unique(_values(q))
    mids = 0.5 * (u[:-1] + u[1:])
    return np.unique(np.concatenate([u, mids, [u[0] - 1.0, u[-1] + 1.0]]))


DEPTH_FUNCTIONS = {
    "halfspace": halfspace_depth,
    "simplicial": simplicial_depth,
}


def check_md(depth_kind: str, q, c: float) -> bool:
    """Whether ``depth >= c`` holds exactly on the median set.

    The threshold condition is evaluated on the probe set, which is
    sufficient because both depths are piecewise constant between order
    statistics.  Holds for the halfspace depth with ``c = 1/2`` on every
    sample; can fail for the simplicial depth on samples with uneven
    repetition counts.
    """
    if depth_kind not in DEPTH_FUNCTIONS:
        raise ValueError(f"unknown depth kind {depth_kind!r}")
    if not 0.0 < c <= 1.0:
        raise ValueError("threshold c must lie in (0, 1]")
    depth = DEPTH_FUNCTIONS[depth_kind]
    lo, hi = median_set(q)
    for u in probe_points(q):
        if (depth(float(u), q) >= c) != (lo <= u <= hi):
            return False
    return True
