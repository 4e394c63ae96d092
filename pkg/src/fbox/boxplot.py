"""Depth-based functional boxplots and the band-convexity diagnostic.

A boxplot consists of the median function (the deepest sample row), the
central region (band of the ``ceil(tau * n)`` deepest rows, ``tau = 1/2``
by default), and the whiskers band obtained by inflating the central
region by a constant factor around the median.  A function is flagged as
an outlier when its outlyingness index exceeds the inflation factor,
i.e. when it leaves the whiskers band somewhere.

Tie policy at the selection cut: without a refinement every row tied
with the cut depth enters the central region; with an ``erl`` or
``area`` refinement exactly ``ceil(tau * n)`` rows enter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fdepth import DepthVector, compute_depths
from .grids import Band, FunctionalSample, band_of, fence, grids_equal, inflate
from .ranking import DepthRanking, area_scores, erl_scores, outlyingness_indices, rank_by_depth

__all__ = [
    "Boxplot",
    "BandConvexityReport",
    "build_boxplot",
    "central_coverage",
    "whisker_coverage",
    "check_band_convexity",
]

REFINEMENTS = (None, "erl", "area")
WHISKER_RULES = ("median", "fence")


@dataclass(frozen=True, eq=False)
class Boxplot:
    """Assembled functional boxplot."""

    kind: str
    refinement: str | None
    tau: float
    factor: float
    whisker_rule: str
    median_index: int
    central_indices: np.ndarray
    central: Band
    whiskers: Band
    outlier_indices: np.ndarray
    outlyingness: np.ndarray
    depth: DepthVector
    ranking: DepthRanking


@dataclass(frozen=True, eq=False)
class BandConvexityReport:
    """Rows strictly shallower than the central cut yet inside the central band."""

    violations: np.ndarray
    cut_depth: float
    central: Band

    @property
    def ok(self) -> bool:
        return self.violations.size == 0


def _refinement_scores(sample: FunctionalSample, refinement: str | None) -> np.ndarray | None:
    if refinement in (None, "none"):
        return None
    if refinement == "erl":
        return erl_scores(sample)
    if refinement == "area":
        return area_scores(sample)
    raise ValueError(f"unknown refinement {refinement!r}; expected one of {REFINEMENTS}")


def _central_count(tau: float, n: int) -> int:
    if not 0.0 < tau < 1.0:
        raise ValueError("tau must lie in (0, 1)")
    # Guard against binary-float fuzz in tau * n before taking the ceiling.
    return int(math.ceil(tau * n - 1e-9))


def _select_central(sample, kind, refinement, tau):
    depth = compute_depths(sample, kind)
    scores = _refinement_scores(sample, refinement)
    ranking = rank_by_depth(depth, scores)
    k = _central_count(tau, sample.n_functions)
    cut = float(depth.values[ranking.order[k - 1]])
    if scores is None:
        selected = np.flatnonzero(depth.values >= cut)
    else:
        selected = np.sort(ranking.order[:k])
    return depth, ranking, selected, cut


def build_boxplot(
    sample: FunctionalSample,
    kind: str = "infimal-halfspace",
    refinement: str | None = None,
    tau: float = 0.5,
    factor: float = 4.0,
    whisker_rule: str = "median",
) -> Boxplot:
    """Build a functional boxplot for one depth kind and refinement.

    Parameters
    ----------
    sample : FunctionalSample
        At least four functions.
    kind : str
        Depth kind accepted by :func:`fbox.fdepth.compute_depths`.
    refinement : {None, "erl", "area"}
        Optional tie-breaking refinement of the depth ranking.
    tau : float
        Central-region level in (0, 1); the default 1/2 takes half of the
        sample.
    factor : float
        Whisker inflation factor, at least 1 (default 4).
    whisker_rule : {"median", "fence"}
        How the whiskers band is derived from the central region:
        inflation around the median (default) or widening both envelopes
        by ``(factor - 1)/2`` times the band width.
    """
    if sample.n_functions < 4:
        raise ValueError("a boxplot needs at least four functions")
    if factor < 1.0:
        raise ValueError("inflation factor must be at least 1")
    if whisker_rule not in WHISKER_RULES:
        raise ValueError(f"unknown whisker rule {whisker_rule!r}")
    depth, ranking, selected, _ = _select_central(sample, kind, refinement, tau)
    median_index = int(ranking.order[0])
    median_row = sample.row(median_index)
    central = band_of(sample, selected)
    outly = outlyingness_indices(central, median_row, sample.values)
    if whisker_rule == "median":
        whiskers = inflate(central, median_row, factor)
        outliers = np.flatnonzero(outly > factor)
    else:
        whiskers = fence(central, factor)
        outliers = np.flatnonzero(~whiskers.contains_rows(sample.values))
    return Boxplot(
        kind=depth.kind,
        refinement=None if refinement in (None, "none") else refinement,
        tau=tau,
        factor=factor,
        whisker_rule=whisker_rule,
        median_index=median_index,
        central_indices=selected,
        central=central,
        whiskers=whiskers,
        outlier_indices=outliers,
        outlyingness=outly,
        depth=depth,
        ranking=ranking,
    )


def _coverage(band: Band, sample: FunctionalSample) -> float:
    if not grids_equal(band.grid, sample.grid):
        raise ValueError("grid mismatch between boxplot and sample")
    contained = band.contains_rows(sample.values)
    return 100.0 * float(np.count_nonzero(contained)) / sample.n_functions


def central_coverage(boxplot: Boxplot, sample: FunctionalSample) -> float:
    """Percentage of rows fully contained in the central region."""
    return _coverage(boxplot.central, sample)


def whisker_coverage(boxplot: Boxplot, sample: FunctionalSample) -> float:
    """Percentage of rows fully contained in the whiskers band."""
    return _coverage(boxplot.whiskers, sample)


def check_band_convexity(
    sample: FunctionalSample,
    kind: str = "infimal-halfspace",
    refinement: str | None = None,
    tau: float = 0.5,
) -> BandConvexityReport:
    """Search for rows that undercut the central cut depth yet stay inside.

    Reports every sample row whose depth is strictly below the minimum
    depth among the selected central rows while being fully contained in
    the central band.  An empty report means the depth behaved
    band-convexly on this sample; infimal depths always produce empty
    reports, integrated depths need not.
    """
    depth, _, selected, _ = _select_central(sample, kind, refinement, tau)
    central = band_of(sample, selected)
    cut = float(depth.values[selected].min())
    inside = central.contains_rows(sample.values)
    violations = np.flatnonzero((depth.values < cut) & inside)
    return BandConvexityReport(violations=violations, cut_depth=cut, central=central)
