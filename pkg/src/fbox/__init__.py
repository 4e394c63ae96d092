"""Functional data depths, depth-based boxplots, and a Monte-Carlo study harness."""

from .boxplot import (
    BandConvexityReport,
    Boxplot,
    build_boxplot,
    central_coverage,
    check_band_convexity,
    whisker_coverage,
)
from .depth1d import (
    UnivariateSample,
    check_md,
    halfspace_depth,
    median_set,
    probe_points,
    simplicial_depth,
)
from .fdepth import (
    DEPTH_KINDS,
    DepthVector,
    PointwiseDepthMatrix,
    band_depth,
    compute_depths,
    infimal_depth,
    integrated_depth,
    mbd,
    pointwise_depths,
)
from .grids import (
    Band,
    FunctionalSample,
    Grid,
    band_of,
    fence,
    grids_equal,
    inflate,
    uniform_grid,
)
from .ranking import (
    DepthRanking,
    area_scores,
    erl_scores,
    outlyingness_index,
    outlyingness_indices,
    rank_by_depth,
    two_sided_ranks,
)

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BandConvexityReport",
    "Boxplot",
    "DEPTH_KINDS",
    "DepthRanking",
    "DepthVector",
    "FunctionalSample",
    "Grid",
    "PointwiseDepthMatrix",
    "UnivariateSample",
    "area_scores",
    "band_depth",
    "band_of",
    "build_boxplot",
    "central_coverage",
    "check_band_convexity",
    "check_md",
    "compute_depths",
    "erl_scores",
    "fence",
    "grids_equal",
    "halfspace_depth",
    "infimal_depth",
    "inflate",
    "integrated_depth",
    "mbd",
    "median_set",
    "outlyingness_index",
    "outlyingness_indices",
    "pointwise_depths",
    "probe_points",
    "rank_by_depth",
    "simplicial_depth",
    "two_sided_ranks",
    "uniform_grid",
    "whisker_coverage",
]
