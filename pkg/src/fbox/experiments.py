"""Monte-Carlo comparison of boxplot variants and small search utilities.

``run_table_study`` repeats, over independent runs, the loop: draw a
Gaussian-process training sample, build one boxplot per variant, and
record four statistics per boxplot (training coverage of the central
region, training coverage of the whiskers band, mean central width, and
central coverage of an independently drawn test sample).  Per-cell means
and standard deviations are collected into an :class:`ExperimentReport`.

Runs are independent tasks keyed by deterministic seed streams, so the
study parallelizes over a thread pool without changing any number; the
aggregation always happens in run order.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import gpsim
from .boxplot import build_boxplot, central_coverage, whisker_coverage
from .depth1d import UnivariateSample, median_set, probe_points, simplicial_depth
from .grids import FunctionalSample, uniform_grid

__all__ = [
    "VARIANTS",
    "STATISTICS",
    "ExperimentConfig",
    "CellStats",
    "ExperimentReport",
    "desk_config",
    "full_config",
    "run_table_study",
    "report_csv",
    "report_json",
    "format_tables",
    "MotivatingExampleConfig",
    "generate_motivating_example",
    "find_simplicial_md_witness",
]

VARIANTS = ("integrated", "infimal", "erl", "area")

STATISTICS = ("central_coverage", "whisker_coverage", "central_width", "test_coverage")

_STATISTIC_TITLES = {
    "central_coverage": "Training curves inside the central region (%)",
    "whisker_coverage": "Training curves inside the whiskers band (%)",
    "central_width": "Mean width of the central region",
    "test_coverage": "Test curves inside the central region (%)",
}


def variant_spec(name: str, base_depth: str = "halfspace") -> tuple[str, str | None]:
    """Map a study variant name to a (depth kind, refinement) pair."""
    table = {
        "integrated": (f"integrated-{base_depth}", None),
        "infimal": (f"infimal-{base_depth}", None),
        "erl": (f"infimal-{base_depth}", "erl"),
        "area": (f"infimal-{base_depth}", "area"),
    }
    if name not in table:
        raise ValueError(f"unknown variant {name!r}; expected one of {VARIANTS}")
    return table[name]


@dataclass(frozen=True)
class ExperimentConfig:
    variants: tuple[str, ...] = VARIANTS
    ns: tuple[int, ...] = (50, 500)
    log_hs: tuple[float, ...] = (-4.0, -2.0, 0.0, 2.0)
    runs: int = 50
    n_test: int = 2000
    grid_size: int = 101
    base_seed: int = 20240
    tau: float = 0.5
    factor: float = 4.0
    base_depth: str = "halfspace"
    whisker_rule: str = "fence"
    threads: int = 1

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("need at least one run")
        if any(n < 4 for n in self.ns):
            raise ValueError("sample sizes must be at least 4")
        if self.n_test < 0:
            raise ValueError("n_test must be nonnegative")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.whisker_rule not in ("median", "fence"):
            raise ValueError(f"unknown whisker rule {self.whisker_rule!r}")
        for name in self.variants:
            variant_spec(name, self.base_depth)


def desk_config(**overrides) -> ExperimentConfig:
    """Desk-scale profile: n in {50, 500}, 50 runs, 2000 test curves."""
    return replace(ExperimentConfig(), **overrides)


def full_config(**overrides) -> ExperimentConfig:
    """Full profile: n in {50, 500, 5000}, 100 runs, 10000 test curves."""
    base = ExperimentConfig(ns=(50, 500, 5000), runs=100, n_test=10000)
    return replace(base, **overrides)


@dataclass(frozen=True, eq=False)
class CellStats:
    means: dict
    sds: dict
    per_run: dict = field(repr=False)
    runs: int = 0


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    config: ExperimentConfig
    cells: dict


def _cell_run(config: ExperimentConfig, task) -> dict:
    cell_index, n, log_h, run_index = task
    grid = uniform_grid(config.grid_size)
    model = gpsim.GPModel(h=math.exp(log_h), grid=grid)
    train = gpsim.sample(model, n, gpsim.stream_key(config.base_seed, cell_index, run_index, 0))
    test = None
    if config.n_test > 0:
        test = gpsim.sample(
            model, config.n_test, gpsim.stream_key(config.base_seed, cell_index, run_index, 1)
        )
    out = {}
    for variant in config.variants:
        kind, refinement = variant_spec(variant, config.base_depth)
        bp = build_boxplot(
            train,
            kind,
            refinement,
            tau=config.tau,
            factor=config.factor,
            whisker_rule=config.whisker_rule,
        )
        stats = {
            "central_coverage": central_coverage(bp, train),
            "whisker_coverage": whisker_coverage(bp, train),
            "central_width": bp.central.mean_width(),
        }
        if test is not None:
            stats["test_coverage"] = central_coverage(bp, test)
        out[variant] = stats
    return out


def run_table_study(config: ExperimentConfig) -> ExperimentReport:
    """Run the Monte-Carlo study described by ``config``.

    Deterministic for a fixed config: per-run seeds are derived from the
    base seed and the (cell, run) indices, and results are reduced in run
    order regardless of the thread count.
    """
    axes = list(itertools.product(config.ns, config.log_hs))
    tasks = [
        (cell_index, n, log_h, run_index)
        for cell_index, (n, log_h) in enumerate(axes)
        for run_index in range(config.runs)
    ]
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            rows = list(pool.map(lambda t: _cell_run(config, t), tasks))
    else:
        rows = [_cell_run(config, t) for t in tasks]

    stat_names = [s for s in STATISTICS if s != "test_coverage" or config.n_test > 0]
    cells = {}
    for variant in config.variants:
        for n, log_h in axes:
            cells[(variant, n, log_h)] = {s: np.empty(config.runs) for s in stat_names}
    for task, row in zip(tasks, rows):
        _, n, log_h, run_index = task
        for variant, stats in row.items():
            store = cells[(variant, n, log_h)]
            for name in stat_names:
                store[name][run_index] = stats[name]

    summarized = {}
    for key, per_run in cells.items():
        means = {s: float(v.mean()) for s, v in per_run.items()}
        sds = {
            s: (float(v.std(ddof=1)) if config.runs > 1 else 0.0) for s, v in per_run.items()
        }
        summarized[key] = CellStats(means=means, sds=sds, per_run=per_run, runs=config.runs)
    return ExperimentReport(config=config, cells=summarized)


def _fmt6(x: float) -> str:
    return f"{x:.6g}"


def report_csv(report: ExperimentReport) -> str:
    """Report as CSV text, one row per cell and statistic."""
    lines = ["variant,n,log_h,statistic,mean,sd,runs"]
    for (variant, n, log_h), cell in report.cells.items():
        for stat in cell.means:
            lines.append(
                f"{variant},{n},{_fmt6(log_h)},{stat},"
                f"{_fmt6(cell.means[stat])},{_fmt6(cell.sds[stat])},{cell.runs}"
            )
    return "\n".join(lines) + "\n"


def report_json(report: ExperimentReport) -> str:
    """Report as JSON text mirroring the CSV content plus the config."""
    cfg = report.config
    payload = {
        "config": {
            "variants": list(cfg.variants),
            "ns": list(cfg.ns),
            "log_hs": list(cfg.log_hs),
            "runs": cfg.runs,
            "n_test": cfg.n_test,
            "grid_size": cfg.grid_size,
            "base_seed": cfg.base_seed,
            "tau": cfg.tau,
            "factor": cfg.factor,
            "base_depth": cfg.base_depth,
            "whisker_rule": cfg.whisker_rule,
        },
        "cells": [
            {
                "variant": variant,
                "n": n,
                "log_h": float(_fmt6(log_h)),
                "stats": {
                    stat: {
                        "mean": float(_fmt6(cell.means[stat])),
                        "sd": float(_fmt6(cell.sds[stat])),
                    }
                    for stat in cell.means
                },
            }
            for (variant, n, log_h), cell in report.cells.items()
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def format_tables(report: ExperimentReport) -> str:
    """Human-readable summary tables, mean with SD in brackets."""
    cfg = report.config
    stat_names = [s for s in STATISTICS if any(s in c.means for c in report.cells.values())]
    blocks = []
    for stat in stat_names:
        header = ["variant", "n"] + [f"log h = {_fmt6(lh)}" for lh in cfg.log_hs]
        rows = [_STATISTIC_TITLES[stat], ""]
        widths = [10, 6] + [18] * len(cfg.log_hs)
        rows.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for variant in cfg.variants:
            for n in cfg.ns:
                cellstrs = []
                for log_h in cfg.log_hs:
                    cell = report.cells[(variant, n, log_h)]
                    cellstrs.append(f"{cell.means[stat]:.3f} ({cell.sds[stat]:.3f})")
                line = [variant.ljust(10), str(n).ljust(6)] + [
                    s.ljust(18) for s in cellstrs
                ]
                rows.append("  ".join(line))
        blocks.append("\n".join(rows))
    return ("\n\n".join(blocks)).rstrip() + "\n"


@dataclass(frozen=True)
class MotivatingExampleConfig:
    """Generator constants for the local/global outlier showcase dataset.

    Local outliers ride a damped copy of a base path and add a narrow
    smooth bump that carries the path to a fixed peak level at its
    center; bump signs alternate and centers are spread over staggered
    subintervals so no two bumps mask each other.  The damping keeps
    their integrated depth high (mid-pack) despite the excursion, which
    is what lets them bloat the integrated central region.  Global
    outliers shrink a base path strongly toward zero and shift it by a
    constant of random sign, deviating mildly over the whole domain.

    The defaults are tuned so that, jointly: the global outliers attain
    the lowest integrated depths while staying inside the half-sample
    central region of the integrated boxplot, which flags nothing; and
    the local outliers attain the lowest erl scores and are exactly the
    functions flagged by the infimal boxplot.
    """

    n_base: int = 100
    n_local: int = 10
    n_global: int = 10
    log_h: float = -6.0
    grid_size: int = 101
    local_damp: float = 0.4
    local_peak: float = 9.0
    local_width: float = 0.005
    local_center_low: float = 0.1
    local_center_high: float = 0.9
    global_shrink: float = 0.05
    global_shift: float = 1.25


DEFAULT_EXAMPLE_SEED = 19

BASE_LABEL, LOCAL_LABEL, GLOBAL_LABEL = "base", "local", "global"


def generate_motivating_example(
    seed: int = DEFAULT_EXAMPLE_SEED,
    config: MotivatingExampleConfig | None = None,
) -> tuple[FunctionalSample, list[str]]:
    """Dataset of base paths plus labeled local and global outliers.

    Returns the sample and a parallel list of labels, base rows first,
    then local outliers, then global outliers.
    """
    cfg = config or MotivatingExampleConfig()
    grid = uniform_grid(cfg.grid_size)
    model = gpsim.GPModel(h=math.exp(cfg.log_h), grid=grid)
    total = cfg.n_base + cfg.n_local + cfg.n_global
    base = gpsim.sample(model, total, gpsim.stream_key(seed, 0))
    values = np.array(base.values)
    u = gpsim._open_uniforms(gpsim.stream_key(seed, 1), cfg.n_local + cfg.n_global)
    t = grid.points
    span = cfg.local_center_high - cfg.local_center_low
    for j in range(cfg.n_local):
        i = cfg.n_base + j
        # Staggered subintervals with alternating signs keep the bumps
        # from overlapping on the same side and masking each other.
        center = cfg.local_center_low + span * (j + 0.25 + 0.5 * u[j]) / cfg.n_local
        sign = 1.0 if j % 2 == 0 else -1.0
        values[i] = cfg.local_damp * values[i]
        at_center = values[i, int(np.argmin(np.abs(t - center)))]
        bump = (sign * cfg.local_peak - at_center) * np.exp(-((t - center) ** 2) / cfg.local_width)
        values[i] += bump
    for j in range(cfg.n_global):
        i = cfg.n_base + cfg.n_local + j
        sign = -1.0 if u[cfg.n_local + j] < 0.5 else 1.0
        values[i] = cfg.global_shrink * values[i] + sign * cfg.global_shift
    labels = (
        [BASE_LABEL] * cfg.n_base + [LOCAL_LABEL] * cfg.n_local + [GLOBAL_LABEL] * cfg.n_global
    )
    return FunctionalSample(grid, values), labels


def _md_satisfiable(q: UnivariateSample) -> bool:
    """Whether some threshold makes simplicial depth >= c hold exactly on the medians."""
    lo, hi = median_set(q)
    probes = probe_points(q)
    depths = np.array([simplicial_depth(float(u), q) for u in probes])
    in_median = (probes >= lo) & (probes <= hi)
    return float(depths[in_median].min()) > float(depths[~in_median].max())


def find_simplicial_md_witness(max_support: int = 3, weight_step: float = 0.125):
    """Brute-force search for a distribution without a valid median threshold.

    Enumerates discrete distributions on the lattice ``0..max_support-1``
    with weights in multiples of ``weight_step`` (realized as samples
    with repeated values) and returns the first one, in lexicographic
    order of the weight vector, where no constant ``c`` makes the
    simplicial depth exceed ``c`` exactly on the median set.  Returns
    ``None`` when the search space contains no such distribution.
    """
    if not 1 <= max_support <= 5:
        raise ValueError("max_support must lie in [1, 5]")
    denom = round(1.0 / weight_step)
    if denom < 1 or abs(denom * weight_step - 1.0) > 1e-9:
        raise ValueError("weight_step must divide 1")
    lattice = np.arange(max_support, dtype=float)
    for counts in itertools.product(range(denom + 1), repeat=max_support):
        if sum(counts) != denom:
            continue
        q = UnivariateSample(np.repeat(lattice, counts))
        if not _md_satisfiable(q):
            return q
    return None
