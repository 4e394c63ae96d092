"""File formats: dataset CSV ingestion and report serialization.

Dataset files are rectangular CSVs with a header row ``t,f1,f2,...,fn``:
the first column holds strictly increasing grid points, every further
column one function.  Grid points outside [0, 1] are affinely rescaled
onto the unit interval on ingestion.  Quadrature weights default to
uniform and can be overridden by a JSON sidecar, either a bare list or
``{"weights": [...]}``.

All floating-point output is printed with 6 significant digits.
"""

from __future__ import annotations

import csv
import json
import math

import numpy as np

from .boxplot import Boxplot
from .grids import FunctionalSample, Grid
from .ranking import DepthRanking

__all__ = [
    "DatasetError",
    "read_dataset",
    "write_dataset",
    "depth_csv",
    "boxplot_report_json",
]


class DatasetError(ValueError):
    """Malformed dataset file; the message names the offending line."""


def _fmt6(x: float) -> str:
    return f"{x:.6g}"


def read_dataset(path, weights_path=None) -> FunctionalSample:
    """Read a dataset CSV (plus optional weights sidecar) into a sample."""
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise DatasetError(f"{path}: {exc.strerror or exc}") from exc
    if not rows:
        raise DatasetError(f"{path}:1: empty file")
    header = rows[0]
    if len(header) < 2:
        raise DatasetError(f"{path}:1: expected a time column and at least one function")
    width = len(header)
    t = []
    columns = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            raise DatasetError(f"{path}:{lineno}: empty row")
        if len(row) != width:
            raise DatasetError(
                f"{path}:{lineno}: expected {width} cells, found {len(row)}"
            )
        parsed = []
        for cell in row:
            text = cell.strip()
            try:
                value = float(text)
            except ValueError:
                raise DatasetError(f"{path}:{lineno}: not a number: {text!r}") from None
            if not math.isfinite(value):
                raise DatasetError(f"{path}:{lineno}: not finite: {text!r}")
            parsed.append(value)
        if t and parsed[0] <= t[-1]:
            raise DatasetError(
                f"{path}:{lineno}: grid points must increase; "
                f"t={_fmt6(parsed[0])} follows t={_fmt6(t[-1])}"
            )
        t.append(parsed[0])
        columns.append(parsed[1:])
    if len(t) < 2:
        raise DatasetError(f"{path}: need at least two grid rows")
    t = np.asarray(t)
    if t[0] < 0.0 or t[-1] > 1.0:
        t = (t - t[0]) / (t[-1] - t[0])
    weights = None
    if weights_path is not None:
        try:
            with open(weights_path, encoding="utf-8") as handle:
                payload = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise DatasetError(f"{weights_path}: {exc}") from exc
        weights = payload.get("weights") if isinstance(payload, dict) else payload
    try:
        grid = Grid(t, weights)
        return FunctionalSample(grid, np.asarray(columns).T)
    except ValueError as exc:
        raise DatasetError(f"{path}: {exc}") from exc


def write_dataset(path, sample: FunctionalSample) -> None:
    """Write a sample back to the dataset CSV layout."""
    n = sample.n_functions
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["t"] + [f"f{i + 1}" for i in range(n)])
        for j, t in enumerate(sample.grid.points):
            writer.writerow([_fmt6(t)] + [_fmt6(v) for v in sample.values[:, j]])


def depth_csv(ranking: DepthRanking) -> str:
    """Per-function depth table: index, depth, average rank, refinement score."""
    lines = ["index,depth,rank,refinement_score"]
    ref = ranking.refinement
    for i in range(ranking.depth.values.size):
        score = "" if ref is None else _fmt6(ref[i])
        lines.append(f"{i},{_fmt6(ranking.depth.values[i])},{_fmt6(ranking.ranks[i])},{score}")
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return float(_fmt6(value))
    if isinstance(value, (np.floating,)):
        return _jsonable(float(value))
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def boxplot_report_json(boxplot: Boxplot, sample: FunctionalSample) -> str:
    """JSON report with the median, bands, outliers, and outlyingness."""
    payload = {
        "kind": boxplot.kind,
        "refinement": boxplot.refinement,
        "tau": boxplot.tau,
        "factor": boxplot.factor,
        "whisker_rule": boxplot.whisker_rule,
        "n_functions": sample.n_functions,
        "median_index": boxplot.median_index,
        "central_indices": boxplot.central_indices,
        "outlier_indices": boxplot.outlier_indices,
        "outlyingness": boxplot.outlyingness,
        "depth": boxplot.depth.values,
        "grid": sample.grid.points,
        "central": {"lower": boxplot.central.lower, "upper": boxplot.central.upper},
        "whiskers": {"lower": boxplot.whiskers.lower, "upper": boxplot.whiskers.upper},
    }
    return json.dumps(_jsonable(payload), indent=2) + "\n"
