"""Deterministic SVG rendering of functional boxplots.

The figure shows the sample curves in gray, the central region as a
filled polygon, the median as a thick polyline, the whisker boundaries,
and the outliers in a contrasting color, plus axis ticks and a legend.
Output bytes depend only on the inputs: no timestamps, no generated ids.

Styling is a flat key=value mapping; see :data:`DEFAULT_STYLE` for the
recognized keys.  Style files use one ``key=value`` pair per line with
``#`` comments.
"""

from __future__ import annotations

import numpy as np

from .boxplot import Boxplot
from .grids import FunctionalSample, band_of

__all__ = ["DEFAULT_STYLE", "load_style", "render_boxplot_svg"]

DEFAULT_STYLE = {
    "background": "#ffffff",
    "sample_color": "#b3b3b3",
    "sample_width": "1",
    "central_fill": "#f5f5dc",
    "median_color": "#ff8c00",
    "median_width": "2.5",
    "whisker_color": "#ff8c00",
    "whisker_width": "1.8",
    "outlier_color": "#1f78b4",
    "outlier_width": "1.6",
    "axis_color": "#333333",
    "font_family": "sans-serif",
    "font_size": "12",
}


def load_style(path) -> dict:
    """Parse a key=value style file, ignoring blank lines and # comments."""
    style = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            key = key.strip()
            if key not in DEFAULT_STYLE:
                raise ValueError(f"{path}:{lineno}: unknown style key {key!r}")
            style[key] = value.strip()
    return style


def _num(x: float) -> str:
    return f"{x:.6g}"


def _polyline(xs, ys, color, width, opacity=None) -> str:
    pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in zip(xs, ys))
    extra = f' stroke-opacity="{opacity}"' if opacity else ""
    return (
        f'<polyline fill="none" stroke="{color}" stroke-width="{width}"{extra} '
        f'points="{pts}"/>'
    )


def render_boxplot_svg(
    sample: FunctionalSample,
    boxplot: Boxplot,
    style: dict | None = None,
    size: tuple[int, int] = (900, 540),
    whisker_render: str = "inflated",
) -> str:
    """Render the boxplot to an SVG 1.1 document string.

    ``whisker_render`` selects what the whisker polylines trace: the
    inflated band itself (default) or the envelope of the non-outlying
    sample curves (``"envelope"``).
    """
    if whisker_render not in ("inflated", "envelope"):
        raise ValueError(f"unknown whisker rendering {whisker_render!r}")
    st = dict(DEFAULT_STYLE)
    st.update(style or {})
    width, height = size
    left, right, top, bottom = 64.0, 18.0, 18.0, 46.0
    t = sample.grid.points

    if whisker_render == "inflated":
        wlo, wup = boxplot.whiskers.lower, boxplot.whiskers.upper
    else:
        keep = np.setdiff1d(np.arange(sample.n_functions), boxplot.outlier_indices)
        envelope = band_of(sample, keep if keep.size else [boxplot.median_index])
        wlo, wup = envelope.lower, envelope.upper

    ymin = min(float(sample.values.min()), float(wlo.min()))
    ymax = max(float(sample.values.max()), float(wup.max()))
    pad = 0.05 * ((ymax - ymin) or 1.0)
    ylo, yhi = ymin - pad, ymax + pad

    def sx(tv):
        return left + (tv - t[0]) / (t[-1] - t[0]) * (width - left - right)

    def sy(v):
        return top + (yhi - v) / (yhi - ylo) * (height - top - bottom)

    xs = [sx(tv) for tv in t]
    outliers = set(int(i) for i in boxplot.outlier_indices)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="{st["background"]}"/>',
    ]

    for i in range(sample.n_functions):
        if i in outliers:
            continue
        parts.append(
            _polyline(xs, [sy(v) for v in sample.values[i]], st["sample_color"], st["sample_width"])
        )

    central_pts = [(x, sy(v)) for x, v in zip(xs, boxplot.central.upper)]
    central_pts += [(x, sy(v)) for x, v in zip(reversed(xs), boxplot.central.lower[::-1])]
    polygon = " ".join(f"{_num(x)},{_num(y)}" for x, y in central_pts)
    parts.append(f'<polygon fill="{st["central_fill"]}" stroke="none" points="{polygon}"/>')

    parts.append(_polyline(xs, [sy(v) for v in wlo], st["whisker_color"], st["whisker_width"]))
    parts.append(_polyline(xs, [sy(v) for v in wup], st["whisker_color"], st["whisker_width"]))
    parts.append(
        _polyline(
            xs,
            [sy(v) for v in sample.values[boxplot.median_index]],
            st["median_color"],
            st["median_width"],
        )
    )
    for i in sorted(outliers):
        parts.append(
            _polyline(xs, [sy(v) for v in sample.values[i]], st["outlier_color"], st["outlier_width"])
        )

    axis = st["axis_color"]
    font = f'font-family="{st["font_family"]}" font-size="{st["font_size"]}" fill="{axis}"'
    x0, x1 = sx(t[0]), sx(t[-1])
    y0, y1 = sy(ylo), sy(yhi)
    parts.append(
        f'<rect x="{_num(x0)}" y="{_num(y1)}" width="{_num(x1 - x0)}" '
        f'height="{_num(y0 - y1)}" fill="none" stroke="{axis}" stroke-width="1"/>'
    )
    for tv in np.linspace(t[0], t[-1], 5):
        x = sx(tv)
        parts.append(
            f'<line x1="{_num(x)}" y1="{_num(y0)}" x2="{_num(x)}" y2="{_num(y0 + 5)}" '
            f'stroke="{axis}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_num(x)}" y="{_num(y0 + 20)}" text-anchor="middle" {font}>{_num(tv)}</text>'
        )
    for v in np.linspace(ylo, yhi, 5):
        y = sy(v)
        parts.append(
            f'<line x1="{_num(x0 - 5)}" y1="{_num(y)}" x2="{_num(x0)}" y2="{_num(y)}" '
            f'stroke="{axis}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_num(x0 - 8)}" y="{_num(y + 4)}" text-anchor="end" {font}>{_num(v)}</text>'
        )

    legend = [
        ("sample", st["sample_color"]),
        ("central region", st["central_fill"]),
        ("median", st["median_color"]),
        ("whiskers", st["whisker_color"]),
        ("outlier", st["outlier_color"]),
    ]
    lx = width - right - 150.0
    ly = top + 10.0
    for label, color in legend:
        parts.append(
            f'<rect x="{_num(lx)}" y="{_num(ly - 8)}" width="18" height="8" fill="{color}"/>'
        )
        parts.append(f'<text x="{_num(lx + 24)}" y="{_num(ly)}" {font}>{label}</text>')
        ly += 18.0

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
