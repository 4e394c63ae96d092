"""Command-line interface: depth tables, boxplot figures, and the study runner.

Exit codes: 0 on success, 1 on runtime errors, 2 on usage or input
validation errors.  ``FBOX_THREADS`` provides the default worker count
when ``--threads`` is not given.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import replace
from pathlib import Path

from . import experiments
from .boxplot import build_boxplot
from .io import DatasetError, boxplot_report_json, depth_csv, read_dataset
from .ranking import rank_by_depth
from .svg import load_style, render_boxplot_svg

_DEPTH_CHOICES = ("integrated", "infimal", "band", "mbd")
_BASE_CHOICES = ("halfspace", "simplicial")
_REFINE_CHOICES = ("none", "erl", "area")


def _default_threads() -> int:
    env = os.environ.get("FBOX_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _resolve_kind(parser, depth: str, base: str | None, refine: str):
    if depth == "band":
        if base is not None:
            parser.error("--base cannot be combined with --depth band")
        if refine != "none":
            parser.error("--refine cannot be combined with --depth band")
        return "band", None
    if depth == "mbd":
        if base == "halfspace":
            parser.error("mbd is simplicial-based; --base halfspace conflicts")
        kind = "integrated-simplicial"
    else:
        kind = f"{depth}-{base or 'halfspace'}"
    return kind, None if refine == "none" else refine


def _cmd_depth(parser, args) -> int:
    sample = read_dataset(args.input, args.weights)
    kind, refinement = _resolve_kind(parser, args.depth, args.base, args.refine)
    from .boxplot import _refinement_scores
    from .fdepth import compute_depths

    depth = compute_depths(sample, kind)
    scores = None
    if refinement is not None:
        if sample.n_functions < 2:
            parser.error("refinements need at least two functions")
        scores = _refinement_scores(sample, refinement)
    ranking = rank_by_depth(depth, scores)
    text = depth_csv(ranking)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_boxplot(parser, args) -> int:
    if not args.out_svg and not args.out_json:
        parser.error("nothing to write: pass --out-svg and/or --out-json")
    sample = read_dataset(args.input, args.weights)
    kind, refinement = _resolve_kind(parser, args.depth, args.base, args.refine)
    bp = build_boxplot(
        sample,
        kind,
        refinement,
        tau=args.tau,
        factor=args.factor,
        whisker_rule=args.whiskers,
    )
    if args.out_json:
        Path(args.out_json).write_text(boxplot_report_json(bp, sample), encoding="utf-8")
    if args.out_svg:
        style = load_style(args.style) if args.style else None
        svg = render_boxplot_svg(sample, bp, style, whisker_render=args.whisker_render)
        Path(args.out_svg).write_text(svg, encoding="utf-8")
    return 0


def _cmd_simulate(parser, args) -> int:
    config = experiments.desk_config() if args.profile == "desk" else experiments.full_config()
    overrides = {}
    if args.n:
        overrides["ns"] = tuple(args.n)
    if args.logh:
        overrides["log_hs"] = tuple(args.logh)
    if args.runs is not None:
        overrides["runs"] = args.runs
    if args.n_test is not None:
        overrides["n_test"] = args.n_test
    if args.grid_size is not None:
        overrides["grid_size"] = args.grid_size
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.tau is not None:
        overrides["tau"] = args.tau
    if args.factor is not None:
        overrides["factor"] = args.factor
    if args.whiskers is not None:
        overrides["whisker_rule"] = args.whiskers
    if args.variants:
        overrides["variants"] = tuple(args.variants.split(","))
    overrides["threads"] = args.threads
    try:
        config = replace(config, **overrides)
    except ValueError as exc:
        parser.error(str(exc))

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    started = time.monotonic()
    report = experiments.run_table_study(config)
    elapsed = time.monotonic() - started
    (out_dir / "report.csv").write_text(experiments.report_csv(report), encoding="utf-8")
    (out_dir / "report.json").write_text(experiments.report_json(report), encoding="utf-8")
    (out_dir / "tables.txt").write_text(experiments.format_tables(report), encoding="utf-8")
    print(f"wrote report.csv, report.json, tables.txt to {out_dir} ({elapsed:.1f}s)")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fbox",
        description="Functional data depths and depth-based functional boxplots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_depth = sub.add_parser("depth", help="rank the functions of a dataset by depth")
    p_depth.add_argument("input", help="dataset CSV (header t,f1,...,fn)")
    p_depth.add_argument("--depth", choices=_DEPTH_CHOICES, default="infimal")
    p_depth.add_argument("--base", choices=_BASE_CHOICES, default=None)
    p_depth.add_argument("--refine", choices=_REFINE_CHOICES, default="none")
    p_depth.add_argument("--weights", help="JSON sidecar with grid weights")
    p_depth.add_argument("--out", help="output CSV path (default: stdout)")
    p_depth.set_defaults(func=_cmd_depth)

    p_box = sub.add_parser("boxplot", help="build a functional boxplot")
    p_box.add_argument("input")
    p_box.add_argument("--depth", choices=_DEPTH_CHOICES, default="infimal")
    p_box.add_argument("--base", choices=_BASE_CHOICES, default=None)
    p_box.add_argument("--refine", choices=_REFINE_CHOICES, default="erl")
    p_box.add_argument("--weights")
    p_box.add_argument("--tau", type=float, default=0.5)
    p_box.add_argument("--factor", type=float, default=4.0)
    p_box.add_argument("--whiskers", choices=("median", "fence"), default="median")
    p_box.add_argument(
        "--whisker-render",
        choices=("inflated", "envelope"),
        default="inflated",
        help="draw the inflated band or the envelope of non-outlying curves",
    )
    p_box.add_argument("--style", help="key=value style file")
    p_box.add_argument("--out-svg")
    p_box.add_argument("--out-json")
    p_box.set_defaults(func=_cmd_boxplot)

    p_sim = sub.add_parser("simulate", help="run the Monte-Carlo boxplot study")
    p_sim.add_argument("--profile", choices=("desk", "full"), default="desk")
    p_sim.add_argument("--n", action="append", type=int, help="sample size (repeatable)")
    p_sim.add_argument("--logh", action="append", type=float, help="log bandwidth (repeatable)")
    p_sim.add_argument("--runs", type=int)
    p_sim.add_argument("--n-test", type=int)
    p_sim.add_argument("--grid-size", type=int)
    p_sim.add_argument("--seed", type=int)
    p_sim.add_argument("--tau", type=float)
    p_sim.add_argument("--factor", type=float)
    p_sim.add_argument("--whiskers", choices=("median", "fence"), default=None)
    p_sim.add_argument("--variants", help="comma-separated subset of integrated,infimal,erl,area")
    p_sim.add_argument("--threads", type=int, default=_default_threads())
    p_sim.add_argument("--out", required=True, help="output directory")
    p_sim.set_defaults(func=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DatasetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
