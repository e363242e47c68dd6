"""Command-line front end.

Subcommands::

    run      single probability-vs-time curve        -> t,success_probability,overlap_abs
    sweep    peak stats across self-loop weights     -> l,t_peak,p_peak
    scaling  peak stats across square grid sizes     -> N,t_peak,p_peak  (+ fit JSON)
    verify   engine self-checks against dense oracle

Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
3 no peak within the simulation horizon.  Output files are deterministic:
identical flags produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .engine import WalkParams
from .experiments import (
    NoPeakError,
    default_horizon,
    default_marked,
    find_first_peak,
    fit_runtime,
    run_curve,
    scaling_study,
    sweep_loop_weight,
)
from .grids import GridSpec, Topology
from .verify import run_all_checks

SCHEMA_VERSION = 1


def _fmt(x: float) -> str:
    """Floats carry 12 significant digits in every output format."""
    return format(float(x), ".12g")


def _jnum(x: float) -> float:
    return float(_fmt(x))


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _write_json(path: str, payload: dict) -> None:
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _parse_marked(text: str) -> tuple[int, int]:
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"--marked expects 'x,y' with integers, got {text!r}")
    return x, y


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"--sizes expects comma-separated integers, got {text!r}")


def _resolve_loop_weight(token: str, spec: GridSpec) -> float:
    if token == "auto":
        return spec.degree / spec.vertex_count
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"--loop-weight expects a number or 'auto', got {token!r}")


def _resolve_steps(token: str, spec: GridSpec) -> int:
    if token == "auto":
        return default_horizon(spec)
    try:
        steps = int(token)
    except ValueError:
        raise ValueError(f"--steps expects an integer or 'auto', got {token!r}")
    if steps < 1:
        raise ValueError(f"--steps must be >= 1, got {steps}")
    return steps


def _grid_spec(args: argparse.Namespace) -> GridSpec:
    return GridSpec(Topology(args.topology), args.width, args.height)


def _marked(args: argparse.Namespace, spec: GridSpec) -> tuple[int, int]:
    if args.marked is None:
        return default_marked(spec)
    return _parse_marked(args.marked)


def cmd_run(args: argparse.Namespace) -> int:
    spec = _grid_spec(args)
    params = WalkParams(spec, _resolve_loop_weight(args.loop_weight, spec), {_marked(args, spec)})
    steps = _resolve_steps(args.steps, spec)
    series = run_curve(params, steps)

    if args.format == "csv":
        lines = ["t,success_probability,overlap_abs"]
        lines += [
            f"{t},{_fmt(p)},{_fmt(ov)}"
            for t, p, ov in zip(series.steps, series.probability, series.overlap_abs)
        ]
        _write_text(args.out, "\n".join(lines) + "\n")
    else:
        _write_json(
            args.out,
            {
                "schema_version": SCHEMA_VERSION,
                "records": [
                    {"t": int(t), "success_probability": _jnum(p), "overlap_abs": _jnum(ov)}
                    for t, p, ov in zip(series.steps, series.probability, series.overlap_abs)
                ],
            },
        )

    try:
        peak = find_first_peak(series)
    except NoPeakError as exc:
        print(f"{exc} (steps={steps}); curve written to {args.out}", file=sys.stderr)
        return 3
    print(f"t_peak={peak.t_peak} p_peak={_fmt(peak.p_peak)}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = _grid_spec(args)
    marked = _marked(args, spec)
    l_min = args.l_min if args.l_min is not None else spec.degree / (10 * spec.vertex_count)
    l_max = args.l_max if args.l_max is not None else 10 * spec.degree / spec.vertex_count
    if l_min <= 0 or l_max < l_min:
        raise ValueError(f"need 0 < --l-min <= --l-max, got {l_min} and {l_max}")
    if args.l_points < 1:
        raise ValueError(f"--l-points must be >= 1, got {args.l_points}")
    weights = np.geomspace(l_min, l_max, args.l_points)
    records = sweep_loop_weight(spec, {marked}, weights)

    if args.format == "csv":
        lines = ["l,t_peak,p_peak"]
        lines += [f"{_fmt(r.loop_weight)},{r.t_peak},{_fmt(r.p_peak)}" for r in records]
        _write_text(args.out, "\n".join(lines) + "\n")
    else:
        _write_json(
            args.out,
            {
                "schema_version": SCHEMA_VERSION,
                "records": [
                    {"l": _jnum(r.loop_weight), "t_peak": r.t_peak, "p_peak": _jnum(r.p_peak)}
                    for r in records
                ],
            },
        )

    best = max(records, key=lambda r: r.p_peak)
    print(f"argmax l={_fmt(best.loop_weight)} t_peak={best.t_peak} p_peak={_fmt(best.p_peak)}")
    horizon = default_horizon(spec)
    if all(r.t_peak == horizon for r in records):
        print(f"no peak found within horizon (steps={horizon}) at any weight", file=sys.stderr)
        return 3
    return 0


def cmd_scaling(args: argparse.Namespace) -> int:
    topology = Topology(args.topology)
    sizes = _parse_sizes(args.sizes)
    if len(set(sizes)) < 3:
        raise ValueError(f"scaling fit needs at least 3 distinct sizes, got {sorted(set(sizes))}")
    records = scaling_study(topology, sizes)
    fits = {
        base: fit_runtime(records, base) for base in ("natural", "base2")
    }
    summary = {
        "schema_version": SCHEMA_VERSION,
        "topology": topology.value,
        "l_rule": "degree/N",
        "records": [
            {"N": r.vertex_count, "t_peak": r.t_peak, "p_peak": _jnum(r.p_peak)}
            for r in records
        ],
        "fit": {
            base: {"c": _jnum(fit.c), "r2": _jnum(fit.r2)} for base, fit in fits.items()
        },
    }

    if args.format == "csv":
        lines = ["N,t_peak,p_peak"]
        lines += [f"{r.vertex_count},{r.t_peak},{_fmt(r.p_peak)}" for r in records]
        _write_text(args.out, "\n".join(lines) + "\n")
        _write_json(str(Path(args.out).with_suffix(".fit.json")), summary)
    else:
        _write_json(args.out, summary)

    print(
        f"c_natural={_fmt(fits['natural'].c)} c_base2={_fmt(fits['base2'].c)} "
        f"r2={_fmt(fits['natural'].r2)}"
    )
    for record in records:
        side = int(round(record.vertex_count ** 0.5))
        if record.t_peak == default_horizon(GridSpec(topology, side, side)):
            print(f"no peak found within horizon for N={record.vertex_count}", file=sys.stderr)
            return 3
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_all_checks()
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lqwalk",
        description="Lackadaisical quantum walk search on 2D periodic grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--topology",
            required=True,
            choices=[t.value for t in Topology],
            help="lattice type",
        )
        p.add_argument("--width", type=int, default=16, help="grid width (default 16)")
        p.add_argument("--height", type=int, default=16, help="grid height (default 16)")
        p.add_argument(
            "--marked",
            default=None,
            metavar="X,Y",
            help="marked vertex (default: grid centre)",
        )

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", required=True, help="output file path")
        p.add_argument(
            "--format", choices=["csv", "json"], default="csv", help="output format (default csv)"
        )

    p_run = sub.add_parser("run", help="single success-probability curve")
    add_grid_flags(p_run)
    p_run.add_argument(
        "--loop-weight",
        default="auto",
        help="self-loop weight, or 'auto' for degree/N (default auto)",
    )
    p_run.add_argument(
        "--steps",
        default="auto",
        help="number of steps, or 'auto' for ceil(3*sqrt(N ln N)) (default auto)",
    )
    add_output_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_sweep = sub.add_parser("sweep", help="peak statistics across self-loop weights")
    add_grid_flags(p_sweep)
    p_sweep.add_argument(
        "--l-min", type=float, default=None, help="smallest weight (default degree/(10N))"
    )
    p_sweep.add_argument(
        "--l-max", type=float, default=None, help="largest weight (default 10*degree/N)"
    )
    p_sweep.add_argument(
        "--l-points", type=int, default=25, help="geometric grid size (default 25)"
    )
    add_output_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_scaling = sub.add_parser("scaling", help="peak statistics across square grid sizes")
    p_scaling.add_argument(
        "--topology",
        required=True,
        choices=[t.value for t in Topology],
        help="lattice type",
    )
    p_scaling.add_argument(
        "--sizes",
        required=True,
        metavar="S1,S2,...",
        help="comma-separated square side lengths (at least 3)",
    )
    add_output_flags(p_scaling)
    p_scaling.set_defaults(func=cmd_scaling)

    p_verify = sub.add_parser("verify", help="run engine self-checks")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
