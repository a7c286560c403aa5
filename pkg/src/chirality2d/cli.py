"""Command-line front end.

Subcommands: alpha (asymmetry values of a polygon file), profile (reflection
profile CSV), phase (parameter-grid region files), bounds (inequality fuzz
campaign), witness (asymmetry witness body).  Exit codes: 2 parse error,
3 degenerate polygon, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .bounds_lab import (OutOfRange, check_main_bounds, make_asymmetry_witness,
                         run_campaign, write_report_csv)
from .chirality import alpha1_numeric, alpha2, asymmetry_alpha0
from .geometry import DegenerateInput, GeometryError, load_polygon
from .phase_atlas import FAMILIES, emit_grid

EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4


@dataclass(frozen=True)
class RunConfig:
    grid: int = 2048
    refine_tol: float = 1e-10
    seed: int = 0
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.grid < 64:
            raise ValueError("grid must be at least 64")
        if not 0.0 < self.refine_tol <= 1e-4:
            raise ValueError("refine_tol must lie in (0, 1e-4]")
        if self.format not in ("csv", "svg", "text"):
            raise ValueError("format must be csv, svg, or text")


def _apply_thread_cap() -> None:
    raw = os.environ.get("CHIRALITY_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        return
    if cap > 0:
        try:
            import numba

            numba.set_num_threads(min(cap, numba.config.NUMBA_NUM_THREADS))
        except (ImportError, ValueError):
            pass


def _load(path):
    try:
        return load_polygon(path)
    except DegenerateInput as exc:
        print(f"degenerate polygon: {exc}", file=sys.stderr)
        sys.exit(EXIT_DEGENERATE)
    except (GeometryError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        sys.exit(EXIT_PARSE)
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(EXIT_IO)


def _open_out(config):
    if config.output_path in (None, "-"):
        return sys.stdout, False
    try:
        return open(config.output_path, "w", newline="\n"), True
    except OSError as exc:
        print(f"cannot write {config.output_path}: {exc}", file=sys.stderr)
        sys.exit(EXIT_IO)


def cmd_alpha(args) -> int:
    config = _config(args)
    K = _load(args.input)
    a0 = asymmetry_alpha0(K)
    a1 = alpha1_numeric(K, grid=config.grid, refine_tol=config.refine_tol)
    a2 = alpha2(K)
    lines = [
        f"alpha0={a0.value:.6f}",
        f"alpha1={a1.value:.6f}, axis={a1.classification}",
        f"alpha2={a2.value:.6f}",
        f"axis_theta={a1.axis.theta:.12g}",
    ]
    out, close = _open_out(config)
    out.write("\n".join(lines) + "\n")
    if close:
        out.close()
    return 0


def cmd_profile(args) -> int:
    config = _config(args)
    K = _load(args.input)
    result = alpha1_numeric(K, grid=config.grid,
                            refine_tol=config.refine_tol, keep_profile=True)
    out, close = _open_out(config)
    out.write("theta,R\n")
    for theta, val in result.profile:
        out.write(f"{theta:.12g},{val:.12g}\n")
    if close:
        out.close()
    return 0


def cmd_phase(args) -> int:
    config = _config(args)
    csv_path = config.output_path or f"phase_{args.family}.csv"
    svg_path = None
    if config.format == "svg":
        svg_path = os.path.splitext(csv_path)[0] + ".svg"
    try:
        emit_grid(args.family, args.resolution, csv_path, svg_path)
    except OSError as exc:
        print(f"cannot write grid: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def cmd_bounds(args) -> int:
    config = _config(args)
    if args.witness is not None:
        K = make_asymmetry_witness(args.witness)
        a0 = asymmetry_alpha0(K).value
        print(f"beta={args.witness:.12g} alpha0={a0:.12g}")
        return 0
    reports = run_campaign(n_bodies=args.count,
                           n_pairs=max(1, args.count // 5), seed=config.seed)
    if config.output_path:
        try:
            write_report_csv(config.output_path, reports)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    failures = [rep for rep in reports if not rep.all_passed]
    for rep in failures:
        for c in rep.checks:
            if not c.passed:
                print(f"FAIL {rep.body_id} {c.name}: lhs={c.lhs:.12g} "
                      f"rhs={c.rhs:.12g}", file=sys.stderr)
    print(f"checked {len(reports)} reports, {len(failures)} failures")
    return 1 if failures else 0


def cmd_witness(args) -> int:
    config = _config(args)
    try:
        K = make_asymmetry_witness(args.beta, disk_sides=args.disk_sides)
    except OutOfRange as exc:
        print(f"invalid witness parameter: {exc}", file=sys.stderr)
        return EXIT_PARSE
    a0 = asymmetry_alpha0(K).value
    out, close = _open_out(config)
    if config.output_path:
        for x, y in K.vertices:
            out.write(f"{float(x)!r} {float(y)!r}\n")
        if close:
            out.close()
    print(f"beta={args.beta:.12g} alpha0={a0:.12g} vertices={len(K)}")
    return 0


def _config(args) -> RunConfig:
    try:
        return RunConfig(grid=args.grid, refine_tol=args.tol, seed=args.seed,
                         output_path=args.out, format=args.format)
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chirality2d",
        description="reflection-asymmetry measures of planar convex polygons")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--grid", type=int, default=2048)
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
        p.add_argument("--format", default="csv",
                       choices=("csv", "svg", "text"))

    p = sub.add_parser("alpha", help="asymmetry values of a polygon file")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("profile", help="reflection profile CSV")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("phase", help="parameter-grid phase files")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("resolution", type=int)
    common(p)
    p.set_defaults(func=cmd_phase)

    p = sub.add_parser("bounds", help="inequality fuzz campaign")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--witness", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("witness", help="asymmetry witness body")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--disk-sides", type=int, default=720)
    common(p)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    _apply_thread_cap()
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
