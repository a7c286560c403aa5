#!/usr/bin/env python3
"""Emit the phase-region grid files (CSV + SVG) for every shape family."""

import argparse
import os

from chirality2d.phase_atlas import FAMILIES, emit_grid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--resolution", type=int, default=200)
    parser.add_argument("--outdir", default="phase_figures")
    parser.add_argument("--family", choices=FAMILIES, default=None,
                        help="restrict to one family (default: all)")
    args = parser.parse_args()

    os.makedirs(args.outdir, exist_ok=True)
    families = [args.family] if args.family else list(FAMILIES)
    for family in families:
        csv_path = os.path.join(args.outdir, f"phase_{family}.csv")
        svg_path = os.path.join(args.outdir, f"phase_{family}.svg")
        n = emit_grid(family, args.resolution, csv_path, svg_path)
        print(f"{family}: {n} cells -> {csv_path}, {svg_path}")


if __name__ == "__main__":
    main()
