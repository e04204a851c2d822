"""Batch chart renderer for benchmark report files."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .loader import load_inputs
from .render import DEFAULT_Y_CLIP, render_ratio_curves, render_time_bars


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lanebench-plots",
        description="Render per-scenario charts from benchmark report files.",
    )
    parser.add_argument("inputs", nargs="+",
                        help="report files, one per configuration/optimisation level "
                             "(JSON; ratio-curves also accepts the CSV mirror)")
    parser.add_argument("--kind", required=True, choices=["ratio-curves", "time-bars"])
    parser.add_argument("--out-dir", default=".", help="directory for the images")
    parser.add_argument("--y-clip", type=float, default=DEFAULT_Y_CLIP,
                        help=f"percentage ceiling for ratio-curves "
                             f"(default {DEFAULT_Y_CLIP:.0f})")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        series = load_inputs(args.inputs, require_os_family=(args.kind == "time-bars"))
    except (OSError, ValueError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.kind == "ratio-curves":
        info = render_ratio_curves(series, args.out_dir, y_clip=args.y_clip)
    else:
        info = render_time_bars(series, args.out_dir)
    for sid in sorted(info):
        print(f"wrote {info[sid]['path']}")
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
