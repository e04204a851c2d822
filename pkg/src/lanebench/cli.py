"""Command-line surface: run benchmarks, verify kernels, print advice.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import advisor, configmeta, harness, kernels, report
from .datagen import DEFAULT_SEED, FILL_RECIPE, GENERATOR_NAME, generate

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2

VERIFY_DEFAULT_LENGTHS = [1, 7, 8, 9, 64, 1000, 12345]
VERIFY_DEFAULT_SEEDS = [DEFAULT_SEED + k for k in range(3)]

_DEVICE_SHORTHAND = {
    "windows": "windows-x86-64",
    "linux": "linux-x86-64",
    "macos": "macos-arm64",
}


def _parse_scenarios(text: str) -> list[int]:
    if text.strip().lower() == "all":
        return sorted(kernels.SCENARIOS)
    try:
        ids = sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scenario list {text!r}")
    bad = [i for i in ids if i not in kernels.SCENARIOS]
    if bad or not ids:
        raise argparse.ArgumentTypeError(f"scenario ids must be in 1..8, got {text!r}")
    return ids


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}")


def _parse_tolerances(entries: Optional[Sequence[str]]) -> dict[int, float]:
    """Each entry is either 'VALUE' (all scenarios) or 'ID=VALUE'."""
    overrides: dict[int, float] = {}
    for entry in entries or []:
        try:
            if "=" in entry:
                sid_text, value_text = entry.split("=", 1)
                overrides[int(sid_text)] = float(value_text)
            else:
                value = float(entry)
                for sid in kernels.SCENARIOS:
                    overrides[sid] = value
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"bad tolerance {entry!r}; expected FLOAT or SCENARIO=FLOAT"
            )
    return overrides


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lanebench",
        description="Benchmark plain whole-array kernels against explicit 8-lane vector kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="measure scenarios and write a report")
    run.add_argument("--scenarios", type=_parse_scenarios, default="all",
                     help="comma-separated ids in 1..8, or 'all' (default)")
    run.add_argument("--length", type=int, default=harness.DEFAULT_LENGTH,
                     help=f"elements per array (default {harness.DEFAULT_LENGTH})")
    run.add_argument("--repeats", type=int, default=harness.DEFAULT_REPEATS,
                     help=f"timed rounds per variant (default {harness.DEFAULT_REPEATS})")
    run.add_argument("--scheme", choices=["interleaved", "blocked"], default="interleaved")
    run.add_argument("--seed", type=int, default=DEFAULT_SEED)
    run.add_argument("--tolerance", action="append", metavar="TOL|ID=TOL",
                     help="verification tolerance override; repeatable")
    run.add_argument("--opt-level", default=None,
                     help="optimisation label recorded in the report (default: detected)")
    run.add_argument("--out", default="lanebench_report.json", help="report file path")
    run.add_argument("--csv", default=None, help="also write the tabular CSV here")

    ver = sub.add_parser("verify", help="check plain/vector equivalence without timing")
    ver.add_argument("--scenarios", type=_parse_scenarios, default="all")
    ver.add_argument("--lengths", type=_parse_int_list, default=None,
                     help=f"comma-separated lengths (default {VERIFY_DEFAULT_LENGTHS})")
    ver.add_argument("--seeds", type=_parse_int_list, default=None,
                     help="comma-separated seeds (default three fixed seeds)")
    ver.add_argument("--tolerance", action="append", metavar="TOL|ID=TOL")

    adv = sub.add_parser("advise", help="toolchain and intrinsics-usage guidance")
    adv.add_argument("--device", required=True,
                     choices=sorted(set(advisor.DEVICE_CLASSES) | set(_DEVICE_SHORTHAND)))
    adv.add_argument("--available", default="",
                     help="comma-separated toolchains you can use, e.g. icc,msvc,gcc")
    adv.add_argument("--json", action="store_true", help="machine-readable output")

    sub.add_parser("list", help="print the scenario catalogue")
    return parser


def cmd_run(args) -> int:
    scenarios = args.scenarios
    try:
        overrides = _parse_tolerances(args.tolerance)
    except argparse.ArgumentTypeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    if args.repeats < 2:
        print("error: --repeats must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    if args.length < 1:
        print("error: --length must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    config = configmeta.detect(args.opt_level)
    generator = report.GeneratorInfo(name=GENERATOR_NAME, seed=args.seed, fill=FILL_RECIPE)
    scheme = harness.SchedulingScheme(tag=args.scheme, repeats=args.repeats)

    results = []
    failures = []
    exit_code = EXIT_OK
    for sid in scenarios:
        spec = kernels.SCENARIOS[sid]
        try:
            result = harness.run_scenario(
                spec, args.length, args.seed, scheme, tolerance=overrides.get(sid)
            )
        except kernels.KernelPreconditionError as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_USAGE
        except harness.VerificationFailure as err:
            print(f"FAIL scenario {sid}: {err}", file=sys.stderr)
            failures.append({
                "scenario_id": sid,
                "verification": {
                    "max_abs_diff": err.record.max_abs_diff,
                    "max_rel_diff": err.record.max_rel_diff,
                    "worst_index": err.record.worst_index,
                    "tolerance": err.record.tolerance,
                    "passed": err.record.passed,
                },
            })
            exit_code = EXIT_VERIFICATION
            break
        results.append(result)
        tau_pct = result.ratio.tau * 100.0
        sig_pct = result.ratio.sigma_tau * 100.0
        print(
            f"scenario {sid}: plain {result.plain_stats.mean / 1e6:.3f} ms, "
            f"vector {result.vector_stats.mean / 1e6:.3f} ms, "
            f"ratio {tau_pct:.1f} +/- {sig_pct:.1f} %"
            + (" [timer resolution warning]" if result.timer_warning else "")
        )

    rpt = report.build_report(config, generator, results, failures)
    report.write_report(rpt, args.out)
    print(f"report written to {args.out}")
    if args.csv:
        report.write_tabular(rpt, args.csv)
        print(f"tabular export written to {args.csv}")
    return exit_code


def cmd_verify(args) -> int:
    scenarios = args.scenarios
    lengths = args.lengths or VERIFY_DEFAULT_LENGTHS
    seeds = args.seeds or VERIFY_DEFAULT_SEEDS
    try:
        overrides = _parse_tolerances(args.tolerance)
    except argparse.ArgumentTypeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    explicit = args.lengths is not None

    failures = 0
    for sid in scenarios:
        spec = kernels.SCENARIOS[sid]
        for length in lengths:
            if spec.uses_offsets and length < 3:
                if explicit:
                    print(
                        f"error: scenario {sid} reads neighbours i-1/i+1 and needs "
                        f"length >= 3 (got {length})",
                        file=sys.stderr,
                    )
                    return EXIT_USAGE
                print(f"scenario {sid} length {length}: skipped (needs length >= 3)")
                continue
            for seed in seeds:
                data = generate(length, seed)
                kernels.run_plain(spec, data)
                kernels.run_vector(spec, data)
                record = harness.verify(spec, data, overrides.get(sid))
                status = "ok" if record.passed else "MISMATCH"
                if not record.passed:
                    failures += 1
                print(
                    f"scenario {sid} length {length} seed {seed}: {status} "
                    f"(max rel diff {record.max_rel_diff:.3e})"
                )
    if failures:
        print(f"{failures} verification failure(s)", file=sys.stderr)
        return EXIT_VERIFICATION
    print("all verifications passed")
    return EXIT_OK


def cmd_advise(args) -> int:
    device = _DEVICE_SHORTHAND.get(args.device, args.device)
    available = [tok for tok in args.available.split(",") if tok.strip()]
    rec = advisor.advise(device, available)
    if args.json:
        import json

        print(json.dumps({
            "device": device,
            "toolchain": rec.toolchain,
            "intrinsics_policy": rec.intrinsics_policy,
            "rationale": rec.rationale,
            "headline": rec.headline(),
        }))
    else:
        print(rec.headline())
    return EXIT_OK


def cmd_list(_args) -> int:
    for sid in sorted(kernels.SCENARIOS):
        spec = kernels.SCENARIOS[sid]
        flags = []
        if spec.uses_offsets:
            flags.append("offsets")
        if spec.uses_transcendentals:
            flags.append("transcendentals")
        if spec.conditional_kind != "none":
            flags.append(f"conditional:{spec.conditional_kind}")
        suffix = f" ({', '.join(flags)})" if flags else ""
        print(f"{sid}: {spec.description}{suffix}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "run": cmd_run,
        "verify": cmd_verify,
        "advise": cmd_advise,
        "list": cmd_list,
    }[args.command]
    return handler(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
