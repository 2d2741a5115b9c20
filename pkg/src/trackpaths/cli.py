"""Command-line interface: ``trackpaths <command> ...``.

Exit codes: 0 success / YES side, 1 NO side or failed check, 2 input error,
3 path explosion in the exact solver.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .experiment import SweepError, parse_range, parse_sweep, rows_to_csv, run_sweep
from .fileio import InstanceFormatError, read_instance, serialize_instance, write_instance
from .fuzz import run_fuzz
from .generators import GenSpec
from .graph import GraphError
from .kernel import Verdict, kernelize
from .oracle import DEFAULT_CAP, NoPath, PathExplosion, find_conflict, min_tracking_set
from .report import KernelReport

log = logging.getLogger("trackpaths")

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_EXPLOSION = 0, 1, 2, 3


def _load(path, k_override=None):
    inst, has_k = read_instance(path)
    if k_override is not None:
        if has_k and k_override != inst.k:
            log.warning("--k %d overrides k %d from %s", k_override, inst.k, path)
        inst.k = k_override
    return inst


def cmd_kernelize(args) -> int:
    inst = _load(args.input, args.k)
    started = time.perf_counter()
    outcome = kernelize(inst)
    elapsed = time.perf_counter() - started
    report = KernelReport.from_outcome(inst, outcome, planar=args.planar)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    print(f"kernelize: {elapsed:.3f}s", file=sys.stderr)
    if outcome.verdict is Verdict.REDUCED:
        out = Path(args.output) if args.output else Path(args.input).with_suffix(".kernel.txt")
        id_map = " ".join(f"{i}:{v}" for i, v in enumerate(report.reduced_id_map, start=1))
        write_instance(outcome.reduced, out, [f"kernel of {Path(args.input).name}",
                                              f"ids (kernel:original) {id_map}"])
        print(f"reduced instance written to {out}", file=sys.stderr)
    return EXIT_OK if outcome.verdict in (Verdict.REDUCED, Verdict.TRIVIAL_YES) else EXIT_NO


def cmd_solve(args) -> int:
    inst = _load(args.input)
    try:
        size, witness = min_tracking_set(inst, args.cap)
    except PathExplosion as exc:
        print(f"error: {exc} (try --cap or kernelize first)", file=sys.stderr)
        return EXIT_EXPLOSION
    except NoPath:
        print("no s-t path: nothing to track")
        return EXIT_NO
    result = {"size": size, "trackers": [v + 1 for v in witness]}
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(f"minimum tracking set size: {size}")
        print("trackers: " + (" ".join(str(v + 1) for v in witness) or "-"))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load(args.input)
    n = inst.graph.num_vertices()
    bad = [v for v in args.trackers if not 1 <= v <= n]
    if bad:
        print(f"error: unknown vertex id(s) {bad}", file=sys.stderr)
        return EXIT_INPUT
    trackers = [v - 1 for v in args.trackers]
    try:
        conflict = find_conflict(inst, trackers, args.cap)
    except PathExplosion as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXPLOSION
    if conflict is None:
        print("valid")
        return EXIT_OK
    p1, p2 = ([v + 1 for v in p] for p in conflict)
    print("invalid")
    print("same tracker sequence on paths:")
    print("  " + " ".join(map(str, p1)))
    print("  " + " ".join(map(str, p2)))
    return EXIT_NO


def cmd_gen(args) -> int:
    params = tuple(args.params)
    try:
        inst = GenSpec(args.family, params, args.seed).build(args.k)
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    comment = [f"generated: {args.family} {' '.join(map(str, params))} seed={args.seed}"]
    text = serialize_instance(inst, comment)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    summary = run_fuzz(args.count, args.max_n, args.seed, args.cap)
    d = summary.to_dict()
    if args.json:
        print(json.dumps(d, indent=2, sort_keys=True))
    else:
        print(f"instances: {d['count']} (n <= {d['max_n']}, seed {d['seed']})")
        print(f"verdict checks: {d['verdict_checks']}, disagreements: {d['verdict_disagreements']}")
        for rule, c in d["rule_checks"].items():
            print(f"  {rule}: {c['pass']} pass, {c['fail']} fail")
        print(f"kernel bound violations: {d['kernel_bound_violations']}")
        print(f"FVS checks failed: {d['fvs_lower_bound_violations'] + d['fvs_ratio_violations']}")
        if d["first_failing_index"] is not None:
            print(f"first failing instance: index {d['first_failing_index']} of seed {d['seed']}")
    return EXIT_OK if summary.failures == 0 else EXIT_NO


def cmd_experiment(args) -> int:
    specs = []
    for sweep in args.sweep:
        specs.extend(parse_sweep(sweep, args.seeds))
    ks = parse_range(args.k)
    rows = run_sweep(specs, ks)
    text = rows_to_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import plot_headroom

        plot_headroom(rows, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trackpaths",
                                     description="Kernelization and exact oracle for Tracking Paths.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernelize", help="reduce an instance to a small kernel")
    p.add_argument("input")
    p.add_argument("--k", type=int, help="override the budget in the file")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--planar", action="store_true", help="caller asserts planarity; add the 10k-3 diagnostic")
    p.add_argument("-o", "--output", help="where to write the reduced instance")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="exact minimum tracking set (small instances)")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of s-t paths")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a tracker set")
    p.add_argument("input")
    p.add_argument("trackers", type=int, nargs="*", help="1-based vertex ids")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("family", choices=["theta", "tree_sink", "flower", "random", "path"])
    p.add_argument("params", type=int, nargs="*",
                   help="theta: P LEN | tree_sink: LEAVES SINK_IS_T | flower: TREES LEAVES | random: N M | path: LEN")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="differential check against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("experiment", help="sweep families, emit CSV and optionally a figure")
    p.add_argument("--sweep", action="append", default=[],
                   help="FAMILY:RANGE,RANGE,... e.g. theta:2-6,2 (repeatable)")
    p.add_argument("--k", default="0-4", help="budget range, e.g. 0-5")
    p.add_argument("--seeds", type=int, default=5, help="seeds per random parameter set")
    p.add_argument("--csv", help="output CSV path (default stdout)")
    p.add_argument("--plot", help="output figure path (png/pdf/svg)")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InstanceFormatError, GraphError, SweepError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
