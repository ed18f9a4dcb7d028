"""Command-line front end.

Subcommands: solve, gen, verify, ratio, bench.  JSON artifacts go to stdout
or --output; all human-readable text goes to stderr.  Exit codes: 0 success,
2 input or validation error, 3 failed guarantee (certification or ratio),
4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any

from .duplication import format_orders
from .generate import GenParams, generate
from .model import Instance, criticality_score, validate
from .serialize import (
    FormatError,
    canonical_json,
    instance_from_json,
    instance_to_json,
    matching_from_json,
)
from .solver import solve
from .verify import (
    DEFAULT_CAP,
    CapExceededError,
    certify,
    ratio_harness,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARANTEE = 3
EXIT_CAP = 4


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_instance(path: str) -> Instance:
    instance = instance_from_json(_read(path))
    report = validate(instance)
    if not report.ok:
        for violation in report.violations:
            print(f"invalid instance: {violation}", file=sys.stderr)
        raise FormatError("instance failed validation")
    return instance


def _gen_params(args: argparse.Namespace) -> GenParams:
    return GenParams(
        u_count=args.u_count,
        w_count=args.w_count,
        edge_count=args.edge_count,
        p_max=args.p_max,
        crit_vertex_prob=args.crit_vertex_prob,
        crit_edge_prob=args.crit_edge_prob,
        capacity_max=args.capacity_max,
    )


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--u-count", type=int, default=4)
    parser.add_argument("--w-count", type=int, default=4)
    parser.add_argument("--edge-count", type=int, default=9)
    parser.add_argument("--p-max", type=int, default=4)
    parser.add_argument("--crit-vertex-prob", type=float, default=0.3)
    parser.add_argument("--crit-edge-prob", type=float, default=0.4)
    parser.add_argument("--capacity-max", type=int, default=1)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        instance = _load_instance(args.input)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    started = time.perf_counter_ns()
    try:
        result = solve(instance, engine=args.engine, construction=args.construction)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed_ns = time.perf_counter_ns() - started

    if args.dump_extended:
        sys.stderr.write(format_orders(result.ext))

    report: dict[str, Any] = {
        "matching": sorted(result.matching.edge_ids),
        "size": len(result.matching.edge_ids),
        "criticality_score": criticality_score(result.instance, result.matching),
        "extended_copy_count": len(result.ext.copies),
        "engine": result.engine,
        "construction": result.construction,
    }

    exit_code = EXIT_OK
    if args.certify:
        try:
            cert = certify(result.instance, result.matching, cap=args.cap)
        except CapExceededError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        report["certificate"] = cert.to_obj()
        if not cert.is_cgamma_stable:
            exit_code = EXIT_GUARANTEE

    _emit(canonical_json(report), args.output)
    print(f"solved in {elapsed_ns / 1e6:.2f} ms", file=sys.stderr)
    return exit_code


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        params = _gen_params(args)
        instance = generate(args.seed, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(instance_to_json(instance), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        instance = _load_instance(args.instance)
        matching = matching_from_json(_read(args.matching))
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        cert = certify(instance, matching, cap=args.cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit(canonical_json(cert.to_obj()), args.output)
    return EXIT_OK if cert.is_cgamma_stable else EXIT_GUARANTEE


def cmd_ratio(args: argparse.Namespace) -> int:
    params = _gen_params(args)
    try:
        reports = ratio_harness(args.seeds, params, cap=args.cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(
        canonical_json({"reports": [r.to_obj() for r in reports]}),
        args.output,
    )
    failures = [seed for seed, r in enumerate(reports) if not r.ratio_ok]
    if failures:
        seed = failures[0]
        print(f"ratio violated on seed {seed}; instance follows", file=sys.stderr)
        sys.stderr.write(instance_to_json(generate(seed, params)))
        return EXIT_GUARANTEE
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(x) for x in args.sizes.split(",") if x]
    lines = ["size,copies,nanos"]
    for size in sizes:
        params = GenParams(
            u_count=max(2, size // 4),
            w_count=max(2, size // 4),
            edge_count=size,
            p_max=16,
            crit_vertex_prob=0.0,
            crit_edge_prob=0.0,
            capacity_max=1,
        )
        instance = generate(0, params)
        best = None
        copies = 0
        for _ in range(args.repeats):
            started = time.perf_counter_ns()
            result = solve(instance)
            elapsed = time.perf_counter_ns() - started
            copies = len(result.ext.copies)
            best = elapsed if best is None else min(best, elapsed)
        lines.append(f"{size},{copies},{best}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critmatch",
        description="Approximate maximum stable matchings with thresholds, "
        "criticality, free edges, and matroid constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance")
    p_solve.add_argument("--input", required=True)
    p_solve.add_argument("--engine", choices=["auto", "gs", "kernel"], default="auto")
    p_solve.add_argument(
        "--construction", choices=["auto", "simple", "general"], default="auto"
    )
    p_solve.add_argument("--certify", action="store_true")
    p_solve.add_argument("--dump-extended", action="store_true")
    p_solve.add_argument("--output")
    p_solve.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser("gen", help="generate a seeded random instance")
    p_gen.add_argument("--seed", type=int, required=True)
    _add_param_flags(p_gen)
    p_gen.add_argument("--output")
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="certify a matching against an instance")
    p_verify.add_argument("--instance", required=True)
    p_verify.add_argument("--matching", required=True)
    p_verify.add_argument("--output")
    p_verify.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_verify.set_defaults(func=cmd_verify)

    p_ratio = sub.add_parser("ratio", help="run the approximation-ratio harness")
    p_ratio.add_argument("--seeds", type=int, required=True)
    _add_param_flags(p_ratio)
    p_ratio.add_argument("--output")
    p_ratio.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_ratio.set_defaults(func=cmd_ratio)

    p_bench = sub.add_parser("bench", help="time the solver across sizes")
    p_bench.add_argument("--sizes", required=True, help="comma-separated edge counts")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--output")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
