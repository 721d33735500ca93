"""line-dispersal command-line tool.

Exit codes: 0 success, 1 verification/check failure, 2 usage error,
3 input/parse error, 4 overflow.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from .. import config
from ..core.audit import audit
from ..core.model import Configuration, total_cost
from ..core.scalar import parse_scalar, rescale
from ..errors import (
    DispersalError,
    GenSpecError,
    InstanceError,
    InstanceFormatError,
    InstanceTooLargeError,
    NotIndependentError,
    ScalarOverflowError,
    ScalarParseError,
    ScaleMismatchError,
)
from ..harness import Family, GenSpec, bench, gen_instance, verify_batch
from ..oracles import ORACLES, pav_isotonic_solve
from ..solver import TraceEvent, replay_trace, solve
from ..solver.types import SolveResult, SolverCounters
from ..utils import read_jsonl_file, read_text_source, write_jsonl_file, write_text_file
from . import reports
from .instance_io import FORMATS, format_instance_text, load_instance, parse_positions_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_OVERFLOW = 4

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return values


def _family_list(text: str) -> List[Family]:
    try:
        return [Family(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        choices = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"families must be among: {choices}") from None


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _add_instance_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="instance file, or '-' for stdin")
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help="instance format (default: from the file extension)")
    parser.add_argument("--delta", default=None, help="delta as a decimal string (required for csv)")


def _cmd_solve(args) -> int:
    inst = load_instance(args.file, args.format, args.delta)
    result = solve(inst, want_trace=args.trace is not None)
    payload = reports.solve_payload(result, with_chains=args.chains)
    _emit(reports.dumps(payload) if args.out == "json" else reports.solve_plain(payload))

    if args.trace is not None:
        write_jsonl_file((event.to_dict() for event in result.trace), args.trace)

    if args.check:
        report = audit(inst, result.configuration)
        pav = pav_isotonic_solve(inst)
        if not report.ok:
            logger.error(f"audit failed: {report.to_dict()}")
            return EXIT_CHECK_FAILED
        if pav.best_cost != result.total_cost:
            logger.error(f"cost {result.total_cost} differs from the isotonic oracle's {pav.best_cost}")
            return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_batch(args.count, (args.nmin, args.nmax), args.oracle, seed=args.seed,
                          families=args.families, workers=args.workers, progress=args.progress)
    _emit(reports.dumps(report.to_dict()) if args.out == "json" else reports.verify_table(report))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_bench(args) -> int:
    report = bench(args.sizes, args.families, seed=args.seed, include_naive=args.naive,
                   repeats=args.repeats, progress=args.progress)
    _emit(reports.dumps(report.to_dict()) if args.out == "json" else reports.bench_table(report))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_gen(args) -> int:
    span, delta = parse_scalar(args.range), parse_scalar(args.delta)
    scale = max(span.scale, delta.scale)
    spec = GenSpec(
        seed=args.seed,
        n=args.n,
        coord_range=rescale(span.value, span.scale, scale),
        delta=rescale(delta.value, delta.scale, scale),
        family=Family(args.family),
        scale=scale,
    )
    text = format_instance_text(gen_instance(spec), comment=f"family={args.family} n={args.n} seed={args.seed}")
    if args.out:
        write_text_file(text, args.out)
    else:
        _emit(text)
    return EXIT_OK


def _cmd_audit(args) -> int:
    inst = load_instance(args.file, args.format, args.delta)
    parsed = [parse_scalar(t) for t in parse_positions_text(read_text_source(args.positions))]
    if len(parsed) != inst.n:
        raise InstanceFormatError(f"{args.positions} has {len(parsed)} positions, instance has {inst.n}")
    scale = max([inst.scale] + [p.scale for p in parsed])
    inst = inst.at_scale(scale)
    positions = inst.from_input_order([rescale(p.value, p.scale, scale) for p in parsed])
    report = audit(inst, Configuration(tuple(positions), scale))
    _emit(reports.dumps(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_replay(args) -> int:
    inst = load_instance(args.file, args.format, args.delta)
    try:
        events = [TraceEvent.from_dict(record, inst.scale) for record in read_jsonl_file(args.trace)]
    except DispersalError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InstanceFormatError(f"malformed trace record: {e}") from e
    cfg = replay_trace(inst, events)
    result = SolveResult(inst, cfg, total_cost(inst, cfg), SolverCounters())
    _emit(reports.dumps(reports.solve_payload(result)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="line-dispersal",
        description="Exact minimum total-displacement dispersal of points on a line.",
    )
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=None,
                        help="logging level (default: $LINE_DISPERSAL_LOG_LEVEL or WARNING)")
    sub = parser.add_subparsers(dest="command", metavar="{solve,verify,bench,gen,audit}")
    sub.required = True

    p = sub.add_parser("solve", help="solve one instance")
    _add_instance_args(p)
    p.add_argument("--out", choices=("json", "plain"), default="json")
    p.add_argument("--trace", default=None, help="write the JSONL trace to this path")
    p.add_argument("--check", action="store_true", help="audit the result and cross-check the isotonic oracle")
    p.add_argument("--chains", action="store_true", help="include the maximal chain partition")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="compare the solver with an oracle on seeded instances")
    p.add_argument("--oracle", choices=sorted(ORACLES), required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--families", type=_family_list, default=None)
    p.add_argument("--workers", type=int, default=config.VERIFY_WORKERS)
    p.add_argument("--out", choices=("json", "table"), default="json")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="time the solver and check the operation-count bound")
    p.add_argument("--sizes", type=_int_list, default=[1000, 10000, 100000])
    p.add_argument("--families", type=_family_list,
                   default=[Family.UNIFORM, Family.ADVERSARIAL_SINGLE_CHAIN])
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--naive", action="store_true", help="also time the quadratic implementation")
    p.add_argument("--repeats", type=int, default=config.BENCH_REPEATS)
    p.add_argument("--out", choices=("json", "table"), default="table")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(handler=_cmd_bench)

    p = sub.add_parser("gen", help="generate a seeded instance in plain format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--range", required=True, help="coordinate range as a decimal string")
    p.add_argument("--delta", required=True, help="delta as a decimal string")
    p.add_argument("--family", choices=[f.value for f in Family], default=Family.UNIFORM.value)
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("audit", help="audit a configuration given in input order")
    _add_instance_args(p)
    p.add_argument("positions", help="file with one position per point, in input order")
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("replay")
    _add_instance_args(p)
    p.add_argument("trace", help="JSONL trace written by solve --trace")
    p.set_defaults(handler=_cmd_replay)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        config.setup_logging(args.log_level)
    except ValueError as e:  # bad LINE_DISPERSAL_LOG_LEVEL
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    try:
        return args.handler(args)
    except ScalarOverflowError as e:
        logger.error(f"overflow: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_OVERFLOW
    except (GenSpecError, InstanceTooLargeError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except (InstanceError, ScalarParseError, InstanceFormatError, NotIndependentError,
            ScaleMismatchError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
