"""
Command-line entry points: simulate, compare, calibrate, validate, schema-docs.

Data goes to the output file or stdout; every diagnostic goes to stderr.
Exit codes: 0 success, 1 invalid config, 2 runtime or usage error.
"""
import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from dotenv import load_dotenv

from . import __version__
from .data_processing import (
    RunMetadata,
    compare_sweeps,
    emit_comparison,
    emit_results,
    flatten,
    load_config,
    parse_results,
    points_from_reports,
)
from .errors import ConfigValidationError, ParseError, VLCSimError
from .scenario import PointEvaluation, calibrate_bandwidth, defaults, run_sweep
from .schemas import SchemaValidator

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RUNTIME = 2

RESULT_SUFFIXES = ('.csv', '.jsonl')


def _default_jobs() -> int:
    raw = os.getenv("VLCSIM_JOBS", "1")
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"ignoring VLCSIM_JOBS={raw!r}; not an integer")
        return 1


def parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vlcsim",
        description="Indoor VLC NOMA / WDM-NOMA link simulator"
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument(
        '--log-level',
        default=os.getenv("VLCSIM_LOG_LEVEL", "WARNING"),
        help='Logging level for stderr diagnostics (env VLCSIM_LOG_LEVEL).'
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_options(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            '--out',
            default='-',
            help='Output file; "-" writes to stdout.'
        )
        p.add_argument(
            '--jobs',
            type=int,
            default=_default_jobs(),
            help='Worker threads for the sweep (env VLCSIM_JOBS). Output does not depend on it.'
        )
        p.add_argument(
            '--progress',
            action='store_true',
            help='Show a progress bar on stderr.'
        )

    def add_bracket_option(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            '--bracket',
            nargs=2,
            type=float,
            metavar=('LOW', 'HIGH'),
            default=defaults.CALIBRATION_BRACKET_HZ,
            help='Bandwidth search interval in Hz for calibration.'
        )

    simulate = sub.add_parser('simulate', help='Run one sweep and write its reports.')
    simulate.add_argument('config', type=Path, help='JSON config file.')
    simulate.add_argument(
        '--format',
        choices=['csv', 'jsonl'],
        default='csv',
        help='Output encoding.'
    )
    simulate.add_argument(
        '--calibrate-to',
        nargs=2,
        type=float,
        metavar=('MIN', 'MAX'),
        help='Fit the receiver bandwidth to these per-user rate extrema (bit/s) before the sweep.'
    )
    add_bracket_option(simulate)
    add_run_options(simulate)

    compare = sub.add_parser('compare', help='Compare the sum rates of two sweeps.')
    compare.add_argument('config_a', type=Path,
                         help='Baseline JSON config, or a .csv/.jsonl result file from simulate.')
    compare.add_argument('config_b', type=Path, help='JSON config or result file compared against the baseline.')
    add_run_options(compare)

    calibrate = sub.add_parser('calibrate', help='Fit the receiver bandwidth to target rate extrema.')
    calibrate.add_argument('config', type=Path, help='JSON config file.')
    calibrate.add_argument('--min', dest='target_min', type=float, required=True,
                           help='Target smallest per-user rate in bit/s.')
    calibrate.add_argument('--max', dest='target_max', type=float, required=True,
                           help='Target largest per-user rate in bit/s.')
    add_bracket_option(calibrate)
    add_run_options(calibrate)

    validate = sub.add_parser('validate', help='Check a config without running it.')
    validate.add_argument('config', type=Path, help='JSON config file.')

    docs = sub.add_parser('schema-docs', help='Write the config schema as markdown.')
    docs.add_argument('--out', type=Path, required=True, help='Markdown file to write.')
    return parser


def _write(data: bytes, out: str) -> None:
    if out == '-':
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    Path(out).write_bytes(data)
    logger.info(f"wrote {len(data)} bytes to {out}")


def _simulate(args) -> int:
    loaded = load_config(args.config)
    cfg = loaded.system
    calibrated, residual = None, None
    if args.calibrate_to:
        target_min, target_max = args.calibrate_to
        result = calibrate_bandwidth(cfg, loaded.sweep, target_min, target_max,
                                     bracket=tuple(args.bracket), n_jobs=args.jobs)
        cfg = cfg.with_bandwidth(result.bandwidth_hz)
        calibrated, residual = result.bandwidth_hz, result.residual
    points = run_sweep(cfg, loaded.sweep, n_jobs=args.jobs, progress=args.progress)
    meta = RunMetadata.for_run(cfg, loaded.config_hash, loaded.responsivity_assumed,
                               calibrated_bandwidth_hz=calibrated, calibration_residual=residual)
    _write(emit_results(flatten(points), meta, args.format), args.out)
    return EXIT_OK


def _load_run(path: Path, args) -> Tuple[List[PointEvaluation], RunMetadata]:
    """A sweep from a config file, or from a result file written earlier by simulate."""
    if path.suffix.lower() in RESULT_SUFFIXES:
        meta, reports = parse_results(path.read_bytes())
        logger.info(f"read {len(reports)} rows from {path}")
        return points_from_reports(reports), meta
    loaded = load_config(path)
    points = run_sweep(loaded.system, loaded.sweep, n_jobs=args.jobs, progress=args.progress)
    return points, RunMetadata.for_run(loaded.system, loaded.config_hash, loaded.responsivity_assumed)


def _compare(args) -> int:
    points_a, meta_a = _load_run(args.config_a, args)
    points_b, meta_b = _load_run(args.config_b, args)
    summary, extrema = compare_sweeps(points_a, points_b)
    _write(emit_comparison(summary, extrema, meta_a, meta_b), args.out)
    return EXIT_OK


def _calibrate(args) -> int:
    loaded = load_config(args.config)
    result = calibrate_bandwidth(loaded.system, loaded.sweep, args.target_min, args.target_max,
                                 bracket=tuple(args.bracket), n_jobs=args.jobs)
    lines = [
        f"bandwidth_hz: {result.bandwidth_hz!r}",
        f"residual: {result.residual!r}",
        f"achieved_min_bps: {result.achieved_min_bps!r}",
        f"achieved_max_bps: {result.achieved_max_bps!r}",
    ]
    _write(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return EXIT_OK


def _validate(args) -> int:
    is_valid, errors = SchemaValidator.validate_config_file(args.config)
    if is_valid:
        logger.info(f"{args.config} is valid")
        return EXIT_OK
    for error in errors:
        print(f"{args.config}: {error}", file=sys.stderr)
    return EXIT_INVALID


def _schema_docs(args) -> int:
    SchemaValidator.generate_schema_documentation(args.out)
    return EXIT_OK


COMMANDS = {
    'simulate': _simulate,
    'compare': _compare,
    'calibrate': _calibrate,
    'validate': _validate,
    'schema-docs': _schema_docs,
}


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_RUNTIME

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except ConfigValidationError as e:
        for error in e.errors:
            print(f"invalid config: {error}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as e:
        print(f"invalid config: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (VLCSimError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as e:
        logger.exception(f"unexpected failure in {args.command}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
