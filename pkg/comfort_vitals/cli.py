"""
Command-line front end.

Exit codes: 0 on success, 2 when a rate cannot be estimated from the signal, 1 for every other
failure (unreadable or malformed input, invalid parameters or ROI, usage errors). JSON goes to stdout,
diagnostics and logs to stderr.
"""

import argparse
import json
import sys

from comfort_vitals import __comfort__
from comfort_vitals.exceptions import ComfortVitalsException, EstimationError
from comfort_vitals.io import render_study_report
from comfort_vitals.ippg import Roi
from comfort_vitals.logger import configure_logging, logger
from comfort_vitals.stats import DEFAULT_ALPHA
from comfort_vitals.tasks.synth import SYNTH_KINDS
from comfort_vitals.utils import log_traceback


EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ESTIMATION = 2

TASKS = {func.comfort_meta.name: func for func in __comfort__}


class ComfortArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _subparser(subparsers, name):
    meta = TASKS[name].comfort_meta
    parser = subparsers.add_parser(name, help=meta.description, description=meta.description)
    return parser, meta.parameters


def _add_synth(subparsers):
    parser, helps = _subparser(subparsers, "synth")
    parser.add_argument("kind", choices=SYNTH_KINDS, help=helps["kind"])
    parser.add_argument("-o", "--output", required=True, help=helps["output"])
    parser.add_argument("--rate", type=float, required=True, help=helps["rate"])
    parser.add_argument("--duration", type=float, required=True, dest="duration_s", help=helps["duration_s"])
    parser.add_argument("--fs", type=float, required=True, dest="sample_rate_hz", help=helps["sample_rate_hz"])
    parser.add_argument("--noise", type=float, default=0.0, dest="noise_rms", help=helps["noise_rms"])
    parser.add_argument("--drift", type=float, default=0.0, help=helps["drift"])
    parser.add_argument("--rr", type=float, default=15.0, help=helps["rr"])
    parser.add_argument("--width", type=int, default=64, help=helps["width"])
    parser.add_argument("--height", type=int, default=48, help=helps["height"])
    parser.add_argument("--seed", type=int, default=None, help=helps["seed"])
    parser.set_defaults(
        handler=lambda args: TASKS["synth"](
            kind=args.kind,
            output=args.output,
            rate=args.rate,
            duration_s=args.duration_s,
            sample_rate_hz=args.sample_rate_hz,
            noise_rms=args.noise_rms,
            drift=args.drift,
            rr=args.rr,
            width=args.width,
            height=args.height,
            seed=args.seed,
        )
    )


def _add_process(subparsers, name):
    parser, helps = _subparser(subparsers, name)
    parser.add_argument("path", help=helps["path"])
    parser.add_argument("-o", "--output", default="", help=helps["output_path"])
    parser.set_defaults(handler=lambda args: TASKS[name](args.path, output_path=args.output))


def _add_ippg(subparsers):
    parser, helps = _subparser(subparsers, "ippg")
    parser.add_argument("archive", help=helps["archive"])
    parser.add_argument("--roi", type=int, nargs=4, metavar=("X", "Y", "W", "H"), help=helps["roi"])
    parser.add_argument("-o", "--output", default="", help=helps["output_path"])
    parser.set_defaults(
        handler=lambda args: TASKS["ippg"](
            args.archive,
            roi=Roi(*args.roi) if args.roi else None,
            output_path=args.output,
        )
    )


def _add_analyze_study(subparsers):
    parser, helps = _subparser(subparsers, "analyze-study")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("path", nargs="?", default="", help=helps["path"])
    source.add_argument("--embedded", choices=("hr", "rr"), default="", help=helps["embedded"])
    parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help=helps["alpha"])
    parser.add_argument("--format", choices=("json", "table"), default="json", help="Output format.")
    parser.add_argument("-o", "--output", default="", help=helps["output_path"])

    def handler(args):
        report = TASKS["analyze-study"](
            path=args.path, embedded=args.embedded, alpha=args.alpha, output_path=args.output
        )
        return render_study_report(report) if args.format == "table" else report

    parser.set_defaults(handler=handler)


def _add_suggest(subparsers):
    parser, helps = _subparser(subparsers, "suggest")
    parser.add_argument("--temp", type=float, required=True, help=helps["temperature_c"])
    parser.add_argument("--humidity", type=float, required=True, help=helps["humidity_pct"])
    parser.add_argument(
        "--activity", type=str.lower, choices=("rest", "moderate", "intense"), required=True, help=helps["activity"]
    )
    parser.add_argument("--wear-hours", type=float, default=0.0, help=helps["wear_duration_h"])
    parser.add_argument("--hr", type=float, help=helps["hr"])
    parser.add_argument("--rr", type=float, help=helps["rr"])
    parser.add_argument("--hr-baseline", type=float, help=helps["hr_baseline"])
    parser.add_argument("--ecg", default="", help=helps["ecg"])
    parser.add_argument("--resp", default="", help=helps["resp"])
    parser.add_argument("--frames", default="", help=helps["frames"])
    parser.add_argument("--positive", nargs="*", default=[], help=helps["positive"])
    parser.add_argument("--negative", nargs="*", default=[], help=helps["negative"])
    parser.add_argument("--emotion", type=float, help=helps["emotion"])
    parser.add_argument("-o", "--output", default="", help=helps["output_path"])
    parser.set_defaults(
        handler=lambda args: TASKS["suggest"](
            temperature_c=args.temp,
            humidity_pct=args.humidity,
            activity=args.activity,
            wear_duration_h=args.wear_hours,
            hr=args.hr,
            rr=args.rr,
            hr_baseline=args.hr_baseline,
            ecg=args.ecg,
            resp=args.resp,
            frames=args.frames,
            positive=tuple(args.positive),
            negative=tuple(args.negative),
            emotion=args.emotion,
            output_path=args.output,
        )
    )


def build_parser() -> argparse.ArgumentParser:
    parser = ComfortArgumentParser(
        prog="comfort-vitals",
        description="Heart and respiration rate extraction, fabric/fit study statistics and garment suggestions.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs.")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    _add_synth(subparsers)
    _add_process(subparsers, "process-ecg")
    _add_process(subparsers, "process-resp")
    _add_ippg(subparsers)
    _add_analyze_study(subparsers)
    _add_suggest(subparsers)
    return parser


def main(argv=None) -> int:
    """Run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_ERROR

    configure_logging(args.verbose)
    try:
        result = args.handler(args)
    except EstimationError as error:
        print(f"error[{error.code}]: {error}", file=sys.stderr)
        return EXIT_ESTIMATION
    except ComfortVitalsException as error:
        print(f"error[{error.code}]: {error}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as error:
        logger.error(f"{args.command} failed: {error}")
        log_traceback()
        print(f"error[internal]: {error}", file=sys.stderr)
        return EXIT_ERROR

    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result.model_dump(mode="json"), indent=4))
    return EXIT_OK
