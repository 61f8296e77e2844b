"""Main entry point for the agiform-sos command line.

Usage:
    python -m src.main enumerate simplex.json --k 2
    python -m src.main is-sos motzkin.json
    python -m src.main decompose hurwitz.json --blowup 2
    python -m src.main witness simplex.json --k 2 --point 4,4,4
    python -m src.main verify-theorem simplex.json --k 2
    python -m src.main demo horn --check-identity --samples 10000 --seed 0

The report document goes to stdout; logs go to stderr. Exit codes:
0 success, 2 validation, 3 budget, 4 theorem precondition, 5 internal invariant.
"""

import argparse
import asyncio
import sys

from src.config import configure_logging, get_logger, settings
from src.models.documents import CommandRequest, ReportDocument
from src.services import CommandError, CommandService
from src.transformers import ReportTransformer

logger = get_logger(__name__)

EXIT_VALIDATION = 2


def _point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-box-points", type=_positive, default=None)
    common.add_argument("--max-depth", type=_positive, default=None)
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    common.add_argument("--log-level", default=None, help="override LOG_LEVEL")

    parser = argparse.ArgumentParser(
        prog="agiform-sos",
        description="Exact SOS decisions and mediation witnesses for agiforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enumerate_cmd = sub.add_parser("enumerate", parents=[common], help="list kU ∩ Z^n")
    enumerate_cmd.add_argument("file")
    enumerate_cmd.add_argument("--k", type=_positive, default=1)

    for name, help_text in (
        ("mediated", "maximal mediated set with certificate"),
        ("is-sos", "decide whether the agiform in the file is sos"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("file")

    decompose_cmd = sub.add_parser(
        "decompose", parents=[common], help="binomial-square decomposition"
    )
    decompose_cmd.add_argument("file")
    decompose_cmd.add_argument("--blowup", type=_positive, default=None, metavar="K")

    witness_cmd = sub.add_parser("witness", parents=[common], help="mediation witness for a point")
    witness_cmd.add_argument("file")
    witness_cmd.add_argument("--k", type=_positive, required=True)
    witness_cmd.add_argument("--point", type=_point, required=True)

    verify_cmd = sub.add_parser(
        "verify-theorem", parents=[common], help="witness every non-vertex point of kU"
    )
    verify_cmd.add_argument("file")
    verify_cmd.add_argument("--k", type=_positive, required=True)

    demo_cmd = sub.add_parser("demo", parents=[common], help="Motzkin, Hurwitz and Horn demos")
    demo_cmd.add_argument("name", choices=("motzkin", "hurwitz", "horn"))
    demo_cmd.add_argument("--check-identity", action="store_true")
    demo_cmd.add_argument(
        "--samples",
        type=_positive,
        nargs="?",
        const=settings.sampling.default_samples,
        default=None,
        help="seeded Horn evaluations (bare flag: SAMPLING_DEFAULT_SAMPLES)",
    )
    demo_cmd.add_argument("--seed", type=int, default=None)

    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    seed = getattr(args, "seed", None)
    samples = getattr(args, "samples", None)
    if samples is not None and seed is None:
        seed = settings.sampling.default_seed
    return CommandRequest(
        command=args.command,
        input_path=getattr(args, "file", None),
        k=getattr(args, "k", None),
        point=getattr(args, "point", None),
        blowup=getattr(args, "blowup", None),
        name=getattr(args, "name", None),
        check_identity=getattr(args, "check_identity", False),
        samples=samples,
        seed=seed,
        max_box_points=args.max_box_points,
        max_depth=args.max_depth,
        include_timing=args.timing,
    )


def render(report: ReportDocument, output: str) -> str:
    if output == "text":
        return ReportTransformer.to_text(report)
    return report.to_json()


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the command and print its report.

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level.upper() if args.log_level else None)
    request = request_from_args(args)

    logger.info("Running command", command=request.command, environment=settings.environment)
    try:
        report = asyncio.run(CommandService().run(request))
    except CommandError as e:
        logger.error("Invalid command", command=request.command, error=str(e))
        return EXIT_VALIDATION

    print(render(report, args.output))
    return report.exit_code


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
