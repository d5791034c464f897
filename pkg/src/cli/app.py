"""Command-line entry point: ``workbench <command> SCRIPT [options]``.

Results go to stdout, notices and errors to stderr. Exit code 0 on success,
1 on a domain error and 2 on a usage or parse error.
"""

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from src.conf import constants
from src.conf.config import settings
from src.core.exceptions import UsageError, WorkbenchError
from src.schemas.commands import CommandOptions
from src.services.workbench import WorkbenchService

logger = logging.getLogger("workbench")

SCRIPT_COMMANDS = (
    "axioms",
    "classify-semiring",
    "pair-semiring",
    "ideals",
    "congruences",
    "generate",
    "witness",
    "meet",
    "join",
    "radical",
    "plus",
    "flat",
    "nil",
    "classify",
    "spectrum",
    "vco",
    "topology-spec",
    "quotient",
    "ideal-maps",
    "principal",
    "variety",
    "closure",
    "irreducible",
    "vanishing",
    "star-union",
    "sqrt-over",
    "nullstellensatz",
    "hom-count",
    "show",
)

SEARCH_TARGETS = ("maximal-nonprime",)


def _sizes(text: str) -> str:
    low, _, high = text.partition("-")
    if not low.isdigit() or (high and not high.isdigit()):
        raise argparse.ArgumentTypeError(f"expected LOW-HIGH, got {text!r}")
    return text


def add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--semiring", help="declared semiring to work on")
    parser.add_argument(
        "--congruence",
        dest="congruences",
        action="append",
        default=[],
        help="declared congruence; repeat for binary commands",
    )
    parser.add_argument(
        "--system", dest="systems", action="append", default=[], help="declared system"
    )
    parser.add_argument("--points", help="declared point set")
    parser.add_argument("--ideal", help="declared ideal")
    parser.add_argument("--equivalence", help="declared equivalence")
    parser.add_argument("--pairs", help="pair-list congruence name or inline a~b,c~d")
    parser.add_argument("--pair", help="a single pair a~b")
    parser.add_argument(
        "--kind", default=constants.KIND_PRIME, choices=constants.SPECTRUM_KINDS
    )
    parser.add_argument("--alt", action="store_true", help="use the alternative construction")
    parser.add_argument("--check", help='polynomial pairs "f = g; ..." to test')
    parser.add_argument("--window", type=int, help="bound N for naturals semirings")
    parser.add_argument("--degree-cap", type=int, help="degree cap of syntactic enumerations")
    parser.add_argument("--max-size", type=int, help="carrier bound for congruence enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="workbench", description="Congruence workbench for finite commutative semirings"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name in SCRIPT_COMMANDS:
        sub = commands.add_parser(name)
        sub.add_argument("script", help="script file, or - for stdin")
        add_common_options(sub)
    run = commands.add_parser("run", help="execute the script's run directives")
    run.add_argument("script", help="script file, or - for stdin")
    run.add_argument("--window", type=int, help="bound N for naturals semirings")
    search = commands.add_parser("search", help="seeded counterexample search")
    search.add_argument("target", choices=SEARCH_TARGETS)
    search.add_argument("--seed", type=int, required=True)
    search.add_argument("--count", type=int, default=constants.SEARCH_DEFAULT_COUNT)
    search.add_argument(
        "--sizes",
        type=_sizes,
        default=f"{constants.SEARCH_MIN_SIZE}-{constants.SEARCH_MAX_SIZE}",
    )
    search.add_argument("--max-size", type=int)
    return parser


def read_script(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise UsageError(str(error)) from error


def options_from(args: argparse.Namespace) -> CommandOptions:
    fields = {
        key: value
        for key, value in vars(args).items()
        if key in CommandOptions.model_fields and value is not None
    }
    try:
        return CommandOptions(**fields)
    except ValidationError as error:
        first = error.errors()[0]
        raise UsageError(f"{first['loc'][0]}: {first['msg']}") from error


def execute(args: argparse.Namespace) -> list[str]:
    if args.command == "search":
        service = WorkbenchService.from_text("")
        return service.run(f"search {args.target}", options_from(args))
    service = WorkbenchService.from_text(read_script(args.script), args.window)
    if args.command == "run":
        return service.run_directives()
    return service.run(args.command, options_from(args))


def configure_logging() -> None:
    handler = logging.StreamHandler(sys.stderr)
    logger.handlers.clear()
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(settings.LOG_LEVEL)


def main(argv: list[str] | None = None) -> int:
    """
    Run the workbench CLI.

    Args:
        argv: Arguments without the program name; defaults to sys.argv.

    Returns:
        The process exit code.
    """
    args = build_parser().parse_args(argv)
    configure_logging()
    command = args.command if args.command != "search" else f"search {args.target}"
    try:
        lines = execute(args)
    except WorkbenchError as error:
        print(f"error[{command}]: {error.message}", file=sys.stderr)
        return error.exit_code
    for line in lines:
        print(line)
    return constants.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
