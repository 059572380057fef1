import argparse
import logging
import sys
import traceback
from typing import List, Optional, Sequence, Tuple, Type

from pydantic import ValidationError

from .. import __version__
from ..config.run_config import RunConfig
from ..config.settings import get_settings
from ..errors import (
    CapacityExceededError,
    ContractViolationError,
    GenerationFailedError,
)
from .commands import (
    EXIT_CAPACITY,
    EXIT_INTERNAL,
    EXIT_USAGE,
    EXIT_VERIFICATION,
    cmd_decompose,
    cmd_snf,
    cmd_verify,
)

logger = logging.getLogger(__name__)

# First matching entry wins, so subclasses come before their bases.
EXIT_CODES: List[Tuple[Type[BaseException], int]] = [
    (CapacityExceededError, EXIT_CAPACITY),
    (GenerationFailedError, EXIT_VERIFICATION),
    (ContractViolationError, EXIT_USAGE),
    (ValidationError, EXIT_USAGE),
    (OSError, EXIT_USAGE),
]


def exit_code_for(exc: BaseException) -> int:
    for exc_type, code in EXIT_CODES:
        if isinstance(exc, exc_type):
            return code
    return EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="abelian-decomp",
        description="Decompose finite Abelian groups into cyclic groups of prime-power order.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=settings.LOG_LEVEL.upper(),
        help="logging level (stderr)",
    )

    formatting = argparse.ArgumentParser(add_help=False)
    formatting.add_argument(
        "--format",
        dest="output_format",
        choices=["text", "structured"],
        help=f"output format (default {settings.OUTPUT_FORMAT})",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help=f"sampling seed (default {settings.SEED})")
    common.add_argument("--margin-c", dest="margin_c", type=int, help=f"sampling margin c (default {settings.MARGIN_C})")
    common.add_argument("--capacity", type=int, help=f"hidden-subgroup oracle budget (default {settings.HSP_CAPACITY})")
    common.add_argument("--retries", type=int, help=f"resampling attempts (default {settings.RETRIES})")
    common.add_argument("--concurrency", type=int, help="Sylow buckets decomposed in parallel")

    sub = parser.add_subparsers(dest="command", required=True)

    p_snf = sub.add_parser("snf", parents=[formatting], help="Smith normal form of a matrix file")
    p_snf.add_argument("matrix_file")

    p_dec = sub.add_parser("decompose", parents=[formatting, common], help="decompose a group")
    p_dec.add_argument("group_spec", help="znstar:N | classgroup:D | cyclic:m1,m2,...")
    p_dec.add_argument("--output", help="also write the structured record to this file")

    p_ver = sub.add_parser("verify", parents=[formatting, common], help="verify a stored decomposition")
    p_ver.add_argument("group_spec")
    p_ver.add_argument("decomposition_file")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_settings(
        seed=getattr(args, "seed", None),
        margin_c=getattr(args, "margin_c", None),
        capacity=getattr(args, "capacity", None),
        retries=getattr(args, "retries", None),
        concurrency=getattr(args, "concurrency", None),
        output_format=args.output_format,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = _run_config(args)
        if args.command == "snf":
            return cmd_snf(args.matrix_file, config)
        if args.command == "decompose":
            return cmd_decompose(args.group_spec, config, output=args.output)
        return cmd_verify(args.group_spec, args.decomposition_file, config)
    except Exception as exc:
        code = exit_code_for(exc)
        if code == EXIT_INTERNAL:
            logger.error(f"Unhandled exception in {args.command}: {exc}")
            logger.error(traceback.format_exc())
        sys.stderr.write(f"error: {exc}\n")
        return code


if __name__ == "__main__":
    sys.exit(main())
