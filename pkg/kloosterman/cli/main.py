"""Command line entry point: `kloosterman <command> [options]`.

Exit codes: 0 when everything computed (and verified) cleanly, 1 when a
verification or identity check failed, 2 for an invalid configuration.
"""

import argparse
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from kloosterman.core.exceptions import ConfigError, FieldBoundsError, KloostermanError, ReducibleModulusError
from kloosterman.core.logger import get_logger, level_for_verbosity, setup_logging

from .commands import COMMANDS
from .config import CHECKS, RunConfig
from .render import emit, render


logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="Extension degree: the field is GF(2^r).")
    common.add_argument("--q", type=int, help="Field size, a power of two.")
    common.add_argument("--modulus", help="Irreducible modulus in hex, e.g. 0x13 for x^4+x+1.")
    common.add_argument("--hmax", dest="h_max", type=int, help="Largest moment exponent (default 9).")
    common.add_argument("--format", choices=["json", "csv", "table"], help="Output format (default table).")
    common.add_argument("--out", help="Write output to this file instead of stdout.")
    common.add_argument("--seed-order", type=int, help="Shuffle the group enumeration order with this seed.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging on stderr; repeat for debug.")

    parser = argparse.ArgumentParser(prog="kloosterman", description="Kloosterman sums over GF(2^r), trace codes of O(3,q) and Sp(2,q), and moment identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("kloosterman", parents=[common], help="K(lambda; a) for every nonzero a.")

    p_moments = sub.add_parser("moments", parents=[common], help="Power moments MK^h, T0K^h, T1K^h.")
    p_moments.add_argument("--cross-check", action="store_true", help="Also solve the MK recursion and compare.")

    p_gauss = sub.add_parser("gauss", parents=[common], help="Gauss sums of O(3,q), Sp(2,q) and the O(2n+1,q) formula.")
    p_gauss.add_argument("--n", type=int, help="Rank n of O(2n+1,q) for the closed formula (default 1).")

    p_weights = sub.add_parser("weights", parents=[common], help="Dual spectra and weight distributions of the trace codes.")
    p_weights.add_argument("--code", choices=["o3", "sp2", "both"], help="Which code to report (default both).")
    p_weights.add_argument("--full", action="store_true", help="Full distributions instead of truncated ones.")
    p_weights.add_argument("--jmax", dest="j_max", type=int, help="Truncation degree (default --hmax).")

    p_verify = sub.add_parser("verify", parents=[common], help="Check every identity against an independent oracle.")
    p_verify.add_argument("--sweep", help="Extension degrees, e.g. 2,3,5 or 2..10.")
    p_verify.add_argument("--only", help=f"Comma list of checks: {','.join(CHECKS)}.")
    p_verify.add_argument("--inject-fault", type=int, nargs="?", const=1, metavar="J", help="Add one to D_J before the trace-one recursion (default J=1).")
    p_verify.add_argument("--jobs", type=int, help="Worker processes for the sweep.")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None and k != "verbose"}
    return RunConfig(**values)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        setup_logging(level=level_for_verbosity(args.verbose))

    try:
        config = config_from_args(args)
    except (ConfigError, FieldBoundsError, ReducibleModulusError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidationError as e:
        print(f"error: invalid configuration\n{e}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        output = COMMANDS[config.command](config)
    except KloostermanError as e:
        logger.error(f"{config.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED

    emit(render(output, config.format), config.out)
    if not output.ok:
        for row in output.payload.get("rows", []):
            if not row["match"]:
                print(f"FAILED {row['check']} q={row['q']} h={row['h']}: {row['value']} != {row['oracle']}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
