#!/usr/bin/env python3
"""
Main entry point for the amoeba-dimension toolkit.

    amoeba dim      [--gen NAME ARGS | --matrix FILE]
    amoeba rank     [--gen NAME ARGS | --matrix FILE] --subset LIST
    amoeba verify   [--gen NAME ARGS | --matrix FILE] --mode brute|numeric|axioms|all
    amoeba selftest

Results go to stdout as one line of JSON; diagnostics and error documents
go to stderr.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# Add src directory to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
src_path = os.path.join(current_dir, 'src')
sys.path.insert(0, src_path)

from amoeba_types.types import InstanceSpec
from cli.cmd_dim import cmd_dim
from cli.cmd_rank import cmd_rank
from cli.cmd_selftest import cmd_selftest
from cli.cmd_verify import cmd_verify, MODES
from error.errors import ParseError
from error.handle_errors import handle_amoeba_error
from pipeline.format_json import format_json
from utils.load_config import load_config

logger = logging.getLogger(__name__)


def add_instance_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--gen", nargs="+", metavar=("NAME", "ARGS"),
        help="Builtin generator: uniform d n | nisse | trunc-sum c k | identity n | ones n | random d n",
    )
    source.add_argument("--matrix", metavar="FILE", help="Matrix file over Q(i)")
    parser.add_argument("--format", choices=("text", "json"), default="text", help="Matrix file format")
    parser.add_argument("--seed", type=int, default=0, help="Seed for generators and sampling")


def build_spec(args: argparse.Namespace) -> InstanceSpec:
    if args.matrix is not None:
        return InstanceSpec(matrix_path=args.matrix, matrix_format=args.format, seed=args.seed)

    name, raw_params = args.gen[0], args.gen[1:]
    try:
        params = tuple(int(p) for p in raw_params)
    except ValueError:
        raise ParseError(f"generator arguments must be integers, got {' '.join(raw_params)!r}")
    return InstanceSpec(generator=name, params=params, seed=args.seed)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amoeba",
        description="Amoeba dimension of linear spaces via the derived matroid",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # dim
    dim_p = subparsers.add_parser("dim", help="Amoeba dimension r'(E) with the coarsest optimal partition")
    add_instance_arguments(dim_p)

    # rank
    rank_p = subparsers.add_parser("rank", help="Derived rank r'(S) of a subset")
    add_instance_arguments(rank_p)
    rank_p.add_argument("--subset", required=True, help='1-based elements, e.g. "1,3,5" ("" for the empty set)')

    # verify
    verify_p = subparsers.add_parser("verify", help="Cross-check against brute force, sampling and axioms")
    add_instance_arguments(verify_p)
    verify_p.add_argument("--mode", choices=MODES, default="all")
    verify_p.add_argument("--samples", type=int, default=None, help="Sample points for the numeric suite")

    # selftest
    subparsers.add_parser("selftest", help="Run the built-in regression corpus")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)

    config = load_config()
    try:
        if args.command == "selftest":
            document, code = cmd_selftest(config)
        else:
            spec = build_spec(args)
            if args.command == "dim":
                document, code = cmd_dim(spec, config)
            elif args.command == "rank":
                document, code = cmd_rank(spec, args.subset, config)
            else:
                document, code = cmd_verify(spec, args.mode, args.samples, args.seed, config)
    except Exception as e:
        error_document, code = handle_amoeba_error(e, args.command)
        logger.error(f"❌ {error_document['error']['message']}")
        print(format_json(error_document), file=sys.stderr)
        return code

    print(format_json(document))
    return code


if __name__ == "__main__":
    sys.exit(main())
