"""Command-line front end.

Exit codes: 0 when the search ran (with or without solutions), 2 on a model
or usage error, 3 when ``--verify`` finds a mismatch with the oracle.
"""

import argparse
import json
import sys

from .model import (ModelError, format_model, generate, parse_model,
                    solve_model, verify_against_oracle)
from .oracle import OracleTooLarge

EXIT_OK = 0
EXIT_MODEL_ERROR = 2
EXIT_MISMATCH = 3


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def make_parser():
    parser = argparse.ArgumentParser(
        prog="trailcp", description="Finite-domain constraint solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a model file or a generated model")
    solve.add_argument("file", nargs="?", help="model file ('-' for stdin)")
    solve.add_argument("--gen", metavar="KIND:N",
                       help="use a built-in model, e.g. queens:8 or chain:5")
    solve.add_argument("--json", action="store_true", help="emit a JSON report")
    solve.add_argument("--verify", action="store_true",
                       help="cross-check the full solution set against brute force")
    solve.add_argument("--max-nodes", type=_positive_int, metavar="K")
    solve.add_argument("--max-solutions", type=_positive_int, metavar="K")

    gen = sub.add_parser("gen", help="print a built-in model in model-file format")
    gen.add_argument("spec", metavar="KIND:N")
    return parser


def _load(args):
    if args.gen is not None:
        if args.file is not None:
            raise ModelError("give either a model file or --gen, not both")
        return generate(args.gen)
    if args.file is None:
        raise ModelError("no model given: pass a file or --gen")
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file) as f:
                text = f.read()
        except OSError as e:
            raise ModelError(f"cannot read {args.file}: {e.strerror}") from None
    return parse_model(text)


def _solve(args):
    try:
        model = _load(args)
    except ModelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MODEL_ERROR

    report = solve_model(model, args.max_nodes, args.max_solutions)
    if args.json:
        doc = report.to_dict()
    else:
        sys.stdout.write(report.to_text())

    status = EXIT_OK
    if args.verify:
        try:
            ok = verify_against_oracle(model)
        except OracleTooLarge as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_MODEL_ERROR
        if args.json:
            doc["verified"] = ok
        else:
            print(f"verify: {'ok' if ok else 'MISMATCH'}")
        if not ok:
            status = EXIT_MISMATCH
    if args.json:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return status


def main(argv=None):
    args = make_parser().parse_args(argv)
    if args.command == "gen":
        try:
            sys.stdout.write(format_model(generate(args.spec)))
        except ModelError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_MODEL_ERROR
        return EXIT_OK
    return _solve(args)


if __name__ == "__main__":
    sys.exit(main())
