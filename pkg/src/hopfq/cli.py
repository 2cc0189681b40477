"""Command-line interface.

Subcommands:

    analyze        full entanglement/geometry report for one state
    verify-paper   the published-example conformance table
    sample         CSV of measures over Haar-random states (fixed seed)
    zero-divisors  basis zero-divisor census and the basis product table

Exit codes: 0 success, 1 parse error, 2 invalid input or state,
3 numeric failure, 4 conformance mismatch under --strict.
"""

import argparse
import os
import sys

from .braket import ParseError, parse_state
from .cdnum import LEVEL_NAMES, MAX_LEVEL, basis_product_table, find_basis_zero_divisors
from .reporting import (
    analyze_state,
    conformance_rows,
    report_to_csv,
    report_to_json,
    rows_to_csv,
    rows_to_json,
    rows_to_text,
    sample_table,
)
from .states import StateError, read_state_file

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_STATE = 2
EXIT_NUMERIC = 3
EXIT_STRICT = 4


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_STATE
    return EXIT_OK


def _load_state(source, normalize):
    """A --state value is a file path when one exists, bra-ket text otherwise."""
    if os.path.isfile(source):
        return read_state_file(source, normalize=normalize)
    return parse_state(source, normalize=normalize)


def cmd_analyze(args):
    try:
        state = _load_state(args.state, args.normalize)
        if not 0 <= args.qubit < state.n:
            print(
                f"error: --qubit {args.qubit} out of range for {state.n} qubits",
                file=sys.stderr,
            )
            return EXIT_STATE
        report = analyze_state(state, qubit=args.qubit)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STATE
    except (ArithmeticError, FloatingPointError) as exc:
        print(f"error: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    return _emit(text, args.out)


def cmd_verify_paper(args):
    rows = conformance_rows()
    if args.format == "json":
        text = rows_to_json(rows)
    elif args.format == "csv":
        text = rows_to_csv(rows)
    else:
        text = rows_to_text(rows)
    code = _emit(text, args.out)
    if code == EXIT_OK and args.strict and any(not r.match for r in rows):
        return EXIT_STRICT
    return code


def cmd_sample(args):
    if args.count < 1:
        print("error: --count must be at least 1", file=sys.stderr)
        return EXIT_STATE
    if args.seed < 0:
        print("error: --seed must be nonnegative", file=sys.stderr)
        return EXIT_STATE
    return _emit(sample_table(args.qubits, args.count, args.seed), args.out)


def _format_pair(pair):
    (a, s1, b), (c, s2, d) = pair
    lhs = f"(i{a} {'+' if s1 > 0 else '-'} i{b})"
    rhs = f"(i{c} {'+' if s2 > 0 else '-'} i{d})"
    return f"{lhs} * {rhs} = 0"


def cmd_zero_divisors(args):
    if args.table:
        rows = basis_product_table(args.level)
        lines = ["a,b,sign,index"]
        lines += [f"{a},{b},{'+' if s > 0 else '-'},{k}" for a, b, s, k in rows]
        return _emit("\n".join(lines) + "\n", args.out)
    lines = []
    for level in range(1, MAX_LEVEL + 1):
        pairs = find_basis_zero_divisors(level)
        name = LEVEL_NAMES[level]
        if not pairs:
            lines.append(f"level {level} ({name}): none")
        else:
            lines.append(
                f"level {level} ({name}): {len(pairs)} two-term basis zero-divisor pairs"
            )
            lines += ["  " + _format_pair(p) for p in pairs]
    return _emit("\n".join(lines) + "\n", args.out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfq",
        description="Geometric entanglement analysis of 1-4 qubit pure states "
        "via Cayley-Dickson pair encodings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one state")
    p.add_argument(
        "--state",
        required=True,
        help="bra-ket expression, e.g. '(|00>+|11>)/sqrt(2)', or a state-file path",
    )
    p.add_argument("--qubit", type=int, default=0, help="qubit to bring into the leading role")
    p.add_argument("--normalize", action="store_true", help="rescale input to unit norm")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write to this path instead of standard output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-paper", help="published-example conformance table")
    p.add_argument("--strict", action="store_true", help="exit 4 if any row mismatches")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write to this path instead of standard output")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("sample", help="measure statistics over random states")
    p.add_argument("--qubits", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write to this path instead of standard output")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("zero-divisors", help="zero-divisor census / product table")
    p.add_argument("--table", action="store_true", help="emit the basis product table as CSV")
    p.add_argument(
        "--level",
        type=int,
        choices=range(MAX_LEVEL + 1),
        default=MAX_LEVEL,
        help="algebra level for --table",
    )
    p.add_argument("--out", help="write to this path instead of standard output")
    p.set_defaults(func=cmd_zero_divisors)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
