"""Command-line front end.

Subcommands: qgenus (print the Chern-class polynomial tables), mzv
(evaluate one multiple zeta value), stuffle (multiply two words), verify
(run the self-check suites).  Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 verification failure, 2 usage or budget errors,
3 divergent MZV request.
"""

from __future__ import annotations

import argparse
import json
import sys

from .genus import (
    DEGREE_BUDGET,
    cy_genus_to_json,
    genus_to_json,
    q_genus,
    q_genus_cy,
)
from .numeric import CutoffBudgetError, DivergentMzvError, mzv
from .render import (
    format_bounded,
    format_cy_genus_line,
    format_genus_line,
    format_qsym,
)
from .verify import SUITES, run_suite
from .words import QsymPoly, stuffle

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DIVERGENT = 3


def _parse_word(text: str):
    text = text.strip()
    if not text:
        return ()
    try:
        letters = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}: use comma-separated integers")
    if any(i < 1 for i in letters):
        raise ValueError(f"word letters must be >= 1, got {text!r}")
    return letters


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammagenus",
        description=(
            "Chern-class polynomials of the 1/Gamma(1+z) multiplicative "
            "sequence, with multiple-zeta-value coefficients"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    qgenus = sub.add_parser(
        "qgenus", help="print Q_1..Q_N (or their c_1 = 0 specializations)"
    )
    qgenus.add_argument("--max", type=int, required=True, metavar="N")
    qgenus.add_argument(
        "--cy", action="store_true", help="restrict to c_1 = 0 (no part-1 partitions)"
    )
    qgenus.add_argument("--format", choices=("text", "json"), default="text")
    qgenus.add_argument(
        "--ascii", action="store_true", help="spell gamma/pi/zeta without Unicode"
    )

    mzv_cmd = sub.add_parser("mzv", help="evaluate one multiple zeta value")
    mzv_cmd.add_argument(
        "--args", required=True, metavar="I1,I2,...", help="composition, e.g. 6,2"
    )
    mzv_cmd.add_argument("--tol", type=float, default=1e-6)
    mzv_cmd.add_argument("--format", choices=("text", "json"), default="text")

    stuffle_cmd = sub.add_parser("stuffle", help="stuffle product of two words")
    stuffle_cmd.add_argument("--left", required=True, metavar="W1")
    stuffle_cmd.add_argument("--right", required=True, metavar="W2")
    stuffle_cmd.add_argument("--format", choices=("text", "json"), default="text")

    verify_cmd = sub.add_parser("verify", help="run the self-check suites")
    verify_cmd.add_argument("--suite", required=True, choices=("all",) + SUITES)
    verify_cmd.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def cmd_qgenus(opts) -> int:
    lo = 2 if opts.cy else 1
    if opts.max < lo or opts.max > DEGREE_BUDGET:
        print(
            f"qgenus: --max must be between {lo} and {DEGREE_BUDGET}"
            + (" with --cy" if opts.cy else ""),
            file=sys.stderr,
        )
        return EXIT_USAGE
    if opts.format == "json":
        if opts.cy:
            payload = [cy_genus_to_json(q_genus_cy(i)) for i in range(lo, opts.max + 1)]
        else:
            payload = [genus_to_json(q_genus(i)) for i in range(lo, opts.max + 1)]
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for i in range(lo, opts.max + 1):
        if opts.cy:
            print(format_cy_genus_line(q_genus_cy(i), ascii_mode=opts.ascii))
        else:
            print(format_genus_line(q_genus(i), ascii_mode=opts.ascii))
    return EXIT_OK


def cmd_mzv(opts) -> int:
    try:
        comp = _parse_word(opts.args)
    except ValueError as exc:
        print(f"mzv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not comp:
        print("mzv: composition must be nonempty", file=sys.stderr)
        return EXIT_USAGE
    if opts.tol <= 0:
        print("mzv: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        value = mzv(comp, opts.tol)
    except DivergentMzvError as exc:
        print(f"mzv: {exc}", file=sys.stderr)
        return EXIT_DIVERGENT
    except CutoffBudgetError as exc:
        print(f"mzv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if opts.format == "json":
        print(json.dumps(value.to_json(), sort_keys=True))
    else:
        label = ",".join(str(i) for i in comp)
        print(f"zeta({label}) = {format_bounded(value, ascii_mode=True)}")
    return EXIT_OK


def cmd_stuffle(opts) -> int:
    try:
        left = _parse_word(opts.left)
        right = _parse_word(opts.right)
    except ValueError as exc:
        print(f"stuffle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    product = stuffle(QsymPoly.from_word(left), QsymPoly.from_word(right))
    if opts.format == "json":
        from .words import qsym_to_json

        print(json.dumps(qsym_to_json(product), sort_keys=True))
    else:
        print(format_qsym(product))
    return EXIT_OK


def cmd_verify(opts) -> int:
    report = run_suite(opts.suite)
    if opts.format == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(f"suite: {report.suite}")
        for check in report.checks:
            marker = "PASS" if check.passed else "FAIL"
            line = f"[{marker}] {check.id}: {check.description}"
            print(line)
            if not check.passed:
                if check.expected:
                    print(f"       expected: {check.expected}")
                if check.actual:
                    print(f"       actual:   {check.actual}")
                if check.bound:
                    print(f"       bound:    {check.bound}")
        total = len(report.checks)
        good = sum(1 for c in report.checks if c.passed)
        print(f"{good}/{total} checks passed")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    if opts.command == "qgenus":
        return cmd_qgenus(opts)
    if opts.command == "mzv":
        return cmd_mzv(opts)
    if opts.command == "stuffle":
        return cmd_stuffle(opts)
    return cmd_verify(opts)


if __name__ == "__main__":
    sys.exit(main())
