"""Command-line front end.

Exit codes:
    0  success
    1  the game file could not be parsed
    2  the game violates an invariant, or bad command-line usage
    3  ``check`` found an axiom failure that is not documented as expected
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import coalitions as co
from .errors import GameError, GameFileError
from .exit_rules import RULES, effective_stop
from .game import as_rational, moebius_decompose, recompose
from .gamefile import dump_game, format_rational, parse_game
from .verification import (
    GeneratorConfig,
    check_indicator_axioms,
    check_value_axioms,
    random_game,
    random_game_alpha,
)
from .values import staged_value

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_AXIOM = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _approx(x: Fraction) -> str:
    return f"{float(x):.4f}"


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) if c == 0 else cell.rjust(w) for c, (cell, w) in enumerate(zip(r, widths)))
        for r in rows
    )


def _matrix_rows(columns, fmt) -> list[list[str]]:
    n = len(columns[0])
    rows = [["stage"] + [str(k) for k in range(len(columns))]]
    for i in range(n):
        rows.append([f"player {i + 1}"] + [fmt(col[i]) for col in columns])
    return rows


def cmd_solve(args) -> int:
    game, profile = parse_game(_read(args.game_file))
    phi = staged_value(game, profile)
    trace = None
    final = None
    if args.rule != "none":
        trace = effective_stop(RULES[args.rule](game, profile))
        final = phi.column(trace.examinations_performed)

    out = sys.stdout
    if args.format == "json":
        doc = {
            "players": game.n,
            "order": [co.format_key(s) for s in profile.order],
            "stages": [[format_rational(x) for x in col] for col in phi.columns],
            "trace": None
            if trace is None
            else {
                "rule": args.rule,
                "raw": list(trace.raw),
                "stop_stage": trace.stop_stage,
                "examinations_performed": trace.examinations_performed,
            },
            "final": None if final is None else [format_rational(x) for x in final],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        header = ["player"] + [str(k) for k in range(phi.stages)]
        if final is not None:
            header.append("final")
        writer.writerow(header)
        for i in range(game.n):
            row = [i + 1] + [format_rational(x) for x in phi.row(i)]
            if final is not None:
                row.append(format_rational(final[i]))
            writer.writerow(row)
    else:
        order = ", ".join("{%s}" % co.format_key(s) for s in profile.order) or "(none)"
        out.write(f"examination order: {order}\n\n")
        out.write(_grid(_matrix_rows(phi.columns, str)) + "\n\n")
        out.write("approximate, 4 decimal places:\n")
        out.write(_grid(_matrix_rows(phi.columns, _approx)) + "\n")
        if trace is not None:
            stop = "none" if trace.stop_stage is None else str(trace.stop_stage)
            out.write(
                f"\nrule {args.rule}: raw flags {' '.join(map(str, trace.raw)) or '(empty)'};"
                f" stop stage {stop}; {trace.examinations_performed} examination(s)\n"
            )
            out.write(
                f"final payoffs (stage {trace.examinations_performed}): "
                + ", ".join(str(x) for x in final)
                + "\n"
            )
    return EXIT_OK


def cmd_decompose(args) -> int:
    game, _ = parse_game(_read(args.game_file))
    coeffs = moebius_decompose(game)
    keys = co.by_size(coeffs)
    verified = None
    if args.verify:
        verified = recompose(game.n, coeffs) == game
    out = sys.stdout
    if args.format == "json":
        doc = {"coefficients": {co.format_key(s): format_rational(coeffs[s]) for s in keys}}
        if verified is not None:
            doc["verified"] = verified
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["coalition", "coefficient"])
        for s in keys:
            writer.writerow([co.format_key(s), format_rational(coeffs[s])])
    else:
        rows = [["coalition", "coefficient", "approx"]]
        rows += [["{%s}" % co.format_key(s), str(coeffs[s]), _approx(coeffs[s])] for s in keys]
        out.write(_grid(rows) + "\n")
        if verified is not None:
            out.write(f"round-trip: {'ok' if verified else 'MISMATCH'}\n")
    if verified is False:
        print("recomposed game differs from the input", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_check(args) -> int:
    config = GeneratorConfig(n=args.n, seed=args.seed)
    reports = []
    if args.suite in ("values", "all"):
        reports.append(check_value_axioms(args.trials, config))
    if args.suite in ("indicators", "all"):
        reports.append(check_indicator_axioms(args.trials, config, args.alpha))
    if args.format == "json":
        json.dump([r.to_json() for r in reports], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n\n".join(r.render() for r in reports) + "\n")
    failed = False
    for report in reports:
        for name in report.unexpected_failures:
            failed = True
            ce = report[name].counterexample
            print(f"unexpected failure of {name}; replayable game file:", file=sys.stderr)
            print(json.dumps(ce["game"], indent=2), file=sys.stderr)
            if "other" in ce:
                print("second game of the pair:", file=sys.stderr)
                print(json.dumps(ce["other"], indent=2), file=sys.stderr)
    return EXIT_AXIOM if failed else EXIT_OK


def cmd_gen(args) -> int:
    config = GeneratorConfig(
        n=args.n,
        seed=args.seed,
        zero_probability=args.zero_prob,
        structured=args.structured,
    )
    if args.alpha is None:
        game, profile = random_game(config)
    else:
        game, profile = random_game_alpha(config, args.alpha)
    sys.stdout.write(dump_game(game, profile))
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _player_count(text: str) -> int:
    value = int(text)
    if not 2 <= value <= 16:
        raise argparse.ArgumentTypeError(f"must be in 2..16, got {value}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {value}")
    return value


def _positive_rational(text: str) -> Fraction:
    try:
        value = as_rational(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pdgcost", description="Partially defined games with examination costs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="stage-by-stage payoff matrix and exit trace")
    p.add_argument("game_file", help="game file, or - for standard input")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--rule", choices=(*RULES, "none"), default="none")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decompose", help="unanimity-game coefficients")
    p.add_argument("game_file", help="game file, or - for standard input")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--verify", action="store_true", help="recompose and compare with the input")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", help="run the axiom suites on random games")
    p.add_argument("--suite", choices=("values", "indicators", "all"), default="all")
    p.add_argument("--trials", type=_positive_int, default=200)
    p.add_argument("--n", type=_player_count, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=_positive_rational, default=Fraction(20))
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a random game file to standard output")
    p.add_argument("--n", type=_player_count, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero-prob", type=_probability, default=0.25)
    p.add_argument("--alpha", type=_positive_rational, default=None)
    p.add_argument("--structured", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GameFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GameError as exc:
        print(f"invalid game ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
