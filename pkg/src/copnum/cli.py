"""Command-line front end: graph export, exact solving, simulation, verification.

Exit codes: 0 success, 2 invalid input, 3 state budget exhausted,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import analysis
from .board import (
    BoardGraph,
    build_animal,
    build_royal,
    components,
    parse_dirs,
    preset,
    to_dot,
    to_json,
)
from .errors import (
    AdjudicationError,
    BudgetExceeded,
    ConstructionError,
    FitError,
    UnsupportedModeError,
)
from .solver import cop_number, solve_k
from .strategies import make_strategy, simulate, summary_csv

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4

# option name -> converter, for values that may also come from a config file
CONFIG_KEYS = {
    "piece": str,
    "mode": str,
    "dirs": str,
    "n": int,
    "k": int,
    "budget": int,
    "threads": int,
    "format": str,
    "out": str,
    "cops": str,
    "robber": str,
    "cap": int,
    "cop_start": str,
    "robber_start": str,
    "rows": str,
    "symmetry": lambda v: str(v).lower() in ("1", "true", "yes", "on"),
    "timing": lambda v: str(v).lower() in ("1", "true", "yes", "on"),
}


class InputError(ValueError):
    pass


def read_config(path: str) -> dict:
    """Flat ``key = value`` file; blank lines and ``#`` comments are ignored."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise InputError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return out


def _merge(args: argparse.Namespace, config: dict) -> argparse.Namespace:
    """Fill options left unset on the command line from the config file."""
    for key, value in config.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    return args


def _board(args) -> BoardGraph:
    if args.n is None:
        raise InputError("board size --n is required")
    if args.piece:
        return preset(args.piece, args.n)
    if not args.dirs:
        raise InputError("give --piece or --mode with --dirs")
    dirs = parse_dirs(args.dirs)
    mode = args.mode or "royal"
    if mode == "royal":
        return build_royal(args.n, dirs)
    if mode == "animal":
        return build_animal(args.n, dirs)
    raise InputError(f"unknown mode {mode!r}; choose royal or animal")


def _squares(g: BoardGraph, text: str) -> list[int]:
    out = []
    for x, y in parse_dirs(text):
        if not g.on_board(x, y):
            raise InputError(f"square ({x},{y}) is off the {g.n}x{g.n} board")
        out.append(g.vid(x, y))
    if not out:
        raise InputError(f"no squares in {text!r}")
    return out


def _parse_strategy(text: str, side: str, default_k: int | None = None):
    name, _, k = text.partition(":")
    try:
        kk = int(k) if k else default_k
    except ValueError:
        raise InputError(f"bad count in {text!r}") from None
    return make_strategy(name, side, kk)


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_graph(args) -> int:
    g = _board(args)
    fmt = args.format or "json"
    if fmt == "json":
        _emit(args, json.dumps(to_json(g)))
    elif fmt == "dot":
        _emit(args, to_dot(g))
    else:
        raise InputError(f"graph supports json or dot, not {fmt!r}")
    return EXIT_OK


def _solve_json(g, k, args) -> dict:
    res = solve_k(g, k, use_symmetry=bool(args.symmetry), budget=args.budget)
    return res.to_json(g)


def cmd_solve(args) -> int:
    g = _board(args)
    fmt = args.format or "json"
    if fmt not in ("json", "table"):
        raise InputError(f"solve supports json or table, not {fmt!r}")
    if args.k is None:
        report = cop_number(g, budget=args.budget)
        body = report.to_json()
    else:
        parts = components(g)
        if len(parts) == 1:
            body = _solve_json(g, args.k, args)
        else:
            per = []
            for comp in parts:
                sub = g.induced(comp)
                per.append({"size": len(comp), **_solve_json(sub, args.k, args)})
            body = {"k": args.k, "copsWin": all(p["copsWin"] for p in per), "components": per}
    if fmt == "json":
        _emit(args, json.dumps(body))
    else:
        _emit(args, "\n".join(f"{key}\t{json.dumps(value)}" for key, value in body.items()))
    return EXIT_OK


def cmd_simulate(args) -> int:
    g = _board(args)
    if not args.cops or not args.robber:
        raise InputError("simulate needs --cops name:k and --robber name")
    cops = _parse_strategy(args.cops, "cops")
    robber = _parse_strategy(args.robber, "robber", default_k=cops.k)
    cop_start = _squares(g, args.cop_start) if args.cop_start else None
    robber_start = _squares(g, args.robber_start)[0] if args.robber_start else None
    tr = simulate(g, cops, robber, cop_start, robber_start, turn_cap=args.cap or analysis.TURN_CAP)
    fmt = args.format or "json"
    if fmt == "json":
        _emit(args, tr.dumps(g))
    elif fmt == "csv":
        _emit(args, summary_csv([tr.summary_row(g)]))
    else:
        raise InputError(f"simulate supports json or csv, not {fmt!r}")
    return EXIT_OK


def _table(reports) -> str:
    lines = [f"{'check':<20} {'status':<11} detail"]
    for r in reports:
        detail = json.dumps(r.counterexample) if r.counterexample else f"{len(r.rows)} rows"
        lines.append(f"{r.name:<20} {r.status:<11} {detail}")
    lines.append(f"overall: {analysis.overall_status(reports)}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    config = {"threads": args.threads or 1}
    if args.rows:
        config["rows"] = [r.strip() for r in args.rows.split(",") if r.strip()]
    if args.n is not None:
        config["guarding_sizes"] = (args.n,)
    if args.cap:
        config["cap"] = args.cap
    if args.budget is not None:
        # the battery's solves read the budget from the environment
        os.environ["COPNUM_STATE_BUDGET"] = str(args.budget)
    reports = analysis.theorem_suite(config)
    fmt = args.format or "json"
    if fmt == "json":
        _emit(args, analysis.report_json(reports, timing=bool(args.timing)))
    elif fmt == "table":
        _emit(args, _table(reports))
    else:
        raise InputError(f"verify supports json or table, not {fmt!r}")
    return EXIT_VERIFY if analysis.overall_status(reports) == "fail" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value file; command-line flags win")
    common.add_argument("--piece", choices=["king", "knight", "rook", "bishop", "queen"])
    common.add_argument("--mode", choices=["royal", "animal"])
    common.add_argument("--dirs", help='direction set, e.g. "1,0;0,1;1,1"')
    common.add_argument("--n", type=int, help="board size")
    common.add_argument("--budget", type=int, help="state budget (default 2^31 or $COPNUM_STATE_BUDGET)")
    common.add_argument("--threads", type=int, help="worker threads for verification (1 = sequential)")
    common.add_argument("--format", help="output format")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="copnum", description="Cops and robbers on chess, royal and animal graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("graph", parents=[common], help="export a board graph (json or dot)")

    s = sub.add_parser("solve", parents=[common], help="exact game value for k cops, or the cop number")
    s.add_argument("--k", type=int, help="number of cops (omit for the per-component cop number)")
    s.add_argument("--symmetry", action="store_const", const=True, help="search starts up to board symmetry")

    m = sub.add_parser("simulate", parents=[common], help="play two strategies against each other")
    m.add_argument("--cops", help="cop strategy as name:k, e.g. greedy:3")
    m.add_argument("--robber", help="robber strategy name, optionally name:k for the opposing cop count")
    m.add_argument("--cap", type=int, help="turn cap (default 500)")
    m.add_argument("--cop-start", dest="cop_start", help='cop squares, e.g. "3,3;4,4"')
    m.add_argument("--robber-start", dest="robber_start", help='robber square, e.g. "1,1"')

    v = sub.add_parser("verify", parents=[common], help="run the verification battery")
    v.add_argument("--rows", help=f"comma-separated sections: {', '.join(analysis.SECTIONS)}")
    v.add_argument("--cap", type=int, help="turn cap for simulation rows")
    v.add_argument("--timing", action="store_const", const=True, help="include per-section timings")
    return p


COMMANDS = {"graph": cmd_graph, "solve": cmd_solve, "simulate": cmd_simulate, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        if args.config:
            args = _merge(args, read_config(args.config))
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"copnum: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, ConstructionError, FitError, UnsupportedModeError, AdjudicationError, ValueError, OSError) as exc:
        print(f"copnum: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
