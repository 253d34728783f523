"""Command-line front end.

Exit codes:
  0   EO exists / connected for every b / success
  1   verify found an inconsistency (a bug)
  2   input could not be parsed, or bad arguments
  3   oracle budget or enumeration cap exceeded
  10  no EO / some b disconnects the graph
  20  witness search undecided (m >= 4 and >= 3 residual columns)
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ilsconn import __version__
from ilsconn.elimination import run_algorithm1
from ilsconn.graph import EnumerationCapExceeded, export_dot, solution_graph
from ilsconn.matrix import (
    CoeffMatrix,
    IlsInstance,
    MatrixParseError,
    format_matrix_text,
    format_rational,
    parse_matrix_text,
    parse_vector,
)
from ilsconn.oracle import DEFAULT_BUDGET, BudgetExceeded, connected_for_all_b, witness_failures
from ilsconn.witness import counterexample_matrix, find_witness

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_NEGATIVE = 10
EXIT_UNKNOWN = 20

JSON_SCHEMA = {
    "type": "object",
    "required": ["command", "matrix", "result", "version"],
    "properties": {
        "command": {"enum": ["eo", "witness", "oracle", "graph", "counterexample", "verify"]},
        "matrix": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}},
        },
        "result": {"type": "object"},
        "version": {"type": "string"},
    },
    "additionalProperties": False,
}


class UsageError(Exception):
    pass


def _fmt_vec(v) -> str:
    return "(" + ", ".join(format_rational(Fraction(x)) for x in v) + ")"


def _fmt_set(labels) -> str:
    return "{" + ",".join(str(j) for j in sorted(labels)) + "}"


def _load(args) -> tuple[CoeffMatrix, int]:
    if args.matrix is not None:
        rows = [r for r in args.matrix.split(";") if r.strip()]
        if not rows:
            raise MatrixParseError("inline matrix is empty", 1)
        n = len(rows[0].split())
        body = "\n".join(rows)
        A, d = parse_matrix_text(f"{len(rows)} {n} 1\n{body}")
    elif args.input is None:
        raise UsageError("give a matrix file (or '-' for stdin) or --matrix")
    elif args.input == "-":
        A, d = parse_matrix_text(sys.stdin.read())
    else:
        try:
            with open(args.input) as fh:
                A, d = parse_matrix_text(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    if args.d is not None:
        d = args.d
    return A, d


def _matrix_json(A: CoeffMatrix) -> list[list[str]]:
    return [[format_rational(v) for v in r] for r in A.rows]


def _emit(args, A, result: dict, text: str) -> None:
    if args.format == "json":
        doc = {"command": args.command, "matrix": _matrix_json(A), "result": result, "version": __version__}
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _witness_json(w) -> dict:
    return {
        "rhs": [format_rational(v) for v in w.rhs],
        "p": list(w.p.coords),
        "q": list(w.q.coords),
        "isolated": w.isolated,
        "construction": w.construction,
    }


def cmd_eo(args) -> int:
    A, _ = _load(args)
    res = run_algorithm1(A)
    order = ", ".join(f"{j}({rule.value})" for j, rule in res.order)
    if res.has_eo:
        text = f"EO: yes; order: {order}"
    else:
        text = f"EO: no; Δ = {_fmt_set(res.residual)}; E = {_fmt_set(res.eliminated)}"
        if order:
            text += f"; order: {order}"
    result = {
        "has_eo": res.has_eo,
        "order": [[j, rule.value] for j, rule in res.order],
        "residual": sorted(res.residual),
    }
    _emit(args, A, result, text)
    return EXIT_OK if res.has_eo else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    A, d = _load(args)
    search = find_witness(A, d)
    result = {"status": search.status, "d": d}
    if search.status == "eo":
        text, code = "has EO — none exists", EXIT_OK
    elif search.status == "unknown":
        text = f"unknown (m ≥ 4 and residual ≥ 3 columns: Δ = {_fmt_set(search.elimination.residual)})"
        code = EXIT_UNKNOWN
    else:
        w = search.witness
        fails = witness_failures(A, d, w, args.cap)
        result["witness"] = _witness_json(w)
        result["valid"] = not fails
        text = "\n".join(
            [
                f"construction: {w.construction}",
                f"b: {_fmt_vec(w.rhs)}",
                f"p: {w.p}",
                f"q: {w.q}",
                f"isolated: {w.isolated or '-'}",
                f"validation: {'validated' if not fails else 'FAILED: ' + '; '.join(fails)}",
            ]
        )
        code = EXIT_NEGATIVE
    _emit(args, A, result, text)
    return code


def cmd_oracle(args) -> int:
    A, d = _load(args)
    v = connected_for_all_b(A, d, budget=args.budget, backend=args.backend, cap=args.cap)
    result = {
        "d": d,
        "connected_for_all_b": v.connected_for_all_b,
        "counterexample_b": None if v.counterexample_b is None else [format_rational(x) for x in v.counterexample_b],
        "rhs_count": v.rhs_count,
    }
    if v.connected_for_all_b:
        text = f"connected for all b (d = {d}, {v.rhs_count} canonical b)"
    else:
        text = f"disconnected for b = {_fmt_vec(v.counterexample_b)} (d = {d})"
    _emit(args, A, result, text)
    return EXIT_OK if v.connected_for_all_b else EXIT_NEGATIVE


def cmd_graph(args) -> int:
    A, d = _load(args)
    if args.rhs is None:
        raise UsageError("graph needs --rhs")
    b = parse_vector(args.rhs)
    if len(b) != A.m:
        raise UsageError(f"--rhs has {len(b)} entries, matrix has {A.m} rows")
    g = solution_graph(IlsInstance(A, b, d), args.cap)
    print(f"components: {g.n_components}", file=sys.stderr)
    if args.format == "json":
        result = {
            "d": d,
            "rhs": [format_rational(x) for x in b],
            "vertices": [list(v.coords) for v in g.vertices],
            "edges": [list(e) for e in g.edges],
            "components": g.n_components,
        }
        _emit(args, A, result, "")
    else:
        sys.stdout.write(export_dot(g))
    return EXIT_OK


def cmd_counterexample(args) -> int:
    try:
        A = counterexample_matrix(args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = args.d or 1
    if args.format == "json":
        _emit(args, A, {"m": args.m, "n": args.n, "d": d}, "")
    else:
        sys.stdout.write(format_matrix_text(A, d))
    return EXIT_OK


def cmd_verify(args) -> int:
    A, d = _load(args)
    search = find_witness(A, d)
    problems = []
    if search.status == "witness":
        problems += [f"witness: {f}" for f in witness_failures(A, d, search.witness, args.cap)]
    v = connected_for_all_b(A, d, budget=args.budget, backend=args.backend, cap=args.cap)
    if search.status == "eo" and not v.connected_for_all_b:
        problems.append(f"matrix has an EO but b = {_fmt_vec(v.counterexample_b)} disconnects")
    if search.status == "witness" and v.connected_for_all_b:
        problems.append("witness found but the oracle reports connected for all b")
    if v.counterexample_b is not None:
        g = solution_graph(IlsInstance(A, v.counterexample_b, d), args.cap)
        if g.n_components < 2:
            problems.append("oracle counterexample does not reproduce")
    verdict = "PASS" if not problems else "FAIL"
    lines = [
        f"{verdict}: search = {search.status}, oracle = "
        + ("connected for all b" if v.connected_for_all_b else f"disconnected at b = {_fmt_vec(v.counterexample_b)}")
        + f" (d = {d})"
    ]
    lines += [f"  {p}" for p in problems]
    result = {
        "d": d,
        "verdict": verdict,
        "status": search.status,
        "connected_for_all_b": v.connected_for_all_b,
        "problems": problems,
    }
    _emit(args, A, result, "\n".join(lines))
    return EXIT_OK if not problems else EXIT_FAIL


def _add_input(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("input", nargs="?", help="matrix file ('-' reads stdin)")
    p.add_argument("--matrix", help="inline matrix, rows separated by ';', e.g. '1 -1; -1 1'")
    p.add_argument("--d", type=int, help="domain bound; overrides the file header")
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle feasibility-check budget")
    p.add_argument("--cap", type=int, default=10**7, help="enumeration cap on (d+1)^n")
    p.add_argument("--backend", choices=("cython", "python"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ilsconn", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    _add_input(sub.add_parser("eo", help="decide EO existence (greedy elimination)"))
    _add_input(sub.add_parser("witness", help="construct a disconnecting right-hand side"))
    _add_input(sub.add_parser("oracle", help="exhaustively check connectivity for every b"))
    g = sub.add_parser("graph", help="solution graph for one b as DOT")
    _add_input(g, formats=("dot", "json"))
    g.set_defaults(format="dot")
    g.add_argument("--rhs", help="right-hand side, comma separated")
    c = sub.add_parser("counterexample", help="zero-padded 4x3 matrix without EO, connected for all b")
    c.add_argument("m", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--d", type=int, default=None)
    c.add_argument("--format", choices=("text", "json"), default="text")
    _add_input(sub.add_parser("verify", help="cross-check witness search against the oracle"))
    return parser


COMMANDS = {
    "eo": cmd_eo,
    "witness": cmd_witness,
    "oracle": cmd_oracle,
    "graph": cmd_graph,
    "counterexample": cmd_counterexample,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if getattr(args, "d", None) is not None and args.d < 1:
        print("error: --d must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    if getattr(args, "budget", 1) <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
