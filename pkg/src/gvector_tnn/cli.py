"""Command-line interface.

Exit codes: 0 success / property holds, 1 property violated (report on
stdout), 2 usage error.  JSON output is wrapped in an envelope
``{"kind", "payload", "meta": {"version", "command"}}`` and every
mathematical value is a decimal string.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .exact import ExactMatrix
from .genfun import closed_form_check, identity1_check, identity2_check, ode_residual_f, ode_residual_g
from .matrices import (DimensionContext, Parity, build_a, build_cap_gamma_factor, build_g_factor,
                       build_g_from_gamma, build_m_g, build_m_gamma, verify_factorization)
from .tnn import all_minors_nonnegative
from .vectors import (catalogue, check_dehn_somerville, f_from_g, f_from_gamma, f_from_h,
                      g_from_gamma, g_from_h, h_from_g)

MATRIX_KINDS = ("g", "gamma", "a+", "a-", "g+", "g-", "cap-gamma", "g-from-gamma")


class UsageError(Exception):
    pass


def matrix_for(kind: str, d: int) -> ExactMatrix:
    ctx = DimensionContext.of(d)
    builders = {
        "g": lambda: build_m_g(d),
        "gamma": lambda: build_m_gamma(d),
        "a+": lambda: build_a(Parity.PLUS, d + 1, ctx.n + 1),
        "a-": lambda: build_a(Parity.MINUS, d + 1, ctx.n + 1),
        "g+": lambda: build_g_factor(Parity.PLUS, ctx.n),
        "g-": lambda: build_g_factor(Parity.MINUS, ctx.n),
        "cap-gamma": lambda: build_cap_gamma_factor(ctx.n),
        "g-from-gamma": lambda: build_g_from_gamma(d),
    }
    return builders[kind]()


def _s(x) -> str:
    return str(Fraction(x))


def matrix_payload(m: ExactMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[_s(e) for e in m.row(i)] for i in range(m.rows)]}


def matrix_from_payload(payload: dict) -> ExactMatrix:
    return ExactMatrix.from_rows([[Fraction(e) for e in row] for row in payload["entries"]]) \
        if payload["rows"] else ExactMatrix.zeros(0, payload["cols"])


def _plain(rows: list[list[str]]) -> str:
    width = max((len(e) for r in rows for e in r), default=1)
    return "\n".join(" ".join(e.rjust(width) for e in r) for r in rows)


def _envelope(kind: str, payload, argv) -> str:
    return json.dumps({"kind": kind, "payload": payload,
                       "meta": {"version": __version__, "command": " ".join(argv)}},
                      indent=2)


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _values(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gvector-tnn",
                                description="Exact face-number matrices and total non-negativity checks.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matrix", help="print a matrix window for dimension d")
    m.add_argument("--kind", choices=MATRIX_KINDS, required=True)
    m.add_argument("--dim", type=_natural, required=True)
    m.add_argument("--format", choices=("json", "csv", "plain"), default="json")

    c = sub.add_parser("convert", help="convert between f-, g-, h- and gamma-vectors")
    c.add_argument("--from", dest="source", choices=("g", "gamma", "h"), required=True)
    c.add_argument("--to", dest="target", choices=("f", "g", "h"), required=True)
    c.add_argument("--dim", type=_natural, required=True)
    c.add_argument("--values", type=_values, required=True)
    c.add_argument("--format", choices=("json", "csv", "plain"), default="json")

    k = sub.add_parser("check", help="verify a property; exit 1 with a report if it fails")
    k.add_argument("what", choices=("factorization", "tnn", "identity1", "identity2",
                                    "genfun", "dehn-somerville"))
    k.add_argument("--dim", type=_natural)
    k.add_argument("--n", type=_natural)
    k.add_argument("--a", type=_natural)
    k.add_argument("--kind", choices=MATRIX_KINDS, default="g")
    k.add_argument("--max-order", type=_positive)
    k.add_argument("--workers", type=_positive)
    k.add_argument("--values", type=_values)

    g = sub.add_parser("catalogue", help="face data of a named polytope")
    g.add_argument("name", choices=("simplex", "cube", "polygon"))
    g.add_argument("--dim", type=_natural)
    g.add_argument("--vertices", type=int)
    return p


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def _emit_vector(name: str, d: int, values, fmt: str, argv) -> str:
    strs = [_s(v) for v in values]
    if fmt == "json":
        return _envelope("vector", {"d": d, "name": name, "values": strs}, argv)
    return ",".join(strs) if fmt == "csv" else " ".join(strs)


def cmd_matrix(args, argv) -> tuple[int, str]:
    mat = matrix_for(args.kind, args.dim)
    if args.format == "json":
        return 0, _envelope("matrix", {"kind": args.kind, "d": args.dim, **matrix_payload(mat)}, argv)
    rows = [[_s(e) for e in mat.row(i)] for i in range(mat.rows)]
    if args.format == "csv":
        return 0, "\n".join(",".join(r) for r in rows)
    return 0, _plain(rows)


def cmd_convert(args, argv) -> tuple[int, str]:
    d, vals = args.dim, args.values
    src, dst = args.source, args.target
    if src == dst:
        raise UsageError(f"nothing to convert: {src} -> {dst}")
    if src == "gamma":
        g = g_from_gamma(d, vals)
    elif src == "h":
        g = g_from_h(d, vals)
    else:
        g = vals
    if dst == "f":
        if src == "gamma":
            out = f_from_gamma(d, vals)
        elif src == "h":
            out = f_from_h(d, vals)
        else:
            out = f_from_g(d, g)
    elif dst == "h":
        out = h_from_g(d, g)
    else:
        out = g
    return 0, _emit_vector(dst, d, out, args.format, argv)


def cmd_check(args, argv) -> tuple[int, str]:
    what = args.what
    if what == "factorization":
        _need(args, "dim")
        rep = verify_factorization(args.dim)
        payload = {"d": rep.d, "holds": rep.holds, "checks": [
            {"name": c.name, "holds": c.holds,
             "first_difference": None if c.first_difference is None else {
                 "row": c.first_difference[0], "col": c.first_difference[1],
                 "lhs": _s(c.first_difference[2]), "rhs": _s(c.first_difference[3])}}
            for c in rep.checks]}
        return (0 if rep.holds else 1), _envelope("report", payload, argv)
    if what == "tnn":
        _need(args, "dim")
        verdict = all_minors_nonnegative(matrix_for(args.kind, args.dim),
                                         max_order=args.max_order, workers=args.workers)
        payload = {"kind": args.kind, "d": args.dim, "max_order": args.max_order, **verdict.to_dict()}
        return (0 if verdict.holds else 1), _envelope("verdict", payload, argv)
    if what in ("identity1", "identity2"):
        _need(args, "n")
        rep = (identity1_check if what == "identity1" else identity2_check)(args.n)
        return (0 if rep.holds else 1), _envelope("report", rep.to_dict(), argv)
    if what == "genfun":
        _need(args, "a")
        a = args.a
        printed = ode_residual_f(a, "printed")
        payload = {
            "a": a,
            "closed_form": closed_form_check(a),
            "ode_g_residual": str(ode_residual_g(a)),
            "ode_f_corrected_residual": str(ode_residual_f(a, "corrected")),
            "ode_f_printed_residual": str(printed),
        }
        ok = (payload["closed_form"] and ode_residual_g(a).is_zero()
              and ode_residual_f(a, "corrected").is_zero())
        payload["holds"] = ok
        return (0 if ok else 1), _envelope("report", payload, argv)
    # dehn-somerville
    _need(args, "dim", "values")
    ok = check_dehn_somerville(args.dim, args.values)
    payload = {"d": args.dim, "f": [_s(v) for v in args.values], "holds": ok}
    return (0 if ok else 1), _envelope("report", payload, argv)


def cmd_catalogue(args, argv) -> tuple[int, str]:
    if args.name == "polygon":
        _need(args, "vertices")
        entry = catalogue("polygon", m=args.vertices)
    else:
        _need(args, "dim")
        entry = catalogue(args.name, d=args.dim)
    payload = {
        "name": entry.name, "parameters": entry.parameters, "d": entry.d,
        "g": [_s(v) for v in entry.g],
        "gamma": None if entry.gamma is None else [_s(v) for v in entry.gamma],
        "f": [_s(v) for v in entry.expected_f],
    }
    if entry.note:
        payload["note"] = entry.note
    return 0, _envelope("report", payload, argv)


COMMANDS = {"matrix": cmd_matrix, "convert": cmd_convert, "check": cmd_check,
            "catalogue": cmd_catalogue}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)  # exits 2 on bad usage
    try:
        code, text = COMMANDS[args.command](args, argv)
    except (UsageError, ValueError) as exc:
        print(f"gvector-tnn: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
