"""Command line surface: every computation behind one verb, text or JSON out.

Output is deterministic byte-for-byte for fixed arguments: polynomial terms
print in descending lexicographic order, rationals in lowest terms ("p/q" or
a bare integer), and JSON uses a fixed two-space indent.  Exit codes: 0 on
success, 1 on usage errors, 2 on domain errors raised by the library, 3 when
a requested verification fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .companion import (
    CorePolynomial,
    companion_matrix,
    companion_window,
    dense_det,
    different_matrix,
    different_window,
)
from .hessenberg import build_minus, build_plus
from .multiplicative import dirichlet_convolve_local, known_function, local_power
from .polynomials import IsobaricPoly, WeightVector, convolve, wip_closed
from .roots import (
    gfp_root_closed,
    gfp_root_matrix,
    gfp_root_sequence,
    gfp_root_stirling_matrix,
    wip_root,
)
from .verify import run_suites

__all__ = ["main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract wants 1, so
    # errors are rethrown and handled in main().
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _weights(text: str) -> WeightVector:
    if text == "id":
        return WeightVector.naturals()
    try:
        return WeightVector.from_values([Fraction(p.strip()) for p in text.split(",")])
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad weight list: {text!r}") from exc


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational list: {text!r}") from exc


_ROWS_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _rows(text: str) -> tuple[int, int]:
    m = _ROWS_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"row range must look like 'a..b', got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _build_parser() -> _Parser:
    parser = _Parser(prog="iso", description="Weighted isobaric polynomials, exactly.")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def add(name: str, help_: str) -> _Parser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("wip", "weighted isobaric polynomial of one degree")
    p.add_argument("--weights", type=_weights, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", dest="at", type=_rational_list, default=None, metavar="T1,T2,...")

    for name, help_ in (("gfp", "generalized Fibonacci polynomial"), ("glp", "generalized Lucas polynomial")):
        p = add(name, help_)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--eval", dest="at", type=_rational_list, default=None, metavar="T1,T2,...")

    p = add("hessenberg", "matrix representation and its value")
    p.add_argument("--weights", type=_weights, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sign", choices=("plus", "minus"), default="minus")

    p = add("root-gfp", "rational convolution power of the Fibonacci family")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "det", "perm", "stirling"), default="formula")
    p.add_argument("--eval", dest="at", type=_rational_list, default=None, metavar="T1,T2,...")

    p = add("root-wip", "rational convolution power of a weighted family")
    p.add_argument("--weights", type=_weights, required=True)
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", dest="at", type=_rational_list, default=None, metavar="T1,T2,...")

    p = add("conv", "one degree of the convolution of two Fibonacci powers")
    p.add_argument("--q1", type=_rational, required=True)
    p.add_argument("--q2", type=_rational, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", dest="at", type=_rational_list, default=None, metavar="T1,T2,...")

    p = add("companion", "companion matrix or a window of its row orbit")
    p.add_argument("--core", type=_rational_list, default=None, metavar="T1,...,TK")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--rows", type=_rows, default=None, metavar="A..B")

    p = add("different", "different matrix, its determinant, or its row orbit")
    p.add_argument("--core", type=_rational_list, default=None, metavar="T1,...,TK")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--rows", type=_rows, default=None, metavar="A..B")
    p.add_argument("--det", action="store_true")

    p = add("mf", "multiplicative function values at prime powers")
    p.add_argument("--fn", required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--N", type=int, required=True)

    p = add("mf-root", "rational Dirichlet power of a multiplicative function")
    p.add_argument("--fn", required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--verify", type=int, default=None, metavar="M")

    p = add("verify", "run self-check suites")
    p.add_argument(
        "--suite",
        choices=("partitions", "hessenberg", "roots", "companion", "mf", "all"),
        default="all",
    )
    p.add_argument("--max-n", type=int, default=6, dest="max_n")

    return parser


# -- rendering -------------------------------------------------------------


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _poly_out(poly: IsobaricPoly, at, fmt: str) -> None:
    if at is not None:
        value = poly.evaluate(at)
        if fmt == "json":
            _print_json({"value": str(value)})
        else:
            print(value)
    elif fmt == "json":
        _print_json(poly.to_json_dict())
    else:
        print(poly)


def _grid(rows: list[list[str]], labels: list[str] | None = None) -> str:
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    lines = []
    lwidth = max((len(l) for l in labels), default=0) if labels else 0
    for i, r in enumerate(rows):
        body = "  ".join(s.rjust(w) for s, w in zip(r, widths))
        if labels:
            lines.append(f"{labels[i].rjust(lwidth)}  {body}")
        else:
            lines.append(body)
    return "\n".join(lines)


def _entry_json(e):
    return str(e) if isinstance(e, Fraction) else e.to_json_dict()


def _matrix_out(mat, fmt: str, k: int) -> None:
    if fmt == "json":
        _print_json({"k": k, "cells": [[_entry_json(e) for e in row] for row in mat]})
    else:
        print(_grid([[str(e) for e in row] for row in mat]))


def _window_out(win, fmt: str) -> None:
    ns = list(range(win.n_lo, win.n_hi + 1))
    if fmt == "json":
        _print_json(
            {
                "k": win.k,
                "n_lo": win.n_lo,
                "n_hi": win.n_hi,
                "rows": [{"n": n, "cells": [_entry_json(e) for e in win.row(n)]} for n in ns],
            }
        )
    else:
        rows = [[str(e) for e in win.row(n)] for n in ns]
        print(_grid(rows, labels=[f"row {n}:" for n in ns]))


def _core_from_args(args) -> CorePolynomial:
    if args.core is not None:
        if args.k is not None and args.k != len(args.core):
            raise ValueError(f"--k {args.k} disagrees with a {len(args.core)}-coefficient core")
        return CorePolynomial.numeric(args.core)
    if args.k is None:
        raise ValueError("need --core or --k")
    return CorePolynomial.generic(args.k)


# -- dispatch --------------------------------------------------------------


def _run(args) -> int:
    verb = args.verb
    if verb == "wip":
        _poly_out(wip_closed(args.weights, args.k, args.n), args.at, args.format)
    elif verb == "gfp":
        _poly_out(wip_closed(WeightVector.ones(), args.k, args.n, degree_zero=1), args.at, args.format)
    elif verb == "glp":
        _poly_out(wip_closed(WeightVector.naturals(), args.k, args.n, degree_zero=args.k), args.at, args.format)
    elif verb == "hessenberg":
        build = build_plus if args.sign == "plus" else build_minus
        matrix = build(args.weights, args.k, args.n)
        value = matrix.value()
        if args.format == "json":
            _print_json({"matrix": matrix.to_json_dict(), "value": value.to_json_dict()})
        else:
            print(matrix.text_grid())
            print(f"value: {value}")
    elif verb == "root-gfp":
        if args.method == "formula":
            poly = gfp_root_closed(args.q, args.k, args.n)
        elif args.method == "det":
            poly = gfp_root_matrix(args.q, args.k, args.n, -1).value()
        elif args.method == "perm":
            poly = gfp_root_matrix(args.q, args.k, args.n, +1).value()
        else:
            poly = gfp_root_stirling_matrix(args.q, args.k, args.n).value()
        _poly_out(poly, args.at, args.format)
    elif verb == "root-wip":
        _poly_out(wip_root(args.weights, args.k, args.n, args.q), args.at, args.format)
    elif verb == "conv":
        poly = convolve(gfp_root_sequence(args.q1, args.k), gfp_root_sequence(args.q2, args.k), args.n)
        _poly_out(poly, args.at, args.format)
    elif verb == "companion":
        core = _core_from_args(args)
        if args.rows is None:
            _matrix_out(companion_matrix(core), args.format, core.k)
        else:
            _window_out(companion_window(core, *args.rows), args.format)
    elif verb == "different":
        core = _core_from_args(args)
        if args.rows is not None:
            _window_out(different_window(core, *args.rows), args.format)
        else:
            mat = different_matrix(core)
            if args.det:
                det = dense_det(mat)
                if args.format == "json":
                    _print_json({"det": _entry_json(det)})
                else:
                    print(f"det: {det}")
            else:
                _matrix_out(mat, args.format, core.k)
    elif verb == "mf":
        f = known_function(args.fn, args.p, args.N)
        if args.format == "json":
            _print_json({"fn": f.label, "p": args.p, "values": [str(v) for v in f.values]})
        else:
            print(f.format_values())
    elif verb == "mf-root":
        f = known_function(args.fn, args.p, args.N)
        root = local_power(f, args.q)
        verified: bool | None = None
        if args.verify is not None:
            if args.verify < 1:
                raise ValueError("--verify takes a fold count >= 1")
            acc = root
            for _ in range(args.verify - 1):
                acc = dirichlet_convolve_local(acc, root)
            verified = acc == f
        if args.format == "json":
            payload = {"fn": f.label, "p": args.p, "q": str(args.q), "values": [str(v) for v in root.values]}
            if verified is not None:
                payload["verify"] = "PASS" if verified else "FAIL"
            _print_json(payload)
        else:
            print(root.format_values())
            if verified is not None:
                print(f"verify: {'PASS' if verified else 'FAIL'}")
        if verified is False:
            return 3
    elif verb == "verify":
        results = run_suites(args.suite, args.max_n)
        code = 0 if all(ok for _, ok, _ in results) else 3
        if args.format == "json":
            _print_json(
                {
                    "results": [
                        {"suite": name, "ok": ok, "detail": detail}
                        for name, ok, detail in results
                    ]
                }
            )
        else:
            for name, ok, detail in results:
                if ok:
                    print(f"PASS {name}")
                else:
                    print(f"FAIL {name}: {detail}")
        return code
    else:
        raise _UsageError("pick a verb (see --help)")
    return 0


def _join_dashed_values(argv: list[str]) -> list[str]:
    # argparse reads "-2..4" as a flag; fold such values into "--opt=value"
    # so row ranges and negative rationals survive.
    out: list[str] = []
    joinable = {"--rows", "--q", "--q1", "--q2", "--core", "--eval", "--weights"}
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in joinable and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_dashed_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    try:
        return _run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
