"""Command line entry point: ``schubgl <command> ...``.

Exit codes: 0 success, 1 mathematical domain error, 2 unparsable input,
3 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, TextIO

from .exactpoly import LaurentWindow, Poly
from .partitions import Partition
from .schubert_ops import (GlMatrix, act_elementary, act_matrix, action_box_form, action_first_form,
                           gamma, gamma_star)
from .symfunc import ParseError, SchurExpansion, parse_element, project, straighten
from .verify import SUITES, GridParams, run_suites

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ParseError(f"{self.prog}: {message}")


def _element_args(p: argparse.ArgumentParser, with_n: bool = True) -> None:
    p.add_argument("--r", type=int, required=True, help="number of e-generators")
    if with_n:
        p.add_argument("--n", type=int, help="work in B_{r,n} instead of B_r")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--schur", help="partition such as 2,1 (0 for the empty one)")
    src.add_argument("--expr", help="polynomial in e1..er and h1, h2, ...")


def _format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schubgl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("act", help="apply E_ij to an element")
    _element_args(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    _format_arg(p)

    p = sub.add_parser("series", help="coefficients of E(z,w) applied to an element")
    _element_args(p)
    p.add_argument("--z-max", type=int, help="highest power of z (default n-1, or 6 without --n)")
    p.add_argument("--w-span", type=int, help="lowest power of w is -w_span (default z_max)")
    _format_arg(p)

    p = sub.add_parser("gamma", help="vertex operator Gamma_r(z), or Gamma*_r(w) with --star")
    _element_args(p, with_n=False)
    p.add_argument("--z-max", type=int, default=6)
    p.add_argument("--star", action="store_true")
    _format_arg(p)

    p = sub.add_parser("matrix-act", help="apply an integer matrix read from a JSON file")
    _element_args(p)
    p.add_argument("--matrix", required=True, help='JSON file {"n", "entries": [{"i","j","a"}]}, or - for stdin')
    _format_arg(p)

    p = sub.add_parser("straighten", help="rewrite an expression in the Schur basis")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--expr", required=True)
    _format_arg(p)

    p = sub.add_parser("verify", help="run the consistency grids")
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--seed", type=int, default=GridParams.seed)
    p.add_argument("--samples", type=int, default=GridParams.samples)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--suite", action="append", choices=list(SUITES), help="repeatable; default all")
    return parser


# -- input ---------------------------------------------------------------------

def _check_ring(r: int, n: int | None) -> None:
    if r < 0:
        raise ValueError("r must be non-negative")
    if n is not None and n < r:
        raise ValueError(f"n={n} must be at least r={r}")


def _element(args) -> SchurExpansion:
    n = getattr(args, "n", None)
    _check_ring(args.r, n)
    if args.schur is not None:
        return SchurExpansion.basis(Partition.parse(args.schur), args.r, n)
    x = straighten(parse_element(args.expr, args.r), args.r)
    return x if n is None else project(x, n)


def _read_matrix(path: str, stdin: TextIO) -> GlMatrix:
    try:
        text = stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return GlMatrix.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad matrix file {path}: {exc}") from None


# -- output --------------------------------------------------------------------

def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _monomial_text(p: int, q: int) -> str:
    return " ".join(s for s in (f"z^{p}" if p else "", f"w^{q}" if q else "") if s) or "1"


def _series_text(u: LaurentWindow) -> str:
    lo, hi, wlo, whi = u.window
    lines = [f"window: z^{lo}..z^{hi if hi is not None else 'inf'}, "
             f"w^{wlo if wlo is not None else '-inf'}..w^{whi}"]
    lines += [f"{_monomial_text(p, q)}: {c.to_text()}" for (p, q), c in u.items()]
    return "\n".join(lines)


def _emit_element(x: SchurExpansion, fmt: str, header: dict) -> str:
    poly = x.to_poly()
    if fmt == "json":
        return dump_json({**header, "result": x.to_json(), "e_poly": poly.to_json()})
    if fmt == "latex":
        return f"{x.to_latex()} = {poly.to_latex()}"
    schur = "{" + ", ".join(f"{lam}: {c}" for lam, c in x.items()) + "}"
    return f"schur: {schur}\ne-poly: {poly.to_text()}"


def _emit_series(u: LaurentWindow, fmt: str, header: dict) -> str:
    if fmt == "json":
        return dump_json({**header, "series": u.to_json()})
    if fmt == "latex":
        return u.to_latex()
    return _series_text(u)


# -- commands ------------------------------------------------------------------

def series_of(x: SchurExpansion, z_max: int, w_span: int) -> LaurentWindow:
    """``E(z,w)`` applied to ``x`` through ``z^z_max`` and ``w^-w_span``."""
    total = LaurentWindow({}, Poly.zero(x.r), (0, z_max, -w_span, 0))
    for lam, c in x.coeffs.items():
        if x.n is None:
            term = action_first_form(lam, x.r, z_max, w_span)
        else:
            term = action_box_form(lam, x.r, x.n)
        total = total + term.restrict(z_max=z_max, w_min=-w_span) * c
    return total.restrict(z_max=z_max, w_min=-w_span)


def _cmd_act(args, out: TextIO, stdin: TextIO) -> int:
    x = _element(args)
    y = act_elementary(args.i, args.j, x)
    header = {"command": "act", "r": args.r, "n": args.n, "i": args.i, "j": args.j, "input": x.to_json()}
    print(_emit_element(y, args.format, header), file=out)
    return EXIT_OK


def _cmd_series(args, out: TextIO, stdin: TextIO) -> int:
    x = _element(args)
    if args.z_max is None:
        z_max = 6 if x.n is None else x.n - 1
    else:
        z_max = args.z_max
    w_span = z_max if args.w_span is None else args.w_span
    if z_max < 0 or w_span < 0:
        raise ValueError("window bounds must be non-negative")
    u = series_of(x, z_max, w_span)
    header = {"command": "series", "r": args.r, "n": args.n, "input": x.to_json()}
    print(_emit_series(u, args.format, header), file=out)
    return EXIT_OK


def _cmd_gamma(args, out: TextIO, stdin: TextIO) -> int:
    x = _element(args)
    u = gamma_star(x) if args.star else gamma(x, args.z_max)
    header = {"command": "gamma", "r": args.r, "star": args.star, "input": x.to_json()}
    print(_emit_series(u, args.format, header), file=out)
    return EXIT_OK


def _cmd_matrix_act(args, out: TextIO, stdin: TextIO) -> int:
    A = _read_matrix(args.matrix, stdin)
    if args.n is None:
        args.n = A.n
    x = _element(args)
    y = act_matrix(A, x)
    header = {"command": "matrix-act", "r": args.r, "n": args.n, "matrix": A.to_json(), "input": x.to_json()}
    print(_emit_element(y, args.format, header), file=out)
    return EXIT_OK


def _cmd_straighten(args, out: TextIO, stdin: TextIO) -> int:
    _check_ring(args.r, args.n)
    x = straighten(parse_element(args.expr, args.r), args.r)
    if args.n is not None:
        x = project(x, args.n)
    header = {"command": "straighten", "r": args.r, "n": args.n, "expr": args.expr}
    print(_emit_element(x, args.format, header), file=out)
    return EXIT_OK


def _cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    if args.workers < 1:
        raise ValueError("--workers must be at least 1")
    params = GridParams(args.max_r, args.max_n, args.max_deg, args.seed, args.samples)
    results = run_suites(params, args.suite, args.workers)
    width = max(len(r.name) for r in results)
    print(f"{'suite':<{width}}  {'checked':>8}  {'failed':>6}  status", file=out)
    for r in results:
        print(f"{r.name:<{width}}  {r.checked:>8}  {len(r.failures):>6}  {'ok' if r.ok else 'FAIL'}", file=out)
    failures = [f"{r.name}: {f}" for r in results for f in r.failures]
    if failures:
        print(f"{len(failures)} counterexample(s); first {min(10, len(failures))}:", file=out)
        for f in failures[:10]:
            print(f"  {f}", file=out)
        return EXIT_VERIFY
    print(f"all {sum(r.checked for r in results)} checks passed", file=out)
    return EXIT_OK


COMMANDS: dict[str, Callable[..., int]] = {
    "act": _cmd_act,
    "series": _cmd_series,
    "gamma": _cmd_gamma,
    "matrix-act": _cmd_matrix_act,
    "straighten": _cmd_straighten,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out, err = stdout or sys.stdout, stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out, stdin or sys.stdin)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
