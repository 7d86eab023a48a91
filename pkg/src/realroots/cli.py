"""Command-line frontend.

Polynomials are given as text such as ``"x^2 - 2"`` or ``"x^2 + y^2 - 2"``;
rationals as ``p/q`` or plain integers.  Results go to stdout either as
``key=value`` lines (``--format text``) or as a JSON array of records
(``--format json``).  Rationals are always written as exact strings.

Exit status: 0 on success, 1 on a library error (one line on stderr of the
form ``error: <Tag>: <message>``), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bivar import BivariatePolynomial, naive_solve, rur_solve, satisfy_bivariate
from .errors import ParseError, RealRootsError
from .polycore import (
    IntPolynomial,
    cauchy_root_bound,
    davenport_mahler_lower_bound,
    mahler_measure_upper_bound,
    separation_lower_bound,
)
from .realalg import (
    AlgebraicNumber,
    compare,
    isolate_real_roots,
    satisfy_univariate,
    sign_at,
)
from .stha import square_free_part

DEFAULT_MAX_DEGREE = 64


# ---------------------------------------------------------------------------
# Parsing


@dataclass(frozen=True)
class PolynomialExpr:
    source: str
    poly: Union[IntPolynomial, BivariatePolynomial]

    @property
    def is_bivariate(self) -> bool:
        return isinstance(self.poly, BivariatePolynomial)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.skip()

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        self.skip()
        return ch

    def number(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", start)
        digits = self.text[start : self.pos]
        if self.peek() in (".", "/", "e", "E"):
            raise ParseError("non-integer coefficient", self.pos)
        self.skip()
        return int(digits)


def _term(sc: _Scanner) -> tuple:
    start = sc.pos
    sign = 1
    if sc.peek() == "-":
        sc.take()
        sign = -1
    coeff = None
    if sc.peek().isdigit():
        coeff = sc.number()
        if sc.peek() == "*":
            sc.take()
            if sc.peek() not in ("x", "y"):
                raise ParseError("expected a variable after '*'", sc.pos)
    exps = {}
    while sc.peek() in ("x", "y"):
        var_pos = sc.pos
        var = sc.take()
        if var in exps:
            raise ParseError(f"repeated variable '{var}'", var_pos)
        exps[var] = 1
        if sc.peek() == "^":
            sc.take()
            exps[var] = sc.number()
        if sc.peek() == "*":
            sc.take()
            if sc.peek() not in ("x", "y"):
                raise ParseError("expected a variable after '*'", sc.pos)
    if coeff is None and not exps:
        ch = sc.peek()
        if ch == "":
            raise ParseError("unexpected end of input", sc.pos)
        if ch.isalpha():
            raise ParseError(f"unknown variable '{ch}'", sc.pos)
        raise ParseError(f"unexpected character '{ch}'", start if sign > 0 else sc.pos)
    return (exps.get("x", 0), exps.get("y", 0)), sign * (1 if coeff is None else coeff)


def parse_polynomial(text: str, max_degree: int | None = None) -> PolynomialExpr:
    """Parse integer polynomials in ``x`` and ``y``.

    Grammar: ``poly := ['-'] term (('+'|'-') term)*``, ``term := coeff? x^i? y^j?``
    with an optional ``*`` between factors.  A result without ``y`` is an
    :class:`IntPolynomial` in ``x``.
    """
    sc = _Scanner(text)
    terms: dict = {}
    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.take() == "-" else 1
    while True:
        key, c = _term(sc)
        terms[key] = terms.get(key, 0) + sign * c
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "+-":
            if ch.isalpha():
                raise ParseError(f"unknown variable '{ch}'", sc.pos)
            if ch == ".":
                raise ParseError("non-integer coefficient", sc.pos)
            raise ParseError(f"unexpected character '{ch}'", sc.pos)
        sign = -1 if sc.take() == "-" else 1
    if max_degree is None:
        max_degree = int(os.environ.get("REALROOTS_MAX_DEGREE", DEFAULT_MAX_DEGREE))
    deg = max((i + j for (i, j), c in terms.items() if c), default=0)
    if deg > max_degree:
        raise ParseError(f"degree {deg} exceeds the limit {max_degree}")
    if any(j for (_, j), c in terms.items() if c):
        return PolynomialExpr(text, BivariatePolynomial.from_terms(terms))
    top = max((i for (i, _), c in terms.items() if c), default=-1)
    coeffs = [0] * (top + 1)
    for (i, _), c in terms.items():
        if c:
            coeffs[i] += c
    return PolynomialExpr(text, IntPolynomial(coeffs))


def parse_rational(text: str) -> Fraction:
    try:
        num, _, den = text.strip().partition("/")
        if not num.lstrip("-").isdigit() or (den and not den.isdigit()):
            raise ValueError
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None


def _univariate(text: str) -> IntPolynomial:
    expr = parse_polynomial(text)
    if expr.is_bivariate:
        raise ParseError(f"expected a polynomial in x only: {text!r}")
    return expr.poly


def _bivariate(text: str) -> BivariatePolynomial:
    poly = parse_polynomial(text).poly
    if isinstance(poly, IntPolynomial):
        return BivariatePolynomial.from_x(poly)
    return poly


# ---------------------------------------------------------------------------
# Records


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _poly_text(P) -> str:
    return P.to_string(spaces=False) if isinstance(P, IntPolynomial) else P.to_string().replace(" ", "")


def number_record(alpha: AlgebraicNumber, prefix: str = "") -> dict:
    rec = {f"{prefix}defining": _poly_text(alpha.defining)}
    if alpha.is_exact:
        rec[f"{prefix}exact"] = _q(alpha.exact)
    else:
        rec[f"{prefix}lo"] = _q(alpha.lo)
        rec[f"{prefix}hi"] = _q(alpha.hi)
    return rec


def root_record(root) -> dict:
    rec = {"record": "root"}
    rec.update(number_record(root.number))
    rec["multiplicity"] = root.multiplicity
    return rec


def solution_record(sol) -> dict:
    rec = {"record": "solution"}
    rec.update(number_record(sol.x, "x_"))
    rec.update(number_record(sol.y, "y_"))
    if sol.rur_witness is not None:
        k, num, den = sol.rur_witness
        rec["k"] = k
        rec["numerator"] = _poly_text(num)
        rec["denominator"] = _poly_text(den)
    return rec


def format_text(records: list) -> str:
    lines = []
    for rec in records:
        if set(rec) == {"record", "value"}:
            lines.append(str(rec["value"]))
        else:
            lines.append(" ".join(f"{k}={v}" for k, v in rec.items()))
    return "".join(line + "\n" for line in lines)


def parse_text(output: str) -> list:
    """Inverse of :func:`format_text` for records with ``key=value`` fields."""
    records = []
    for line in output.splitlines():
        if "=" not in line:
            records.append({"value": line})
            continue
        rec = {}
        for field in line.split(" "):
            k, _, v = field.partition("=")
            rec[k] = v
        records.append(rec)
    return records


# ---------------------------------------------------------------------------
# Commands


def _cmd_isolate(args) -> list:
    return [root_record(r) for r in isolate_real_roots(_univariate(args.f))]


def _number_arg(P: str, lo: str, hi: str) -> AlgebraicNumber:
    return AlgebraicNumber.from_interval(_univariate(P), parse_rational(lo), parse_rational(hi))


def _cmd_sign_at(args) -> list:
    alpha = _number_arg(args.P, args.lo, args.hi)
    return [{"record": "sign", "value": sign_at(_univariate(args.Q), alpha)}]


def _cmd_compare(args) -> list:
    a = _number_arg(args.P1, args.lo1, args.hi1)
    b = _number_arg(args.P2, args.lo2, args.hi2)
    return [{"record": "order", "value": compare(a, b).name}]


def _cmd_solve2(args) -> list:
    F, G = _bivariate(args.F), _bivariate(args.G)
    if args.method == "naive":
        if args.shear:
            F, G = F.shear(args.shear), G.shear(args.shear)
        sols = naive_solve(F, G)
    else:
        sols = rur_solve(F, G, args.shear)
    return [solution_record(s) for s in sols]


def _cmd_satisfy(args) -> list:
    roots = satisfy_univariate(
        _univariate(args.P),
        gt=[_univariate(t) for t in args.gt],
        lt=[_univariate(t) for t in args.lt],
        eq=[_univariate(t) for t in args.eq],
    )
    return [root_record(r) for r in roots]


def _cmd_satisfy2(args) -> list:
    sols = satisfy_bivariate(
        _bivariate(args.P),
        _bivariate(args.Q),
        gt=[_bivariate(t) for t in args.gt],
        lt=[_bivariate(t) for t in args.lt],
        eq=[_bivariate(t) for t in args.eq],
    )
    return [solution_record(s) for s in sols]


def _cmd_bounds(args) -> list:
    f = _univariate(args.f)
    rec = {"record": "bounds", "cauchy": _q(cauchy_root_bound(f)), "mahler": _q(mahler_measure_upper_bound(f))}
    if f.degree >= 2:
        rec["separation"] = _q(separation_lower_bound(f))
        gaps = max(1, len(isolate_real_roots(f)) - 1)
        k = min(gaps, f.degree - 1)
        rec["davenport_mahler_k"] = k
        rec["davenport_mahler"] = _q(davenport_mahler_lower_bound(f, k))
    rec["squarefree"] = _poly_text(square_free_part(f))
    return [rec]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: UsageError: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="realroots", description="Exact real algebraic number computations.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("isolate", help="isolate the real roots of f with multiplicities")
    p.add_argument("f")
    p.set_defaults(run=_cmd_isolate)

    p = sub.add_parser("sign-at", help="sign of Q at the root of P in [lo, hi]")
    for name in ("Q", "P", "lo", "hi"):
        p.add_argument(name)
    p.set_defaults(run=_cmd_sign_at)

    p = sub.add_parser("compare", help="order of two algebraic numbers")
    for name in ("P1", "lo1", "hi1", "P2", "lo2", "hi2"):
        p.add_argument(name)
    p.set_defaults(run=_cmd_compare)

    p = sub.add_parser("solve2", help="real solutions of F = G = 0")
    p.add_argument("--method", choices=("naive", "rur"), default="naive")
    p.add_argument("--shear", type=int, default=None)
    p.add_argument("F")
    p.add_argument("G")
    p.set_defaults(run=_cmd_solve2)

    for name, runner, polys in (("satisfy", _cmd_satisfy, ("P",)), ("satisfy2", _cmd_satisfy2, ("P", "Q"))):
        p = sub.add_parser(name, help="roots meeting sign conditions")
        for poly in polys:
            p.add_argument(poly)
        for flag in ("--gt", "--lt", "--eq"):
            p.add_argument(flag, action="append", default=[])
        p.set_defaults(run=runner)

    p = sub.add_parser("bounds", help="root and separation bounds of f")
    p.add_argument("f")
    p.set_defaults(run=_cmd_bounds)

    # global option also accepted after the subcommand
    for action in sub.choices.values():
        action.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        records = args.run(args)
    except ParseError as exc:
        print(f"error: {exc.tag}: {exc}", file=sys.stderr)
        return 2
    except RealRootsError as exc:
        print(f"error: {exc.tag}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(json.dumps(records) + "\n")
    else:
        sys.stdout.write(format_text(records))
    return 0


if __name__ == "__main__":
    sys.exit(main())
