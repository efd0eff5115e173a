"""Command-line front end: evaluate, compare against series, run spin sweeps.

Multivector literals come in two forms: eight comma-separated coefficients
in blade order with an optional ``/ N`` divisor, or a signed term list like
``4 + 1*e1 - 5*e3 + 10*e12``.  Results render as signed terms in blade
order with exact zeros suppressed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from .algebra import (
    BLADE_NAMES,
    Multivector,
    Signature,
    det_norm,
    determinant,
    inverse,
)
from .center import center_decompose, sqrt_center
from .exceptions import Cl3Error, MVParseError
from .exponential import ExpBranch, exp, exp_factors
from .functions import hyperbolic_exact, ratio_exact, trig_exact
from .series import SeriesFamily, SeriesSpec, series_eval
from .spin import RampSweep, sweep_ramp, write_trace_csv

_BLADE_INDEX = {name: i for i, name in enumerate(BLADE_NAMES) if name != "1"}
_SERIES_FAMILIES = {
    "exp": SeriesFamily.EXP,
    "sin": SeriesFamily.SIN,
    "cos": SeriesFamily.COS,
    "tan": SeriesFamily.TAN,
    "sinh": SeriesFamily.SINH,
    "cosh": SeriesFamily.COSH,
    "tanh": SeriesFamily.TANH,
}
_CONVERGENCE_WARN = 1e-6

_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[+\-*/]))")


def _parse_terms(text: str, sig: Signature) -> Multivector:
    coeffs = np.zeros(8)
    pos = 0
    n = len(text)
    sign = 1.0
    expect_term = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise MVParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
        if m.lastgroup == "op" and m.group("op") in "+-":
            if expect_term and m.group("op") == "+":
                pos = m.end()
                continue
            sign *= -1.0 if m.group("op") == "-" else 1.0
            pos = m.end()
            expect_term = True
            continue
        if not expect_term:
            raise MVParseError("expected '+' or '-' between terms", column=pos + 1)
        value = 1.0
        blade_idx = 0
        have_number = False
        if m.lastgroup == "num":
            value = float(m.group("num"))
            have_number = True
            pos = m.end()
            m2 = _TOKEN.match(text, pos)
            if m2 and m2.lastgroup == "op" and m2.group("op") == "*":
                pos = m2.end()
                m3 = _TOKEN.match(text, pos)
                if not m3 or m3.lastgroup != "name":
                    raise MVParseError("expected blade name after '*'", column=pos + 1)
                blade_idx = _blade_index(m3.group("name"), pos)
                pos = m3.end()
        elif m.lastgroup == "name":
            blade_idx = _blade_index(m.group("name"), pos)
            pos = m.end()
        else:
            raise MVParseError(f"unexpected {m.group()!r}", column=pos + 1)
        if not have_number and blade_idx == 0:
            raise MVParseError("term has neither coefficient nor blade", column=pos + 1)
        coeffs[blade_idx] += sign * value
        sign = 1.0
        expect_term = False
    if expect_term:
        raise MVParseError("dangling sign at end of input", column=n)
    return Multivector(sig, coeffs)


def _blade_index(name: str, pos: int) -> int:
    if name in _BLADE_INDEX:
        return _BLADE_INDEX[name]
    if re.fullmatch(r"e[123]{2,3}", name):
        digits = name[1:]
        if len(set(digits)) == len(digits):
            ascending = "e" + "".join(sorted(digits))
            raise MVParseError(
                f"blade {name!r} is not in the stored basis; indices ascend "
                f"({ascending} is stored, {name} is its signed reordering)",
                column=pos + 1,
            )
    raise MVParseError(f"unknown blade {name!r}", column=pos + 1)


def parse_mv(text: str, sig: Signature = Signature.CL30) -> Multivector:
    """Parse a multivector literal (comma form or term form)."""
    if "," in text:
        body, _, divisor = text.partition("/")
        parts = body.split(",")
        if len(parts) != 8:
            raise MVParseError(f"expected 8 comma-separated coefficients, got {len(parts)}")
        coeffs = np.empty(8)
        col = 1
        for i, part in enumerate(parts):
            try:
                coeffs[i] = float(part)
            except ValueError:
                raise MVParseError(f"bad coefficient {part.strip()!r}", column=col) from None
            col += len(part) + 1
        if divisor.strip():
            try:
                coeffs /= float(divisor)
            except ValueError:
                raise MVParseError(f"bad scale divisor {divisor.strip()!r}") from None
        return Multivector(sig, coeffs)
    return _parse_terms(text, sig)


def render_mv(mv: Multivector, digits: int = 8) -> str:
    """Signed terms in blade order; exact zeros suppressed."""
    parts = []
    for name, v in zip(BLADE_NAMES, mv.c):
        if v == 0.0:
            continue
        body = f"{abs(v):.{digits}g}"
        if name != "1":
            body += f"*{name}"
        parts.append(("-" if v < 0 else "+", body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for s, body in parts[1:]:
        text += f" {s} {body}"
    return text


def _mv_json(mv: Multivector) -> dict:
    return {
        "algebra": mv.sig.name.lower(),
        "coeffs": [float(v) for v in mv.c],
        "basis": list(BLADE_NAMES),
    }


def _closed_form(fn: str, mv: Multivector) -> Multivector:
    if fn == "exp":
        return exp(mv)
    if fn in ("sin", "cos"):
        return trig_exact(mv, fn)
    if fn in ("sinh", "cosh"):
        return hyperbolic_exact(mv, fn)
    if fn in ("tan", "tanh"):
        return ratio_exact(mv, fn)
    raise ValueError(f"{fn} has no closed form")


def _cmd_eval(args) -> int:
    sig = Signature.from_name(args.algebra)
    mv = parse_mv(args.mv, sig)
    fn = args.fn

    if fn in _SERIES_FAMILIES and args.series:
        spec = SeriesSpec(_SERIES_FAMILIES[fn], args.terms)
        result, delta = series_eval(mv, spec, return_last_term=True)
        if delta > _CONVERGENCE_WARN:
            print(
                f"warning: last series term still moves coefficients by {delta:.3g}; "
                "the series may not have converged",
                file=sys.stderr,
            )
        _emit_mv(result, args)
        return 0
    if args.series:
        raise Cl3Error(f"--series does not apply to --fn {fn}")

    if fn in _SERIES_FAMILIES:
        _emit_mv(_closed_form(fn, mv), args)
        return 0
    if fn == "inv":
        _emit_mv(inverse(mv).inverse, args)
        return 0
    if fn == "det":
        _emit_scalar(determinant(mv), args)
        return 0
    if fn == "det-norm":
        _emit_scalar(det_norm(mv), args)
        return 0
    if fn == "sqrt-center":
        ce = center_decompose(mv)
        roots = sqrt_center(ce, sig)
        if args.format == "json":
            print(json.dumps({
                "algebra": sig.name.lower(),
                "center": [ce.a_s, ce.a_i],
                "roots": [[r.a_s, r.a_i] for r in roots],
            }))
        else:
            print(f"center: {ce.a_s:.{args.digits}g} + {ce.a_i:.{args.digits}g}*e123")
            for r in roots:
                print(f"root: {render_mv(r.as_multivector(sig), args.digits)}")
        return 0
    if fn == "exp-factors":
        f = exp_factors(mv)
        payload = {
            "algebra": sig.name.lower(),
            "branch": f.branch.value,
            "a_plus_sq": f.a_plus_sq,
            "a_minus_sq": f.a_minus_sq,
            "a_plus": f.a_plus,
            "a_minus": f.a_minus,
            "c_norm": f.c_norm,
        }
        if args.format == "json":
            print(json.dumps(payload))
        else:
            for key, value in payload.items():
                if value is not None:
                    print(f"{key}: {value:.{args.digits}g}" if isinstance(value, float) else f"{key}: {value}")
        return 0
    raise Cl3Error(f"unknown function {fn!r}")


def _emit_mv(mv: Multivector, args) -> None:
    if args.format == "json":
        print(json.dumps(_mv_json(mv)))
    else:
        print(render_mv(mv, args.digits))


def _emit_scalar(value: float, args) -> None:
    if args.format == "json":
        print(json.dumps({"value": value}))
    else:
        print(f"{value:.{args.digits}g}")


def _cmd_compare(args) -> int:
    sig = Signature.from_name(args.algebra)
    mv = parse_mv(args.mv, sig)
    if args.fn not in _SERIES_FAMILIES:
        raise Cl3Error(f"--fn {args.fn} has no series family to compare against")
    closed = _closed_form(args.fn, mv)
    approx, delta = series_eval(mv, SeriesSpec(_SERIES_FAMILIES[args.fn], args.terms), return_last_term=True)
    max_delta = float(np.abs(closed.c - approx.c).max())
    if delta > _CONVERGENCE_WARN:
        print(
            f"warning: last series term still moves coefficients by {delta:.3g}; "
            "the series may not have converged",
            file=sys.stderr,
        )
    if args.format == "json":
        print(json.dumps({
            "algebra": sig.name.lower(),
            "fn": args.fn,
            "terms": args.terms,
            "closed": [float(v) for v in closed.c],
            "series": [float(v) for v in approx.c],
            "max_delta": max_delta,
            "basis": list(BLADE_NAMES),
        }))
    else:
        print(f"closed form: {render_mv(closed, args.digits)}")
        print(f"series[{args.terms}]: {render_mv(approx, args.digits)}")
        print(f"max delta: {max_delta:.3e}")
    return 0


def _cmd_spin(args) -> int:
    sweep = RampSweep(
        b0_start=args.b0_start,
        b0_end=args.b0_end,
        duration=args.T,
        samples=args.samples,
        omega=args.omega,
        omega1=args.omega1,
    )
    trace = sweep_ramp(sweep, args.sigma, method=args.method)
    if args.out in (None, "-"):
        write_trace_csv(trace, sys.stdout)
    else:
        with open(args.out, "w", newline="\n") as fh:
            write_trace_csv(trace, fh)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cl3",
        description="Geometric-algebra special functions in the four 3D Clifford algebras.",
        epilog="Set GA_EPS to override the degeneracy tolerance multiplier (default 1e-12).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="cl30", choices=["cl30", "cl03", "cl12", "cl21"])
    common.add_argument("--mv", required=True, help="multivector literal")
    common.add_argument("--digits", type=int, default=8, help="significant digits (default 8)")
    common.add_argument("--format", default="text", choices=["text", "json"])

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate one function of one multivector")
    p_eval.add_argument("--fn", required=True, choices=[
        "exp", "sin", "cos", "tan", "sinh", "cosh", "tanh",
        "inv", "det", "det-norm", "sqrt-center", "exp-factors",
    ])
    p_eval.add_argument("--series", action="store_true", help="use the series evaluator instead of the closed form")
    p_eval.add_argument("--terms", type=int, default=20, help="series order for --series (default 20)")
    p_eval.set_defaults(run=_cmd_eval)

    p_cmp = sub.add_parser("compare", parents=[common], help="closed form vs truncated series")
    p_cmp.add_argument("--fn", required=True, choices=sorted(_SERIES_FAMILIES))
    p_cmp.add_argument("--terms", type=int, required=True, help="series order")
    p_cmp.set_defaults(run=_cmd_compare)

    p_spin = sub.add_parser("spin", help="spin-flip probability along a field ramp (CSV)")
    p_spin.add_argument("--omega", type=float, required=True)
    p_spin.add_argument("--omega1", type=float, required=True)
    p_spin.add_argument("--b0-start", dest="b0_start", type=float, required=True)
    p_spin.add_argument("--b0-end", dest="b0_end", type=float, required=True)
    p_spin.add_argument("--T", dest="T", type=float, required=True)
    p_spin.add_argument("--sigma", type=int, required=True, choices=[-1, 1])
    p_spin.add_argument("--samples", type=int, default=5000)
    p_spin.add_argument("--method", default="closed", choices=["closed", "stepped"])
    p_spin.add_argument("--out", default="-", help="output path ('-' for stdout)")
    p_spin.set_defaults(run=_cmd_spin)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except Cl3Error as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
