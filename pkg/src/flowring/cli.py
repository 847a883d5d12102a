"""Command line interface.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 parse error, 2 domain error, 3 invalid flags, 4 verification failure.
The undocumented rk4-debug subcommand is a test-harness hook.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ClosedFormDomainError,
    DomainMismatchError,
    DomainRequiredError,
    NotAUnitError,
    NumericBlowupError,
    OrderExhaustedError,
    OrderMismatchError,
    OutOfRangeError,
    ParseError,
    UnsupportedArgumentError,
)
from .autonomous import autonomous_sequence
from .bell import bell_polynomial
from .expr import elaborate, parse
from .flow import FlowSeries, closed_form_eval, decompose_flow, match_closed_form
from .oracle import rk4_solve
from .scalars import Domain, format_scalar, parse_scalar
from .verify import run_suite

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 3
EXIT_VERIFY = 4

_DOMAIN_ERRORS = (
    DomainMismatchError,
    DomainRequiredError,
    NotAUnitError,
    OrderExhaustedError,
    OrderMismatchError,
    UnsupportedArgumentError,
    ClosedFormDomainError,
    NumericBlowupError,
    ZeroDivisionError,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(
        prog="flowring",
        description="Exact truncated series arithmetic for one-dimensional "
        "autonomous flows. Results go to stdout, diagnostics to stderr. "
        "Exit codes: 0 success, 1 parse error, 2 domain error, "
        "3 invalid flags, 4 verification failure.",
    )
    sub = parser.add_subparsers(
        dest="command",
        required=True,
        metavar="{series,flow,eval,decompose,verify,bell-debug}",
    )

    def common(p, with_order_t=True):
        p.add_argument("--field", required=True, help="vector field expression")
        p.add_argument("--order-x", type=int, default=16, dest="order_x")
        if with_order_t:
            p.add_argument("--order-t", type=int, default=12, dest="order_t")
        p.add_argument("--domain", choices=["rational", "gaussian"], default="rational")
        p.add_argument("--format", choices=["text", "json"], default="text")

    common(sub.add_parser("series", help="print the coefficient sequence of a field"))
    common(sub.add_parser("flow", help="print the truncated flow of a field"))

    p_eval = sub.add_parser("eval", help="evaluate the flow at a point")
    common(p_eval)
    p_eval.add_argument("--t", type=float, required=True)
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--steps", type=int, default=512, help=argparse.SUPPRESS)

    p_dec = sub.add_parser("decompose", help="combine the flows of several parts")
    p_dec.add_argument("--mode", choices=["sum", "product"], required=True)
    p_dec.add_argument("--part", action="append", required=True, dest="parts")
    p_dec.add_argument("--order-x", type=int, default=16, dest="order_x")
    p_dec.add_argument("--order-t", type=int, default=12, dest="order_t")
    p_dec.add_argument("--domain", choices=["rational", "gaussian"], default="rational")
    p_dec.add_argument("--format", choices=["text", "json"], default="text")

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")

    p_bell = sub.add_parser("bell-debug", help="evaluate a Bell polynomial")
    p_bell.add_argument("--n", type=int, required=True)
    p_bell.add_argument("--b", required=True, help="comma separated scalars b_1..b_n")
    p_bell.add_argument("--a", required=True, help="comma separated scalars a_1..a_n")
    p_bell.add_argument("--domain", choices=["rational", "gaussian"], default="rational")

    p_rk4 = sub.add_parser("rk4-debug")  # test harness hook, hidden from help
    p_rk4.add_argument("--field", required=True)
    p_rk4.add_argument("--x", type=float, required=True)
    p_rk4.add_argument("--t", type=float, required=True)
    p_rk4.add_argument("--steps", type=int, default=256)

    return parser


def _check_orders(args):
    if not 1 <= args.order_x <= 64:
        raise _UsageError("--order-x must lie in 1..64")
    order_t = getattr(args, "order_t", None)
    if order_t is not None and not 1 <= order_t <= args.order_x:
        raise _UsageError("--order-t must lie in 1..order-x")


def _series_rows(label, terms, out):
    for n, term in enumerate(terms):
        row = " ".join(format_scalar(c) for c in term.coeffs)
        out.write(f"{label.format(n=n)} {row}\n")


def _cmd_series(args, out):
    domain = Domain(args.domain)
    field = elaborate(parse(args.field), args.order_x, domain)
    seq = autonomous_sequence(field, args.order_t)
    if args.format == "json":
        json.dump(seq.to_json_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(f"field: {' '.join(format_scalar(c) for c in field.coeffs)}\n")
        _series_rows("A[{n}]:", seq.terms, out)
    return EXIT_OK


def _cmd_flow(args, out):
    domain = Domain(args.domain)
    field = elaborate(parse(args.field), args.order_x, domain)
    flow = FlowSeries(autonomous_sequence(field, args.order_t))
    if args.format == "json":
        json.dump(flow.to_json_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(f"field: {' '.join(format_scalar(c) for c in field.coeffs)}\n")
        _series_rows("t[{n}]:", flow.tcoeffs, out)
    return EXIT_OK


def _cmd_eval(args, out):
    domain = Domain(args.domain)
    ast = parse(args.field)
    field = elaborate(ast, args.order_x, domain)
    flow = FlowSeries(autonomous_sequence(field, args.order_t))
    series_value = flow.eval_at(args.t, args.x)
    is_real = not isinstance(series_value, complex) or series_value.imag == 0.0
    if isinstance(series_value, complex) and series_value.imag == 0.0:
        series_value = series_value.real

    closed = match_closed_form(ast) if is_real else None
    closed_value = closed_form_eval(closed, args.t, args.x) if closed else None
    rk4_value = None
    if is_real:
        try:
            rk4_value = rk4_solve(ast, args.x, args.t, args.steps).final
        except DomainMismatchError:
            rk4_value = None  # complex-valued field with a real flow

    if args.format == "json":
        payload = {
            "series": series_value if is_real else [series_value.real, series_value.imag],
            "closed_form": closed_value,
            "closed_form_kind": closed.to_json_dict() if closed else None,
            "rk4": rk4_value,
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
        return EXIT_OK
    out.write(f"series = {series_value!r}\n")
    if closed_value is not None:
        out.write(
            f"closed_form = {closed_value!r} ({closed.kind.value}: {closed.field_text()})\n"
        )
        out.write(f"delta_closed_form = {abs(series_value - closed_value):.3e}\n")
    if rk4_value is not None:
        out.write(f"rk4 = {rk4_value!r}\n")
        out.write(f"delta_rk4 = {abs(series_value - rk4_value):.3e}\n")
    return EXIT_OK


def _cmd_decompose(args, out):
    domain = Domain(args.domain)
    parts = [elaborate(parse(text), args.order_x, domain) for text in args.parts]
    result = decompose_flow(parts, args.mode, args.order_t)
    if args.format == "json":
        payload = {
            "mode": args.mode,
            "combined": result.combined.to_json_dict(),
            "components": [c.to_json_dict() for c in result.components],
            "matches_direct": result.matches_direct,
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(f"mode: {args.mode} with {len(parts)} part(s)\n")
        verdict = "PASS" if result.matches_direct else "FAIL"
        out.write(f"combined equals the direct flow: {verdict}\n")
        _series_rows("t[{n}]:", result.combined.tcoeffs, out)
        for idx, component in enumerate(result.components):
            out.write(f"component[{idx}]:\n")
            _series_rows("  t[{n}]:", component.tcoeffs, out)
    return EXIT_OK if result.matches_direct else EXIT_VERIFY


def _cmd_verify(args, out):
    outcomes = run_suite(args.seed)
    if args.format == "json":
        payload = [
            {"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes
        ]
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for o in outcomes:
            mark = "PASS" if o.passed else "FAIL"
            detail = f": {o.detail}" if o.detail else ""
            out.write(f"{mark} {o.name}{detail}\n")
        passed = sum(1 for o in outcomes if o.passed)
        out.write(f"RESULT: {passed}/{len(outcomes)} checks passed (seed {args.seed})\n")
    return EXIT_OK if all(outcomes) else EXIT_VERIFY


def _cmd_bell_debug(args, out):
    domain = Domain(args.domain)
    b = [parse_scalar(text, domain) for text in args.b.split(",")]
    a = [parse_scalar(text, domain) for text in args.a.split(",")]
    value = bell_polynomial(args.n, b, a)
    out.write(f"Y_{args.n} = {format_scalar(value)}\n")
    return EXIT_OK


def _cmd_rk4_debug(args, out):
    ast = parse(args.field)
    trajectory = rk4_solve(ast, args.x, args.t, args.steps)
    out.write(f"y({args.t}) = {trajectory.final!r} (step {trajectory.step:g})\n")
    return EXIT_OK


_COMMANDS = {
    "series": _cmd_series,
    "flow": _cmd_flow,
    "eval": _cmd_eval,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "bell-debug": _cmd_bell_debug,
    "rk4-debug": _cmd_rk4_debug,
}


def main(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "order_x"):
            _check_orders(args)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except OutOfRangeError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except _DOMAIN_ERRORS as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
