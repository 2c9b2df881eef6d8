"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 verification failure, 3 invalid
configuration (bad flags, cutoffs, quadrature orders or degree caps).
"""

import argparse
import json
import sys

import numpy as np

from . import ccr, complexwave, fock, verify
from .errors import BosonOrderError, ParseError
from .parsing import parse_function, parse_operator
from .quadrature import gauss_hermite_grid

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VERIFY = 2
EXIT_CONFIG = 3


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_quantize(args):
    f = parse_function(args.expr)
    if args.rule == "wick":
        op = ccr.wick_quantize(f)
    elif args.rule == "antiwick":
        op = ccr.anti_wick_multimode(f)
    else:
        op = ccr.anti_wick_via_dilation(f)
    _emit(args, op.to_text(), op.to_json())


def cmd_normal_order(args):
    op = parse_operator(args.expr)
    _emit(args, op.to_text(), op.to_json())


def cmd_dilate(args):
    op = ccr.dilate(parse_function(args.expr))
    _emit(args, op.to_text(), op.to_json())


def cmd_project(args):
    f = parse_function(args.expr)
    if f.variable_count != 1:
        raise ConfigError("project acts on single-variable functions")
    p = complexwave.project_antiholomorphic(f)
    _emit(args, p.to_text(), p.to_json())


def cmd_matrix(args):
    if args.dim < 2:
        raise ConfigError("--dim must be at least 2")
    op = parse_operator(args.expr)
    m = fock.eval_poly(op, (args.dim,) * op.mode_count)
    _emit(args, m.to_text(), m.to_json())


def _points(text):
    """Comma-separated complex literals in the expression syntax, e.g. ``0, 1/2, 1+i``."""
    out = []
    for part in text.split(","):
        c = parse_function(part)
        if c.degree() > 0:
            raise ConfigError(f"sample point {part.strip()!r} is not a constant")
        out.append(complex(c.evaluate(0, 0)))
    return out


def cmd_fourier(args):
    f = parse_function(args.expr)
    if f.variable_count != 1:
        raise ConfigError("fourier acts on single-variable functions")
    record = complexwave.fourier_transform_analytic(f)
    points = np.array(_points(args.points), dtype=complex)
    values = record(points)
    if args.quadrature:
        values = complexwave.fourier_transform(f, gauss_hermite_grid(args.gh_order), points)
    lines = [f"({record.polynomial.to_text()}) exp(-z* z)"]
    lines += [f"{p.real:.6g}{p.imag:+.6g}i: {v.real:.12g}{v.imag:+.12g}i" for p, v in zip(points, values)]
    payload = {
        "polynomial": record.polynomial.to_json(),
        "exponent": record.exponent,
        "points": [[p.real, p.imag] for p in points],
        "values": [[v.real, v.imag] for v in values],
    }
    _emit(args, "\n".join(lines), payload)


def cmd_verify(args):
    if args.dim is not None and args.dim < 16:
        raise ConfigError("--dim must be at least 16")
    if args.gh_order < 16:
        raise ConfigError("--gh-order must be at least 16")
    if args.tol is not None and args.tol < 0:
        raise ConfigError("--tol must be non-negative")
    config = verify.VerifyConfig(seed=args.seed, dim=args.dim, gh_order=args.gh_order, tol=args.tol)
    reports = verify.run_suites(args.suite, config)
    ok = all(r.passed for r in reports)
    text = "\n".join(r.line() for r in reports)
    text += f"\n{sum(r.passed for r in reports)}/{len(reports)} checks passed"
    _emit(args, text, {"passed": ok, "checks": [r.to_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser():
    parser = _Parser(prog="bosonorder", description="Operator orderings for bosonic modes.")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    # subcommands accept --format too; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("quantize", parents=[common], help="quantize a symbol in z, z*")
    p.add_argument("--rule", choices=["wick", "antiwick", "antiwick-dilation"], required=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("normal-order", parents=[common], help="bring an operator expression to normal order")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normal_order)

    p = sub.add_parser("dilate", parents=[common], help="substitute z -> A + B*, z* -> A* + B")
    p.add_argument("expr")
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("project", parents=[common], help="orthogonal projection onto polynomials in z*")
    p.add_argument("expr")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("matrix", parents=[common], help="truncated Fock matrix of an operator")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("fourier", parents=[common], help="Fourier transform against the Gaussian measure")
    p.add_argument("--points", default="0", help="comma-separated sample points, e.g. '0, 1/2, 1+i'")
    p.add_argument("--quadrature", action="store_true", help="evaluate by Gauss-Hermite quadrature")
    p.add_argument("--gh-order", type=int, default=64)
    p.add_argument("expr")
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("verify", parents=[common], help="run the property suites")
    p.add_argument("--suite", action="append", choices=list(verify.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int)
    p.add_argument("--gh-order", type=int, default=64)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print(exc.pointer(), file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, BosonOrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
