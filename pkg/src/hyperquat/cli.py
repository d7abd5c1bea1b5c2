"""Command-line interface: ``hyperquat <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage or parse error, 3 when
``verify`` sees an identity that is expected to hold fail.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from hyperquat import fibonacci as fibo
from hyperquat import identities
from hyperquat.linalg import Matrix, mat_det
from hyperquat.literals import ParseError, format_biquat, format_quat, parse_biquat, parse_quat
from hyperquat.quaternions import NotInvertible, collapse
from hyperquat.representations import epsilon_of, gamma_of, lambda_of, rho_of, theta_of
from hyperquat.scalars import format_rational
from hyperquat.solver import InvariantBreach, LinearEquation, solve

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

REPRESENTATIONS = {
    "lambda": (parse_quat, lambda_of),
    "rho": (parse_quat, rho_of),
    "gamma": (parse_biquat, gamma_of),
    "theta": (parse_biquat, theta_of),
    "epsilon": (parse_biquat, epsilon_of),
}

FIB_KINDS = ("number", "quaternion", "biquaternion", "closed-forms", "equation-matrices")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def default_seed() -> int:
    env = os.environ.get("HYPERQUAT_SEED")
    return int(env) if env else identities.DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(prog="hyperquat", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("repr", parents=[common], help="print a matrix representation")
    p.add_argument("target", choices=sorted(REPRESENTATIONS))
    p.add_argument("value", help="quaternion literal (lambda, rho) or 'x ; y' literal")

    p = sub.add_parser("det", parents=[common], help="determinant of a representation")
    p.add_argument("target", choices=sorted(REPRESENTATIONS))
    p.add_argument("value")

    p = sub.add_parser("fib", parents=[common], help="Fibonacci families")
    p.add_argument("kind", choices=FIB_KINDS)
    p.add_argument("n", type=_nonneg_int)

    p = sub.add_parser("solve", parents=[common],
                       help="solve sum A_k X B_k = C; JSON equation or A B C literals")
    p.add_argument("--equation", help="equation JSON, or @path to a JSON file")
    p.add_argument("literals", nargs="*", metavar="A B C",
                   help="single-term equation A X B = C")

    p = sub.add_parser("verify", parents=[common], help="run registered identity checks")
    p.add_argument("ids", nargs="*", default=["all"])
    p.add_argument("--trials", type=_nonneg_int, default=identities.DEFAULT_TRIALS)
    p.add_argument("--seed", type=_nonneg_int, default=None,
                   help=f"default {identities.DEFAULT_SEED}, or $HYPERQUAT_SEED")
    p.add_argument("--bound", type=_nonneg_int, default=identities.DEFAULT_BOUND)
    p.add_argument("--list", action="store_true", help="list identity ids and exit")

    p = sub.add_parser("collapse", parents=[common], help="x + iy -> x + e1 y")
    p.add_argument("value")
    return parser


def _emit(payload, text: str, as_json: bool, out):
    if as_json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _cmd_repr(args, out):
    parse, rep = REPRESENTATIONS[args.target]
    m = rep(parse(args.value))
    _emit(m.to_json(), str(m), args.json, out)
    return EXIT_OK


def _cmd_det(args, out):
    parse, rep = REPRESENTATIONS[args.target]
    d = format_rational(mat_det(rep(parse(args.value))))
    _emit({"target": args.target, "value": args.value, "det": d}, d, args.json, out)
    return EXIT_OK


def _cmd_fib(args, out):
    n = args.n
    if args.kind == "number":
        v = format_rational(fibo.fib(n))
        _emit({"n": n, "value": v}, v, args.json, out)
    elif args.kind == "quaternion":
        v = format_quat(fibo.fib_quaternion(n))
        _emit({"n": n, "value": v}, v, args.json, out)
    elif args.kind == "biquaternion":
        v = format_biquat(fibo.complex_fib_quaternion(n))
        _emit({"n": n, "value": v}, v, args.json, out)
    elif args.kind == "closed-forms":
        checks = fibo.closed_form_checks(n)
        payload = {"n": n}
        payload.update({c["name"]: format_rational(c["printed"]) for c in checks})
        payload["direct"] = {c["name"]: format_rational(c["direct"]) for c in checks}
        payload["match"] = {c["name"]: c["match"] for c in checks}
        width = max(len(c["name"]) for c in checks)
        text = "\n".join(
            f"{c['name']:<{width}}  {format_rational(c['printed'])}"
            + ("" if c["match"] else f"  (direct: {format_rational(c['direct'])})")
            for c in checks
        )
        _emit(payload, text, args.json, out)
    else:
        B, D, delta = fibo.equation_matrices(n)
        payload = {"n": n, "B": B.to_json(), "D": D.to_json(), "delta": delta.to_json()}
        text = f"B =\n{B}\n\nD =\n{D}\n\ndelta =\n{delta}"
        _emit(payload, text, args.json, out)
    return EXIT_OK


def _load_equation(args) -> LinearEquation:
    if args.equation is not None:
        if args.literals:
            raise UsageError("give either --equation or A B C literals, not both")
        raw = args.equation
        if raw.startswith("@"):
            with open(raw[1:]) as fh:
                raw = fh.read()
        try:
            obj = json.loads(raw)
            return LinearEquation.from_json(obj)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"bad equation JSON: {exc}") from None
    if len(args.literals) != 3:
        raise UsageError("expected --equation JSON or exactly three literals A B C")
    A, B, C = (parse_biquat(t) for t in args.literals)
    return LinearEquation(((A, B),), C)


def _cmd_solve(args, out):
    outcome = solve(_load_equation(args))
    lines = [f"kind: {outcome.kind}", f"rank: {outcome.rank}"]
    if outcome.solution is not None:
        lines.append(f"solution: {format_biquat(outcome.solution)}")
    lines += [f"nullspace: {format_biquat(v)}" for v in outcome.nullspace]
    _emit(outcome.to_json(), "\n".join(lines), args.json, out)
    return EXIT_OK


def _cmd_verify(args, out):
    if args.list:
        ids = identities.catalog()
        text = "\n".join(f"{i}  (expected: {identities.CATALOG[i].expected})" for i in ids)
        _emit(ids, text, args.json, out)
        return EXIT_OK
    ids = None if args.ids == ["all"] else args.ids
    unknown = [i for i in ids or () if i not in identities.CATALOG]
    if unknown:
        raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    seed = args.seed if args.seed is not None else default_seed()
    reports = identities.run_all(ids, args.trials, seed, args.bound)
    lines = []
    for r in reports:
        expected = identities.CATALOG[r.identity].expected
        flag = "" if r.status == expected else "  UNEXPECTED"
        lines.append(f"{r.identity:<46} {r.status:<5} (expected {expected}, "
                     f"{r.trials} cases, {len(r.counterexamples)} counterexamples){flag}")
    _emit([r.to_json() for r in reports], "\n".join(lines), args.json, out)
    return EXIT_VERIFY if identities.broken(reports) else EXIT_OK


def _cmd_collapse(args, out):
    v = format_quat(collapse(parse_biquat(args.value)))
    _emit({"value": args.value, "collapse": v}, v, args.json, out)
    return EXIT_OK


COMMANDS = {
    "repr": _cmd_repr,
    "det": _cmd_det,
    "fib": _cmd_fib,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "collapse": _cmd_collapse,
}


def _error(kind: str, message: str, as_json: bool, err, **extra) -> None:
    if as_json:
        err.write(json.dumps({"error": {"kind": kind, "message": message, **extra}}) + "\n")
    else:
        err.write(f"hyperquat: {kind}: {message}\n")


def main(argv=None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        _error("usage", str(exc), as_json, err)
        return EXIT_USAGE
    except ParseError as exc:
        _error("parse", str(exc), as_json, err, offset=exc.offset, expected=sorted(exc.expected))
        return EXIT_USAGE
    except (NotInvertible, ZeroDivisionError, ArithmeticError) as exc:
        _error("domain", str(exc), as_json, err)
        return EXIT_DOMAIN
    except InvariantBreach as exc:
        _error("internal", str(exc), as_json, err)
        return EXIT_DOMAIN
    except OSError as exc:
        _error("io", str(exc), as_json, err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
