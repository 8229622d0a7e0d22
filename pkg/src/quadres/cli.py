"""Command-line frontend exposing every capability of the library.

Plain mode prints one result per line; --json wraps each invocation in a
deterministic envelope (sorted keys, sorted result lists). Exit codes:
0 ok (an empty solution set is still ok), 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import gaussian as zi
from .congruences import QuadCongruence, solve_linear, solve_quadratic
from .errors import NumberTheoryError
from .oracle import brute_legendre, brute_quadratic, brute_sqrt_mod, brute_two_squares
from .diophantine import (
    cz2_solution,
    enumerate_primitive_triples,
    enumerate_quadruples,
    pyth_quadruple,
    pyth_triple,
    zl_solution,
)
from .sqrtmod import sqrt_mod
from .symbols import jacobi, jacobi_by_definition, legendre_euler, legendre_gauss_lemma
from .two_squares import (
    all_representations,
    count_representations,
    primitive_representations,
    represent_prime,
)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadres",
        description="Exact solvers for quadratic congruences, quadratic-residue "
        "symbols, Gaussian integers, sums of two squares and Pythagorean "
        "triples/quadruples.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jacobi", parents=[common], help="Jacobi symbol (a/n)")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("legendre", parents=[common], help="Legendre symbol (a/p)")
    p.add_argument("a", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--method", choices=("euler", "gauss-lemma"), default="euler")

    p = sub.add_parser("sqrtmod", parents=[common], help="solve X^2 = a (mod n)")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser(
        "solve-quadratic", parents=[common], help="solve a*X^2 + b*X + c = 0 (mod n)"
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--mod", type=int, required=True, metavar="N")

    p = sub.add_parser(
        "solve-linear", parents=[common], help="solve a*X = b (mod n)"
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--mod", type=int, required=True, metavar="N")

    p = sub.add_parser(
        "two-squares", parents=[common], help="representations n = A^2 + B^2"
    )
    p.add_argument(
        "action", choices=("count", "list", "primitive", "represent-prime")
    )
    p.add_argument("n", type=int)

    p = sub.add_parser("gaussian", parents=[common], help="arithmetic in Z(i)")
    p.add_argument("action", choices=("norm", "divrem", "gcd", "factor", "is-prime"))
    p.add_argument("args", nargs="+", metavar="a+bi")

    p = sub.add_parser(
        "pyth-triple", parents=[common], help="primitive triple from (m, n)"
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser(
        "triples", parents=[common], help="primitive triples with hypotenuse <= R"
    )
    p.add_argument("--max", type=int, required=True, metavar="R")

    p = sub.add_parser(
        "cz2", parents=[common], help="solution of X^2 + Y^2 = c*Z^2"
    )
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d3", type=int, default=1)
    p.add_argument("--uv", type=int, nargs=2, required=True, metavar=("U", "V"))
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--triple", type=int, nargs=2, required=True, metavar=("M", "N"))

    p = sub.add_parser("zl", parents=[common], help="solution of X^2 + Y^2 = Z^l")
    p.add_argument("l", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser(
        "quadruple", parents=[common], help="quadruple from (m, n, u, v)"
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)

    p = sub.add_parser(
        "quadruples", parents=[common], help="primitive quadruples with w <= W"
    )
    p.add_argument("--max", type=int, required=True, metavar="W")

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="re-run a request through the brute-force oracle and compare",
    )
    p.add_argument("request", nargs=argparse.REMAINDER, metavar="SUBCOMMAND ...")

    return parser


def _residue_payload(rs) -> dict:
    return {"modulus": rs.modulus, "residues": list(rs.residues)}


def _residue_lines(rs) -> list[str]:
    return [str(x) for x in rs.residues]


def _rep_payload(rep) -> dict:
    return asdict(rep)


def _rep_lines(reps) -> list[str]:
    return [f"{rep.a} {rep.b}" for rep in reps]


def _cmd_jacobi(args):
    value = jacobi(args.a, args.n)
    return value, [str(value)]


def _cmd_legendre(args):
    fn = legendre_euler if args.method == "euler" else legendre_gauss_lemma
    value = fn(args.a, args.p)
    return value, [str(value)]


def _cmd_sqrtmod(args):
    rs = sqrt_mod(args.a, args.n)
    return _residue_payload(rs), _residue_lines(rs)


def _cmd_solve_quadratic(args):
    rs = solve_quadratic(QuadCongruence(args.a, args.b, args.c, args.mod))
    return _residue_payload(rs), _residue_lines(rs)


def _cmd_solve_linear(args):
    rs = solve_linear(args.a, args.b, args.mod)
    return _residue_payload(rs), _residue_lines(rs)


def _cmd_two_squares(args):
    if args.action == "count":
        value = count_representations(args.n)
        return value, [str(value)]
    if args.action == "list":
        reps = all_representations(args.n)
    elif args.action == "primitive":
        reps = primitive_representations(args.n)
    else:
        reps = [represent_prime(args.n)]
    return [_rep_payload(rep) for rep in reps], _rep_lines(reps)


def _cmd_gaussian(args):
    arity = 2 if args.action in ("divrem", "gcd") else 1
    if len(args.args) != arity:
        raise _UsageError(f"gaussian {args.action} takes exactly {arity} argument(s)")
    values = [zi.parse_gaussian(text) for text in args.args]
    if args.action == "norm":
        value = zi.norm(values[0])
        return value, [str(value)]
    if args.action == "is-prime":
        value = zi.is_gaussian_prime(values[0])
        return value, ["true" if value else "false"]
    if args.action == "divrem":
        kappa, rho = zi.div_rem(values[0], values[1])
        return (
            {"quotient": str(kappa), "remainder": str(rho)},
            [str(kappa), str(rho)],
        )
    if args.action == "gcd":
        value = zi.gcd(values[0], values[1])
        return str(value), [str(value)]
    fact = zi.factor(values[0])
    payload = {
        "unit": str(fact.unit),
        "factors": [[str(prime), e] for prime, e in fact.factors],
    }
    lines = [f"unit {fact.unit}"] + [f"({prime})^{e}" for prime, e in fact.factors]
    return payload, lines


def _cmd_pyth_triple(args):
    triple = pyth_triple(args.m, args.n)
    return asdict(triple), [f"{triple.s} {triple.t} {triple.r}"]


def _cmd_triples(args):
    triples = enumerate_primitive_triples(args.max)
    return [asdict(t) for t in triples], [f"{t.s} {t.t} {t.r}" for t in triples]


def _cmd_cz2(args):
    sol = cz2_solution(
        args.c, args.d3, args.uv[0], args.uv[1], args.g,
        pyth_triple(args.triple[0], args.triple[1]),
    )
    return asdict(sol), [f"{sol.x} {sol.y} {sol.z}"]


def _cmd_zl(args):
    sol = zl_solution(args.l, args.a, args.b)
    return asdict(sol), [f"{sol.x} {sol.y} {sol.z}"]


def _cmd_quadruple(args):
    quad = pyth_quadruple(args.m, args.n, args.u, args.v)
    return asdict(quad), [f"{quad.x} {quad.y} {quad.z} {quad.w}"]


def _cmd_quadruples(args):
    quads = enumerate_quadruples(args.max)
    return [asdict(q) for q in quads], [f"{q.x} {q.y} {q.z} {q.w}" for q in quads]


def _cmd_verify(args, parser):
    request = list(args.request)
    if request and request[0] == "--":
        request = request[1:]
    if not request or request[0] == "verify":
        raise _UsageError("verify needs a supported subcommand to check")
    try:
        inner = parser.parse_args(request)
    except SystemExit:
        raise _UsageError(f"could not parse verify request {request!r}") from None
    if getattr(inner, "json", False):
        args.json = True
    command = inner.command

    if command == "legendre":
        value = legendre_euler(inner.a, inner.p)
        oracle = brute_legendre(inner.a, inner.p)
    elif command == "jacobi":
        value = jacobi(inner.a, inner.n)
        oracle = jacobi_by_definition(inner.a, inner.n)
    elif command == "sqrtmod":
        value = _residue_payload(sqrt_mod(inner.a, inner.n))
        oracle = _residue_payload(brute_sqrt_mod(inner.a, inner.n))
    elif command == "solve-quadratic":
        rs = solve_quadratic(QuadCongruence(inner.a, inner.b, inner.c, inner.mod))
        value = _residue_payload(rs)
        oracle = _residue_payload(brute_quadratic(inner.a, inner.b, inner.c, inner.mod))
    elif command == "two-squares":
        scan = brute_two_squares(inner.n)
        if inner.action == "count":
            value = count_representations(inner.n)
            oracle = len(scan)
        elif inner.action == "list":
            value = [[rep.a, rep.b] for rep in all_representations(inner.n)]
            oracle = [[rep.a, rep.b] for rep in scan]
        elif inner.action == "primitive":
            value = [[rep.a, rep.b] for rep in primitive_representations(inner.n)]
            oracle = sorted(
                [rep.a, rep.b] for rep in scan
                if rep.primitive and rep.a > 0 and rep.b > 0
            )
        else:
            rep = represent_prime(inner.n)
            value = [rep.a, rep.b]
            oracle = next(
                [r.a, r.b] for r in scan if r.primitive and r.a >= r.b > 0
            )
    else:
        raise _UsageError(f"verify does not support {' '.join(request)!r}")

    agree = value == oracle
    payload = {"request": request, "value": value, "oracle": oracle, "agree": agree}
    lines = [f"value: {value}", f"oracle: {oracle}", f"agree: {str(agree).lower()}"]
    return payload, lines


_HANDLERS = {
    "jacobi": _cmd_jacobi,
    "legendre": _cmd_legendre,
    "sqrtmod": _cmd_sqrtmod,
    "solve-quadratic": _cmd_solve_quadratic,
    "solve-linear": _cmd_solve_linear,
    "two-squares": _cmd_two_squares,
    "gaussian": _cmd_gaussian,
    "pyth-triple": _cmd_pyth_triple,
    "triples": _cmd_triples,
    "cz2": _cmd_cz2,
    "zl": _cmd_zl,
    "quadruple": _cmd_quadruple,
    "quadruples": _cmd_quadruples,
}


def _inputs(args) -> dict:
    skip = {"command", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    payload, lines, status, error, code = None, [], "ok", None, 0
    try:
        if args.command == "verify":
            payload, lines = _cmd_verify(args, parser)
            if not payload["agree"]:
                status, error, code = "error", "oracle disagreement", 1
        else:
            payload, lines = _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (NumberTheoryError, ValueError, ZeroDivisionError) as exc:
        status, error, code = "error", str(exc), 1

    if args.json:
        envelope = {
            "command": args.command,
            "inputs": _inputs(args),
            "result": payload,
            "status": status,
            "error": error,
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        for line in lines:
            print(line)
        if error is not None:
            print(f"error: {error}", file=sys.stderr)
    return code


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
