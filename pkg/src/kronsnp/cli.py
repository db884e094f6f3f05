"""Command-line interface.

Exit codes: 0 success or an affirmative verdict, 10 a negative verdict,
2 usage errors, 3 precondition or size errors, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import format_partition, kron_product, parse_partition
from .errors import InvalidInputError, KronSNPError
from .horn import lr_consistent_triples
from .kronecker import monomial_support, rosas_kron_tworow_pair, rosas_kron_tworow_triple
from .plethysm import plethysm, plethysm_max_monomial
from .polytopes import build_script_P, find_half_integer_point, find_integer_point, lp_feasible
from .snp import snp_check_kron
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_NEGATIVE = 10
EXIT_USAGE = 2


def _composition(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.strip("()[]").split(",") if t.strip())
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse composition {text!r}") from exc
    if any(v < 0 for v in vals):
        raise InvalidInputError(f"negative entry in {text!r}")
    return vals


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_kron(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if args.monomials:
        U = monomial_support(lam, mu, args.monomials)
        pts = sorted(U.sorted_points, reverse=True)
        _emit(args, U.to_json(), "\n".join(format_partition(p) if any(p) else "0" for p in pts))
        return EXIT_OK
    exp = kron_product(lam, mu)
    _emit(args, exp.to_json(), str(exp))
    return EXIT_OK


def cmd_snp(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    rep = snp_check_kron(lam, mu, args.vars, fast_path=args.fast_path)
    lines = [f"saturated: {'yes' if rep.saturated else 'no'}"]
    for w in rep.witnesses:
        combo = " + ".join(f"{c['weight']}*({','.join(map(str, c['vertex']))})" for c in w["combination"])
        lines.append(f"missing ({','.join(map(str, w['point']))}) = {combo}")
    _emit(args, rep.to_json(), "\n".join(lines))
    return EXIT_OK if rep.saturated else EXIT_NEGATIVE


def cmd_horn(args) -> int:
    triples = lr_consistent_triples(args.r, cap=args.cap)
    payload = {"r": args.r, "triples": [[list(I), list(J), list(K)] for I, J, K in triples]}
    text = "\n".join(f"I={list(I)} J={list(J)} K={list(K)}" for I, J, K in triples)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_polytope(args) -> int:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    a = _composition(args.a)
    system = build_script_P(mu, nu, a)
    feasible = lp_feasible(system)
    point = find_integer_point(system)
    half = find_half_integer_point(system) if args.half else None
    payload = {"feasible": feasible, "integer_point": list(point) if point else None,
               "rows": len(system.le) + len(system.eq)}
    if args.half:
        payload["half_integer_point"] = [_frac(x) for x in half] if half else None
    if args.system:
        payload["system"] = system.to_json()
    lines = [f"feasible: {'yes' if feasible else 'no'}",
             f"integer point: {'(' + ','.join(map(str, point)) + ')' if point else 'none'}"]
    if args.half:
        lines.append(f"half-integer point: {'(' + ','.join(_frac(x) for x in half) + ')' if half else 'none'}")
    if args.system:
        lines.append(system.to_lp())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if point is not None else EXIT_NEGATIVE


def cmd_rosas(args) -> int:
    trio = [parse_partition(x) for x in (args.lam, args.mu, args.nu)]
    if all(len(p) <= 2 for p in trio):
        value, formula = rosas_kron_tworow_triple(*trio), "two-row triple"
    else:
        two = [p for p in trio if len(p) <= 2]
        rest = [p for p in trio if len(p) > 2]
        if len(two) < 2 or len(rest) != 1:
            raise InvalidInputError("need two partitions with at most two rows")
        beta, gamma = sorted(two, key=lambda p: (p + (0, 0))[1], reverse=True)
        value, formula = rosas_kron_tworow_pair(beta, gamma, rest[0]), "two-row pair"
    _emit(args, {"g": value, "formula": formula}, str(value))
    return EXIT_OK


def cmd_plethysm(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    exp = plethysm(lam, mu, nvars=args.vars)
    payload = exp.to_json()
    payload["max_monomial"] = list(plethysm_max_monomial(lam, mu))
    text = str(exp)
    if exp.nvars is not None:
        text += f"\n(truncated to {exp.nvars} variables)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = {"n": args.n, "k": args.k, "p": args.p, "threads": args.threads, "fixture": args.fixture}
    if args.time is not None:
        opts["time"] = args.time
    report = run_suite(args.suite, opts)
    lines = [f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}" for c in report["checks"]]
    lines.append(f"{args.suite}: {'pass' if report['passed'] else 'FAIL'}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if report["passed"] else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    parser = argparse.ArgumentParser(prog="kronsnp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", parents=[common], help="Kronecker product s_lam * s_mu")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--monomials", type=int, metavar="K", help="print the monomial support in K variables")
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("snp", parents=[common], help="SNP check for s_lam * s_mu")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--vars", type=int, required=True, metavar="K")
    p.add_argument("--fast-path", action="store_true", help="accept a unique dominance-maximal term")
    p.set_defaults(func=cmd_snp)

    p = sub.add_parser("horn", parents=[common], help="LR-consistent triples over [r]")
    p.add_argument("r", type=int)
    p.add_argument("--cap", type=int, default=8)
    p.set_defaults(func=cmd_horn)

    p = sub.add_parser("polytope", parents=[common], help="three-variable polytope for two-row mu, three-row nu")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("a")
    p.add_argument("--half", action="store_true", help="also look for a half-integer point")
    p.add_argument("--system", action="store_true", help="print the inequalities")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("rosas", parents=[common], help="closed formulas for two-row Kronecker coefficients")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(func=cmd_rosas)

    p = sub.add_parser("plethysm", parents=[common], help="plethysm s_lam[s_mu]")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--vars", type=int, metavar="N")
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--fixture", metavar="PATH", help="Horn triple list to compare against")
    p.add_argument("--time", type=float, metavar="SECONDS", help="wall-clock budget")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except KronSNPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
