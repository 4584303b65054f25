"""Command line interface.

Exit codes: 0 success, 1 usage or input error, 2 a law mismatch was found,
3 an internal invariant failed (including oracle disagreement).
"""

import argparse
import json
import sys

from . import laws
from .alpha import alpha_triple
from .arith import four_one_moduli, jacobi, primes_up_to
from .errors import DomainError, InvariantError
from .genus import explore
from .pell import fundamental_negative_unit
from .quartic import quartic_symbol_composite, quartic_symbol_two
from .twosquares import two_squares_composite

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3
MAX_MAGNITUDE = 2**48


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}")
    if abs(value) > MAX_MAGNITUDE:
        raise argparse.ArgumentTypeError(f"{value} exceeds the supported magnitude 2**48")
    return value


def _dumps(obj):
    return json.dumps(obj, separators=(", ", ": "))


def _sign(v):
    return f"{v:+d}"


def build_parser():
    parser = _Parser(prog="ratquartic", description="Rational quartic reciprocity toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sym = sub.add_parser("symbol", help="evaluate a residue symbol")
    symsub = sym.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    j = symsub.add_parser("jacobi", help="Jacobi symbol (a/n)")
    j.add_argument("a", type=_int)
    j.add_argument("n", type=_int)
    q = symsub.add_parser("quartic", help="quartic symbol (a/m)_4")
    q.add_argument("a", type=_int)
    q.add_argument("m", type=_int)
    q2 = symsub.add_parser("quartic2", help="(p/2)_4 for p = 1 mod 8")
    q2.add_argument("p", type=_int)

    for name, help_text in (
        ("decompose", "canonical m = a^2 + b^2"),
        ("alpha", "triple A B C with A^2 = m(B^2 + C^2)"),
        ("unit", "t u with t^2 - m u^2 = -1"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("m", type=_int)

    ver = sub.add_parser("verify", help="verify one law instance")
    ver.add_argument("law", choices=["ec", "burde", "gauss2", "scholz", "scholz-mutual", "furuta"])
    ver.add_argument("--m", type=_int)
    second = ver.add_mutually_exclusive_group()
    second.add_argument("--n", type=_int)
    second.add_argument("--p", type=_int)
    ver.add_argument("--split", type=_int, action="append", default=[],
                     help="furuta: divisor r of m adding the (eps_r/n)(eps_s/n) side")
    ver.add_argument("--format", choices=["json", "table"], default="table")
    ver.add_argument("--oracle", action="store_true", help="re-derive every side by brute force")

    sw = sub.add_parser("sweep", help="verify a law over ranges")
    sw.add_argument("law", choices=["ec", "burde", "gauss2", "scholz", "scholz-mutual", "furuta"])
    sw.add_argument("--m-max", type=_int)
    bound = sw.add_mutually_exclusive_group()
    bound.add_argument("--n-max", type=_int)
    bound.add_argument("--p-max", type=_int)
    sw.add_argument("--even", action="store_true", help="ec: use moduli m = 8m' <= m-max")
    sw.add_argument("--primes", action="store_true", help="restrict m and n to primes")
    sw.add_argument("--jobs", type=_int, default=1)
    sw.add_argument("--out", help="write every report as JSON lines to this path")

    gen = sub.add_parser("genus", help="C4-splittings of a discriminant")
    gen.add_argument("--d", type=_int, required=True)
    gen.add_argument("--format", choices=["json", "table"], default="table")
    return parser


def _report_line(report, fmt, oracle=None):
    if fmt == "json":
        obj = report.to_json()
        if oracle is not None:
            obj["oracle_sides"] = oracle
        return _dumps(obj)
    inputs = " ".join(f"{k}={v}" for k, v in report.inputs.items())
    if report.skipped:
        return f"{report.law:14s} {inputs}  skipped: {report.skipped_reason}"
    verdict = "match" if report.match else "MISMATCH"
    line = f"{report.law:14s} {inputs}  sides: {' '.join(map(_sign, report.sides))}  {verdict}"
    if oracle is not None:
        line += f"  oracle: {' '.join(map(_sign, oracle))}"
    return line


def _cmd_verify(args, out):
    law = args.law.replace("-", "_")
    if law == "gauss2":
        p = args.p if args.p is not None else args.m
        if p is None:
            raise UsageError("gauss2 needs --p")
        report = laws.verify_gauss2(p)
    else:
        other = args.p if args.p is not None else args.n
        if args.m is None or other is None:
            raise UsageError(f"{args.law} needs --m and --n/--p")
        if law == "ec":
            report = laws.verify_ec(args.m, other)
        elif law == "furuta":
            report = laws.verify_furuta(args.m, other, tuple(args.split))
        else:
            report = laws.verify(law, m=args.m, n=other)
    oracle = None
    if args.oracle:
        oracle = laws.oracle_sides(report)
        if oracle != report.sides:
            print(_report_line(report, args.format, oracle), file=out)
            raise InvariantError(f"oracle sides {oracle} differ from {report.sides}")
    print(_report_line(report, args.format, oracle), file=out)
    if report.skipped or report.match:
        return EXIT_OK
    return EXIT_MISMATCH


def sweep_ranges(law, m_max=None, n_max=None, even=False, primes=False):
    """Moduli enumerated by the ``sweep`` subcommand."""
    law = law.replace("-", "_")
    if law == "gauss2":
        bound = n_max if n_max is not None else m_max
        if bound is None:
            raise UsageError("gauss2 sweep needs --p-max")
        return [], [p for p in primes_up_to(bound) if p % 8 == 1]
    if m_max is None:
        raise UsageError("sweep needs --m-max")
    n_max = m_max if n_max is None else n_max
    if law == "ec":
        if even:
            ms = [8 * k for k in four_one_moduli(m_max // 8)]
        else:
            ms = four_one_moduli(m_max)
        if primes:
            ms = [m for m in ms if len(laws._parts(m)) == 1]
        return ms, [p for p in primes_up_to(n_max) if p % 4 == 1]
    ms, ns = four_one_moduli(m_max), four_one_moduli(n_max)
    if primes:
        ms = [m for m in ms if len(laws._parts(m)) == 1]
        ns = [n for n in ns if len(laws._parts(n)) == 1]
    return ms, ns


def _cmd_sweep(args, out):
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    n_max = args.p_max if args.p_max is not None else args.n_max
    ms, ns = sweep_ranges(args.law, args.m_max, n_max, args.even, args.primes)
    result = laws.sweep(args.law, ms, ns, jobs=args.jobs, keep_reports=bool(args.out))
    if args.out:
        with open(args.out, "w") as fh:
            for r in result.reports:
                fh.write(_dumps(r.to_json()) + "\n")
    summary = result.summary()
    summary["counterexamples"] = len(result.counterexamples)
    print(_dumps(summary), file=out)
    for r in result.counterexamples:
        print(_dumps(r.to_json()), file=out)
    return EXIT_MISMATCH if result.counterexamples else EXIT_OK


def _cmd_genus(args, out):
    report = explore(args.d)
    if args.format == "json":
        print(_dumps(report.to_json()), file=out)
        return EXIT_OK
    print(f"d = {report.d}", file=out)
    for s in report.splits:
        flag = "C4" if s.is_c4 else "--"
        extra = "" if s.scholz_equal is None else f"  scholz_equal={s.scholz_equal}"
        print(f"  {s.d1} * {s.d2}  {flag}{extra}", file=out)
    print(f"c4_count = {report.c4_count}  real_count = {report.real_count}", file=out)
    return EXIT_OK


def _dispatch(args, out):
    if args.command == "symbol":
        if args.kind == "jacobi":
            value = jacobi(args.a, args.n)
        elif args.kind == "quartic":
            value = quartic_symbol_composite(args.a, args.m)
        else:
            value = quartic_symbol_two(args.p)
        print(value, file=out)
        return EXIT_OK
    if args.command == "decompose":
        rep = two_squares_composite(args.m)
        print(rep.a, rep.b, file=out)
        return EXIT_OK
    if args.command == "alpha":
        t = alpha_triple(args.m)
        print(t.A, t.B, t.C, file=out)
        return EXIT_OK
    if args.command == "unit":
        e = fundamental_negative_unit(args.m)
        print(e.t, e.u, file=out)
        return EXIT_OK
    if args.command == "verify":
        return _cmd_verify(args, out)
    if args.command == "sweep":
        return _cmd_sweep(args, out)
    return _cmd_genus(args, out)


def run(argv=None, out=None, err=None):
    """Execute one command; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=err)
        return EXIT_INTERNAL
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main():
    sys.exit(run())
