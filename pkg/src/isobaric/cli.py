"""Command line front end.

Exit codes: 0 success (or every check passed), 1 a check failed,
2 usage or input error.  Results go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
import time

from . import checks
from .io import dumps, poly_from_dict, poly_to_dict, poly_to_latex
from .kernel import scan
from .lattice import build_lattice, intersection_nodes, lattice_to_dot, string_lattice_union
from .operators import OperatorSpec, apply_operator
from .poly import as_rational
from .strings import decompose, expand_string, generator_of
from .weights import fibonacci_poly, hook_reflect, lucas_poly, wip

# Flags whose values may legitimately start with "-" (e.g. "--a-grid -1,0,1").
_VALUE_FLAGS = {"--a-grid", "--m-grid", "--omega", "--a", "--m", "--monomial"}


class UsageError(Exception):
    pass


def _rationals(text):
    try:
        return [as_rational(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _rational(text):
    try:
        return as_rational(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3 or -1/2, got {text!r}") from None


def _ints(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_source(p, required=False):
    p.add_argument("--seq", choices=["F", "G", "hook", "custom"], required=required)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, help="hook leg length (hook sequence only)")
    p.add_argument("--omega", type=_rationals, help="weights w1,w2,... (custom sequence only)")


def _generate(args):
    if args.n is None or args.k is None:
        raise UsageError("--seq needs --n and --k")
    if args.n < 1 or args.k < 1:
        raise UsageError("--n and --k must be positive")
    if args.seq == "hook":
        if args.r is None:
            raise UsageError("--seq hook needs --r")
        return hook_reflect(args.n, args.r, args.k)
    if args.r is not None:
        raise UsageError("--r only applies to --seq hook")
    if args.seq == "custom":
        if args.omega is None:
            raise UsageError("--seq custom needs --omega")
        return wip(args.n, args.k, args.omega)
    if args.omega is not None:
        raise UsageError("--omega only applies to --seq custom")
    return fibonacci_poly(args.n, args.k) if args.seq == "F" else lucas_poly(args.n, args.k)


def _load_poly(args):
    if args.seq is not None:
        if getattr(args, "infile", None):
            raise UsageError("give either --seq or --in, not both")
        return _generate(args)
    fh = open(args.infile) if getattr(args, "infile", None) else sys.stdin
    try:
        return poly_from_dict(json.load(fh))
    except (json.JSONDecodeError, ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"malformed polynomial JSON: {exc}") from None
    finally:
        if fh is not sys.stdin:
            fh.close()


def _emit_poly(p, fmt):
    print(poly_to_latex(p) if fmt == "latex" else dumps(poly_to_dict(p)))


def cmd_gen(args):
    _emit_poly(_generate(args), args.format)
    return 0


def cmd_apply(args):
    p = _load_poly(args)
    a = args.a if args.a is not None else [1] * p.k
    if len(a) != p.k:
        raise UsageError(f"--a has {len(a)} entries but the polynomial has k={p.k}")
    if p.k < 2:
        raise UsageError("operators need k >= 2")
    out = apply_operator(OperatorSpec(tuple(a), args.m), p)
    _emit_poly(out, args.format)
    if args.check_zero:
        return 0 if out.is_zero() else 1
    return 0


def cmd_strings(args):
    p = _load_poly(args)
    if p.k < 2:
        raise UsageError("strings need k >= 2")
    print(dumps([ws.to_dict() for ws in decompose(p)]))
    return 0


def cmd_lattice(args):
    alpha = args.monomial
    if any(a < 0 for a in alpha) or not any(alpha):
        raise UsageError("--monomial must be a nonzero vector of nonnegative integers")
    if args.intersections:
        fam = expand_string(generator_of(alpha))
        if len(fam) < 2:
            raise UsageError(f"the string through {alpha} has a single element")
        print(dumps([list(n) for n in intersection_nodes(fam)]))
        return 0
    lat = string_lattice_union(expand_string(generator_of(alpha))) if args.string else build_lattice(alpha)
    if args.format == "dot":
        sys.stdout.write(lattice_to_dot(lat))
    else:
        print(dumps(lat.to_dict()))
    return 0


def cmd_scan(args):
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    if args.N < 3:
        raise UsageError("--N must be at least 3")
    reports = scan(args.a_grid, args.m_grid, args.k, args.N, include_trivial=args.all)
    print(dumps([r.to_dict() for r in reports]))
    return 0


def cmd_verify(args):
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    failed = 0
    width = 56
    for fn in checks.SUITES[args.suite]:
        start = time.perf_counter()
        rows = fn(args.n_max)
        elapsed = time.perf_counter() - start
        for name, ok, detail in rows:
            failed += not ok
            print(f"{'PASS' if ok else 'FAIL'}  {name:<{width}} {detail}")
        print(f"      ({fn.__name__} {elapsed:.2f}s)", file=sys.stderr)
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}")
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="isobaric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a WIP (F, G, hook reflect or custom weights)")
    _add_source(p, required=True)
    p.add_argument("--format", choices=["json", "latex"], default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("apply", help="apply D11 - sum a_j t_j D2j - m D2")
    _add_source(p)
    p.add_argument("--in", dest="infile", help="polynomial JSON file (default: stdin)")
    p.add_argument("--m", type=_rational, required=True)
    p.add_argument("--a", type=_rationals, help="a_1,...,a_k (default all ones)")
    p.add_argument("--check-zero", action="store_true", help="exit 1 unless the result is zero")
    p.add_argument("--format", choices=["json", "latex"], default="json")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("strings", help="decompose a polynomial into weighted strings")
    _add_source(p)
    p.add_argument("--in", dest="infile", help="polynomial JSON file (default: stdin)")
    p.set_defaults(func=cmd_strings)

    p = sub.add_parser("lattice", help="differential lattice of a monomial")
    p.add_argument("--monomial", type=_ints, required=True, help="exponent vector a1,a2,...")
    p.add_argument("--intersections", action="store_true",
                   help="first-meet nodes along the string through the monomial")
    p.add_argument("--string", action="store_true", help="union over the string through the monomial")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("scan", help="kernel classification over an (a, m) grid")
    p.add_argument("--a-grid", type=_rationals, required=True, help="values tried for every a_j")
    p.add_argument("--m-grid", type=_rationals, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, default=8, help="highest degree checked (default 8)")
    p.add_argument("--all", action="store_true", help="also print trivial reports")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run verification suites and print a pass/fail table")
    p.add_argument("--suite", choices=sorted(checks.SUITES), default="all")
    p.add_argument("--n-max", type=int, default=12)
    p.set_defaults(func=cmd_verify)
    return parser


def _join_negative_values(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    try:
        return args.func(args)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"isobaric {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
