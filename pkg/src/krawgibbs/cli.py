"""Command-line interface.

Usage::

    krawgibbs approx --N 4 --emit coeffs
    krawgibbs approx --N 40 --emit samples --samples 401 --x-min -20 --x-max 20
    krawgibbs steepness --N 40 --format exact
    krawgibbs steepness-table --from 400 --to 1000 --step 600 --digits 5
    krawgibbs overshoot --N 10 --digits 6
    krawgibbs overshoot-table --N 10,50,100
    krawgibbs verify --suite all
    krawgibbs gamma --digits 6

Data goes to stdout, progress and errors to stderr.  Exit status is 0 on
success, 1 when a requested check fails or the computation errors out, and
2 on bad flags.
"""

from __future__ import annotations

import argparse
import logging
import sys
from decimal import ROUND_DOWN, ROUND_HALF_EVEN
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import approx, gibbs, steepident
from .gibbs import DEFAULT_THETA_STEP, DecimalValue
from .krawtchouk import KrawtchoukFamily
from .output import render

__all__ = ["main", "build_parser"]

log = logging.getLogger("krawgibbs")

ROUNDING_NAMES = {"down": ROUND_DOWN, "half-even": ROUND_HALF_EVEN}
DEFAULT_DIGITS = 6


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def even_N(text: str) -> int:
    try:
        N = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"N must be an integer, got {text!r}") from None
    if N < 2 or N % 2:
        raise argparse.ArgumentTypeError(f"N must be even and >= 2, got {N}")
    return N


def N_list(text: str) -> list[int]:
    return [even_N(part) for part in text.split(",") if part.strip()]


def nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _range_or_list(args: argparse.Namespace) -> list[int]:
    if args.N:
        return list(args.N)
    if args.start is None or args.stop is None:
        raise ValueError("give --N or both --from and --to")
    if args.start < 2 or args.start % 2 or args.stride < 2 or args.stride % 2:
        raise ValueError("--from and --step must be even and >= 2")
    return list(range(args.start, args.stop + 1, args.stride))


# -- subcommands -------------------------------------------------------------


def cmd_approx(args: argparse.Namespace) -> int:
    if not 0 < args.p < 1:
        raise ValueError("--p must lie strictly between 0 and 1")
    N = args.N
    fam = KrawtchoukFamily(N, args.p)
    if args.emit == "coeffs":
        fa = approx.build_direct(fam)
        rows = [{"n": n, "coefficient": c} for n, c in enumerate(fa.coefficients) if c]
        _emit(render(rows, ["n", "coefficient"], args.format))
        return 0
    if args.samples < 1:
        raise ValueError("--samples must be >= 1")
    lo = args.x_min if args.x_min is not None else Fraction(0)
    hi = args.x_max if args.x_max is not None else Fraction(N, 2)
    poly = approx.sign_interpolant(N) if args.p == approx.HALF else approx.build_direct(fam).polynomial
    rounding = ROUNDING_NAMES[args.rounding]
    rows = []
    for i in range(args.samples):
        x = lo if args.samples == 1 else lo + (hi - lo) * i / (args.samples - 1)
        value = poly(x)
        rows.append({"x": x, "value": value, "decimal": DecimalValue.from_rational(value, args.digits, rounding)})
    _emit(render(rows, ["x", "value", "decimal"], args.format))
    return 0


def cmd_steepness(args: argparse.Namespace) -> int:
    exact = steepident.steepness_exact(args.N)
    decimal = DecimalValue.from_rational(exact, args.digits, ROUNDING_NAMES[args.rounding])
    if args.format == "exact":
        _emit(f"{exact}\n")
    elif args.format == "plain":
        _emit(f"{decimal}\n")
    else:
        _emit(render([{"N": args.N, "exact": exact, "decimal": decimal}], ["N", "exact", "decimal"], args.format))
    return 0


def _steepness_row(args: tuple[int, int, str]) -> dict:
    N, digits, rounding = args
    log.info("steepness N=%d", N)
    exact = steepident.steepness_exact(N)
    return {"N": N, "exact": exact, "decimal": DecimalValue.from_rational(exact, digits, rounding)}


def cmd_steepness_table(args: argparse.Namespace) -> int:
    Ns = _range_or_list(args)
    rounding = ROUNDING_NAMES[args.rounding]
    rows = gibbs.parallel_map(_steepness_row, [(N, args.digits, rounding) for N in Ns])
    _emit(render(rows, ["N", "exact", "decimal"], args.format))
    return 0


def _overshoot_row(args: tuple[int, int, Fraction, str]) -> dict:
    N, digits, step, rounding = args
    log.info("overshoot N=%d", N)
    r = gibbs.overshoot_result(N, digits, step, rounding)
    return {
        "N": N,
        "theta_lo": r.theta_lo,
        "theta_hi": r.theta_hi,
        "value": r.value,
        "decimal": r.decimal,
    }


OVERSHOOT_COLUMNS = ["N", "theta_lo", "theta_hi", "value", "decimal"]


def cmd_overshoot(args: argparse.Namespace) -> int:
    row = _overshoot_row((args.N, args.digits, args.theta_step, ROUNDING_NAMES[args.rounding]))
    if args.format == "plain":
        _emit(f"{row['decimal']}\n")
    elif args.format == "exact":
        _emit(f"{row['value']}\n")
    else:
        _emit(render([row], OVERSHOOT_COLUMNS, args.format))
    return 0


def cmd_overshoot_table(args: argparse.Namespace) -> int:
    Ns = _range_or_list(args)
    rounding = ROUNDING_NAMES[args.rounding]
    rows = gibbs.parallel_map(_overshoot_row, [(N, args.digits, args.theta_step, rounding) for N in Ns])
    _emit(render(rows, OVERSHOOT_COLUMNS, args.format))
    return 0


SUITES = ("identities", "interpolation", "kernel", "all")


def run_suite(suite: str, args: argparse.Namespace) -> list:
    reports = []
    if suite in ("identities", "all"):
        log.info("identity suite")
        reports += steepident.identity_suite(
            M_max=args.M_max,
            st_max=args.st_max,
            x_closed_max=args.x_closed_max,
            pq_max=args.pq_max,
            N_max=args.N_max,
            audit=args.audit,
        )
    if suite in ("interpolation", "all"):
        log.info("interpolation suite")
        reports += [
            approx.verify_triple_equality(args.N_max),
            approx.verify_interpolation(args.interp_max),
            approx.verify_p_independence(args.p_indep_max, args.p_list),
            approx.verify_leading_coefficient(args.interp_max),
        ]
    if suite in ("kernel", "all"):
        log.info("kernel suite")
        reports.append(approx.verify_kernel_delta(args.kernel_max, args.kernel_p_list))
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, args)
    rows = [
        {
            "name": r.name,
            "bounds": r.bounds,
            "checked": r.checked,
            "all_passed": r.all_passed,
            "first_failure": r.first_failure,
        }
        for r in reports
    ]
    _emit(render(rows, ["name", "bounds", "checked", "all_passed", "first_failure"], args.format))
    failed = [r for r in reports if not r.all_passed]
    for r in failed:
        print(f"FAILED {r.name} at index {r.first_failure}", file=sys.stderr)
    return 1 if failed else 0


def cmd_gamma(args: argparse.Namespace) -> int:
    if args.digits > 1000:
        raise ValueError("--digits must be at most 1000")
    value, bound = gibbs.gibbs_series(args.digits)
    decimal = DecimalValue.from_rational(value, args.digits, ROUNDING_NAMES[args.rounding])
    if args.format == "plain":
        _emit(f"{decimal}\n")
    else:
        _emit(render([{"digits": args.digits, "decimal": decimal, "error_bound": bound}], ["digits", "decimal", "error_bound"], args.format))
    return 0


# -- parser ------------------------------------------------------------------


def _fraction_list(text: str) -> list[Fraction]:
    return [rational(part) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krawgibbs",
        description="Exact Krawtchouk approximation of sgn: steepness, overshoot, identity checks.",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rounding(p: argparse.ArgumentParser, default: str) -> None:
        p.add_argument(
            "--rounding",
            choices=sorted(ROUNDING_NAMES),
            default=default,
            help=f"decimal rounding (default: {default}; reference tables truncate)",
        )

    def add_range(p: argparse.ArgumentParser) -> None:
        p.add_argument("--N", type=N_list, help="comma-separated even N values")
        p.add_argument("--from", dest="start", type=int)
        p.add_argument("--to", dest="stop", type=int)
        p.add_argument("--step", dest="stride", type=int, default=2)

    p = sub.add_parser("approx", help="Fourier coefficients or samples of F_N")
    p.add_argument("--N", type=even_N, required=True)
    p.add_argument("--p", type=rational, default=Fraction(1, 2), help="family parameter as a/b")
    p.add_argument("--emit", choices=("coeffs", "samples"), default="coeffs")
    p.add_argument("--samples", type=int, default=101, help="number of equispaced sample points")
    p.add_argument("--x-min", type=rational, default=None, help="first sample abscissa (default 0)")
    p.add_argument("--x-max", type=rational, default=None, help="last sample abscissa (default N/2)")
    p.add_argument("--digits", type=nonneg, default=DEFAULT_DIGITS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_rounding(p, "half-even")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("steepness", help="exact F_N'(0)")
    p.add_argument("--N", type=even_N, required=True)
    p.add_argument("--digits", type=nonneg, default=DEFAULT_DIGITS)
    p.add_argument("--format", choices=("plain", "exact", "csv", "json"), default="plain")
    add_rounding(p, "down")
    p.set_defaults(func=cmd_steepness)

    p = sub.add_parser("steepness-table", help="F_N'(0) over a range of N")
    add_range(p)
    p.add_argument("--digits", type=nonneg, default=DEFAULT_DIGITS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_rounding(p, "down")
    p.set_defaults(func=cmd_steepness_table)

    p = sub.add_parser("overshoot", help="F_N at its first positive critical point")
    p.add_argument("--N", type=even_N, required=True)
    p.add_argument("--digits", type=nonneg, default=DEFAULT_DIGITS)
    p.add_argument("--theta-step", type=rational, default=DEFAULT_THETA_STEP, help="sign-scan step as a/b")
    p.add_argument("--format", choices=("plain", "exact", "csv", "json"), default="plain")
    add_rounding(p, "down")
    p.set_defaults(func=cmd_overshoot)

    p = sub.add_parser("overshoot-table", help="overshoot over a list or range of N")
    add_range(p)
    p.add_argument("--digits", type=nonneg, default=DEFAULT_DIGITS)
    p.add_argument("--theta-step", type=rational, default=DEFAULT_THETA_STEP)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_rounding(p, "down")
    p.set_defaults(func=cmd_overshoot_table)

    p = sub.add_parser("verify", help="exhaustive exact identity sweeps")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--M-max", type=nonneg, default=200, help="bound for the C/D, X and Wallis sweeps")
    p.add_argument("--st-max", type=nonneg, default=500, help="bound for S(M) = T(M)")
    p.add_argument("--x-closed-max", type=nonneg, default=100)
    p.add_argument("--pq-max", type=nonneg, default=12, help="bound for the super Catalan identity")
    p.add_argument("--N-max", type=nonneg, default=40, help="bound for the double-sum lemma and triple equality")
    p.add_argument("--interp-max", type=nonneg, default=60, help="bound for interpolation and leading coefficient")
    p.add_argument("--p-indep-max", type=nonneg, default=20)
    p.add_argument("--p-list", type=_fraction_list, default=_fraction_list("1/2,1/3,3/5,9/10"))
    p.add_argument("--kernel-max", type=nonneg, default=12)
    p.add_argument("--kernel-p-list", type=_fraction_list, default=_fraction_list("1/2,2/5"))
    p.add_argument("--audit", action="store_true", help="brute-force sides bypass the binomial cache")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gamma", help="classical Gibbs constant")
    p.add_argument("--digits", type=nonneg, default=DEFAULT_DIGITS)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    add_rounding(p, "half-even")
    p.set_defaults(func=cmd_gamma)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(message)s",
    )
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except ValueError as exc:
        # NoCriticalPointError, parameter violations, bad flag combinations
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
