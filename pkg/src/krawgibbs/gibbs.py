"""Overshoot of ``F_N`` at its first positive critical point, and reference constants.

The critical point search works on the integer form ``F_N = P / N!``: the sign
of ``P'`` at a dyadic point is the sign of an integer Horner sum, so every
comparison is exact.  Constants (pi, log 4, the classical Gibbs constant) come
from fixed-point integer series with guard digits.
"""

from __future__ import annotations

import logging
import os
from decimal import ROUND_DOWN, ROUND_HALF_EVEN
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from .approx import sign_interpolant_integer_form
from .combinat import Rational, as_fraction
from .steepident import steepness_exact

__all__ = [
    "DecimalValue",
    "OvershootResult",
    "NoCriticalPointError",
    "DEFAULT_THETA_STEP",
    "TABLE_ROUNDING",
    "pi_fixed",
    "log2_fixed",
    "log4",
    "gibbs_series",
    "gibbs_constant",
    "smallest_critical_point",
    "overshoot_result",
    "overshoot",
    "steepness_table",
    "overshoot_table",
    "parallel_map",
    "worker_count",
]

log = logging.getLogger(__name__)

DEFAULT_THETA_STEP = Fraction(1, 8)
GUARD_DIGITS = 10
WORKERS_ENV = "KRAWGIBBS_WORKERS"
# reference tables print truncated digits (e.g. 1.3837975 as 1.38379)
TABLE_ROUNDING = ROUND_DOWN
_MODES = (ROUND_HALF_EVEN, ROUND_DOWN)


# -- decimal rendering -------------------------------------------------------


@dataclass(frozen=True)
class DecimalValue:
    """``significand * 10**exponent``, rounded from an exact rational.

    ``rounding`` is ``decimal.ROUND_HALF_EVEN`` (default) or
    ``decimal.ROUND_DOWN`` (truncation toward zero).
    """

    significand: int
    exponent: int
    rounding: str = ROUND_HALF_EVEN

    @classmethod
    def from_rational(cls, value: Rational, places: int, rounding: str = ROUND_HALF_EVEN) -> "DecimalValue":
        if places < 0:
            raise ValueError("decimal places must be nonnegative")
        if rounding not in _MODES:
            raise ValueError(f"unsupported rounding mode {rounding!r}")
        value = as_fraction(value)
        scaled = abs(value) * 10**places
        q, r = divmod(scaled.numerator, scaled.denominator)
        if rounding == ROUND_HALF_EVEN:
            twice = 2 * r
            if twice > scaled.denominator or (twice == scaled.denominator and q % 2):
                q += 1
        return cls(-q if value < 0 else q, -places, rounding)

    @property
    def places(self) -> int:
        return -self.exponent

    def to_fraction(self) -> Fraction:
        return Fraction(self.significand) * Fraction(10) ** self.exponent

    def __str__(self) -> str:
        sign = "-" if self.significand < 0 else ""
        digits = str(abs(self.significand))
        if self.places == 0:
            return sign + digits
        digits = digits.rjust(self.places + 1, "0")
        return f"{sign}{digits[:-self.places]}.{digits[-self.places:]}"


# -- fixed-point series engine ----------------------------------------------


def _arctan_inv(x: int, scale: int) -> int:
    """``arctan(1/x) * scale`` by the alternating Gregory series (x >= 2)."""
    total = 0
    power = scale // x
    x2 = x * x
    k = 0
    while power:
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        power //= x2
        k += 1
    return total


def pi_fixed(digits: int) -> int:
    """``pi * 10**digits`` truncated, via Machin's arctangent formula."""
    scale = 10 ** (digits + GUARD_DIGITS)
    value = 16 * _arctan_inv(5, scale) - 4 * _arctan_inv(239, scale)
    return value // 10**GUARD_DIGITS


def _atanh_inv(x: int, scale: int) -> int:
    """``atanh(1/x) * scale`` (x >= 2)."""
    total = 0
    power = scale // x
    x2 = x * x
    k = 0
    while power:
        total += power // (2 * k + 1)
        power //= x2
        k += 1
    return total


def log2_fixed(digits: int) -> int:
    """``log 2 * 10**digits`` truncated, from ``log 2 = 2 atanh(1/3)``."""
    scale = 10 ** (digits + GUARD_DIGITS)
    return 2 * _atanh_inv(3, scale) // 10**GUARD_DIGITS


def log4(digits: int = 50) -> Fraction:
    """``log 4`` to within ``10**-digits``."""
    return Fraction(2 * log2_fixed(digits + 1), 10 ** (digits + 1))


def gibbs_series(digits: int) -> tuple[Fraction, Fraction]:
    """Classical Gibbs constant ``(2/pi) Si(pi)`` with a certified error bound.

    ``Si(pi) = sum_k (-1)^k pi^(2k+1) / ((2k+1) (2k+1)!)`` is summed in fixed
    point until the next term drops below one unit at the working precision.
    Returns ``(approximation, bound)``: the bound is the alternating-series
    remainder (first omitted term) plus the accumulated truncation error.
    """
    if not 0 <= digits <= 1000:
        raise ValueError("digits must lie in 0..1000")
    work = digits + GUARD_DIGITS
    scale = 10**work
    pi = pi_fixed(work)
    pi_sq = pi * pi // scale
    power = pi  # pi^(2k+1) / (2k+1)!, fixed point
    total = 0
    k = 0
    ops = 0
    while True:
        term = power // (2 * k + 1)
        if term == 0:
            break
        total += -term if k % 2 else term
        k += 1
        power = power * pi_sq // scale // ((2 * k) * (2 * k + 1))
        ops += 4
    remainder = power // (2 * k + 1) + 1
    gamma = 2 * total * scale // pi
    # truncation: each fixed-point step loses < 1 ulp, pi itself is off by < 1 ulp
    bound = Fraction(remainder + 4 * ops + 8, scale)
    return Fraction(gamma, scale), bound


def gibbs_constant(digits: int) -> DecimalValue:
    """``(2/pi) int_0^pi sin(t)/t dt`` rounded to ``digits`` decimal places."""
    value, _ = gibbs_series(digits)
    return DecimalValue.from_rational(value, digits)


# -- critical point isolation ------------------------------------------------


class NoCriticalPointError(ValueError):
    pass


@dataclass(frozen=True)
class OvershootResult:
    """Dyadic interval around the first positive critical point and ``F_N`` at its midpoint."""

    N: int
    theta_lo: Fraction
    theta_hi: Fraction
    value: Fraction
    digits: Optional[int] = None
    rounding: str = ROUND_HALF_EVEN

    @property
    def midpoint(self) -> Fraction:
        return (self.theta_lo + self.theta_hi) / 2

    @property
    def width(self) -> Fraction:
        return self.theta_hi - self.theta_lo

    @property
    def decimal(self) -> DecimalValue:
        if self.digits is None:
            raise ValueError("no precision was requested for this result")
        return DecimalValue.from_rational(self.value, self.digits, self.rounding)


def _sign_at(nums: Sequence[int], x: Fraction) -> int:
    # sign of sum_i nums[i] x^i, scaled by the positive b^deg
    a, b = x.numerator, x.denominator
    acc = 0
    bpow = 1
    for c in reversed(nums):
        acc = acc * a + c * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


def _value_at(nums: Sequence[int], den: int, x: Fraction) -> Fraction:
    a, b = x.numerator, x.denominator
    acc = 0
    bpow = 1
    for c in reversed(nums):
        acc = acc * a + c * bpow
        bpow *= b
    return Fraction(acc, den * (bpow // b))


class _Approximant:
    """Integer form of ``F_N`` and of its derivative."""

    def __init__(self, N: int) -> None:
        self.N = N
        self.nums, self.den = sign_interpolant_integer_form(N)
        self.dnums = [i * c for i, c in enumerate(self.nums)][1:]

    def slope_sign(self, x: Fraction) -> int:
        return _sign_at(self.dnums, x)

    def value(self, x: Fraction) -> Fraction:
        return _value_at(self.nums, self.den, x)


def _bracket(f: _Approximant, step: Fraction) -> tuple[Fraction, Fraction]:
    limit = Fraction(f.N, 2)
    lo = Fraction(0)
    x = step
    while x <= limit:
        if f.slope_sign(x) <= 0:
            return lo, x
        lo = x
        x += step
    raise NoCriticalPointError(f"no critical point found for N={f.N} in (0, {limit}]")


def _straddle(f: _Approximant, root: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    # root is an exact zero of the slope; shrink a symmetric interval around it
    delta = tol / 2
    while not (f.slope_sign(root - delta) > 0 and f.slope_sign(root + delta) < 0):
        delta /= 2
    return root - delta, root + delta


def _refine(f: _Approximant, lo: Fraction, hi: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect ``[lo, hi]`` (slope > 0 at lo, <= 0 at hi) down to width ``tol``."""
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = f.slope_sign(mid)
        if s > 0:
            lo = mid
        elif s < 0:
            hi = mid
        else:
            return _straddle(f, mid, tol)
    if f.slope_sign(hi) == 0:
        return _straddle(f, hi, tol)
    return lo, hi


def _check_step(step: Rational) -> Fraction:
    step = as_fraction(step)
    if step <= 0:
        raise ValueError("scan step must be positive")
    return step


def smallest_critical_point(N: int, tol: Rational, step: Rational = DEFAULT_THETA_STEP) -> OvershootResult:
    """Isolate the first positive zero of ``F_N'`` in an interval of width ``<= tol``.

    A fixed-step sign scan from ``step`` finds the first non-positive slope;
    bisection with dyadic midpoints (for a dyadic step) then narrows it.
    """
    if N < 2 or N % 2:
        raise ValueError(f"N must be even and >= 2, got {N}")
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    f = _Approximant(N)
    lo, hi = _bracket(f, _check_step(step))
    lo, hi = _refine(f, lo, hi, tol)
    return OvershootResult(N, lo, hi, f.value((lo + hi) / 2))


def overshoot_result(
    N: int,
    digits: int = 6,
    step: Rational = DEFAULT_THETA_STEP,
    rounding: str = ROUND_HALF_EVEN,
) -> OvershootResult:
    """``F_N(theta_N)`` with the printed digits certified stable across the interval.

    The interval starts at width ``10**-(digits+6)`` and is halved until
    ``F_N`` at both endpoints and at the midpoint renders to the same digits.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    if N < 2 or N % 2:
        raise ValueError(f"N must be even and >= 2, got {N}")
    f = _Approximant(N)
    tol = Fraction(1, 10 ** (digits + 6))
    lo, hi = _bracket(f, _check_step(step))
    while True:
        lo, hi = _refine(f, lo, hi, tol)
        at_lo = DecimalValue.from_rational(f.value(lo), digits, rounding)
        at_hi = DecimalValue.from_rational(f.value(hi), digits, rounding)
        mid_value = f.value((lo + hi) / 2)
        if at_lo == at_hi == DecimalValue.from_rational(mid_value, digits, rounding):
            return OvershootResult(N, lo, hi, mid_value, digits, rounding)
        log.debug("N=%d: digits unstable at width %s, halving tolerance", N, hi - lo)
        tol /= 2


def overshoot(
    N: int,
    digits: int = 6,
    step: Rational = DEFAULT_THETA_STEP,
    rounding: str = ROUND_HALF_EVEN,
) -> DecimalValue:
    return overshoot_result(N, digits, step, rounding).decimal


# -- tables ------------------------------------------------------------------

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """Worker processes for table commands; ``KRAWGIBBS_WORKERS`` overrides the default of 1."""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return n


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> list[R]:
    """Order-preserving map, fanned out over processes when more than one worker is set."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(func, items))


def _steepness_row(args: tuple[int, int, str]) -> tuple[int, DecimalValue]:
    N, digits, rounding = args
    log.info("steepness N=%d", N)
    return N, DecimalValue.from_rational(steepness_exact(N), digits, rounding)


def steepness_table(
    N_list: Iterable[int], digits: int = 5, rounding: str = TABLE_ROUNDING
) -> list[tuple[int, DecimalValue]]:
    """Rows ``(N, F_N'(0))`` in the order given, truncated like the reference table by default."""
    return parallel_map(_steepness_row, [(N, digits, rounding) for N in N_list])


def _overshoot_row(args: tuple[int, int, Fraction, str]) -> tuple[int, DecimalValue]:
    N, digits, step, rounding = args
    log.info("overshoot N=%d", N)
    return N, overshoot(N, digits, step, rounding)


def overshoot_table(
    N_list: Iterable[int],
    digits: int = 6,
    step: Rational = DEFAULT_THETA_STEP,
    rounding: str = TABLE_ROUNDING,
) -> list[tuple[int, DecimalValue]]:
    step = _check_step(step)
    return parallel_map(_overshoot_row, [(N, digits, step, rounding) for N in N_list])
