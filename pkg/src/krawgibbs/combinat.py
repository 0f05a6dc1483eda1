"""Exact combinatorial scalars.

Every value is a :class:`fractions.Fraction` (always in lowest terms) or a
plain ``int``.  Integer factorials and binomials are memoized; binomials with
a rational upper argument are always evaluated as a falling-factorial
product.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "as_fraction",
    "factorial",
    "int_binomial",
    "binomial",
    "binomial_product",
    "falling_factorial",
    "catalan",
    "super_catalan",
    "t_number",
    "forward_difference",
    "iterated_difference",
]


def as_fraction(value: Rational | str) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean value {value!r}")
    return Fraction(value)


class _FactorialTable:
    """Growable factorial table; extension happens under a lock."""

    def __init__(self) -> None:
        self._values = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"factorial of negative integer {n}")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            if n >= len(values):
                # build a fresh list and publish it in one assignment, so a
                # reader never sees a partially extended table
                grown = list(values)
                acc = grown[-1]
                for i in range(len(grown), n + 1):
                    acc *= i
                    grown.append(acc)
                self._values = grown
                values = grown
        return values[n]


factorial = _FactorialTable()


@lru_cache(maxsize=None)
def int_binomial(n: int, k: int) -> int:
    """Binomial coefficient for integer arguments, zero outside ``0 <= k <= n``.

    A negative ``n`` follows the falling-factorial convention.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # binom(-m, k) = (-1)^k binom(m + k - 1, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


def falling_factorial(a: Rational, k: int) -> Fraction:
    """``a (a-1) ... (a-k+1)``; the empty product is 1."""
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    a = as_fraction(a)
    num, den = a.numerator, a.denominator
    acc = 1
    for i in range(k):
        acc *= num - i * den
    return Fraction(acc, den**k)


def binomial_product(a: Rational, k: int) -> Fraction:
    """Generalized binomial by direct product, bypassing every cache."""
    if k < 0:
        return Fraction(0)
    return falling_factorial(a, k) / math.factorial(k)


def binomial(a: Rational, k: int) -> Fraction:
    """Generalized binomial ``a (a-1) ... (a-k+1) / k!``.

    >>> binomial(Fraction(1, 2), 2)
    Fraction(-1, 8)
    >>> binomial(3, 5)
    Fraction(0, 1)
    """
    if k < 0:
        return Fraction(0)
    a = as_fraction(a)
    if a.denominator == 1:
        return Fraction(int_binomial(a.numerator, k))
    return falling_factorial(a, k) / factorial(k)


def catalan(n: int) -> int:
    """The n-th Catalan number ``binom(2n, n) / (n + 1)``."""
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    return int_binomial(2 * n, n) // (n + 1)


def super_catalan(p: int, q: int) -> int:
    """Super Catalan number ``(2p)! (2q)! / (p! q! (p+q)!)``."""
    if p < 0 or q < 0:
        raise ValueError("super Catalan indices must be nonnegative")
    num = factorial(2 * p) * factorial(2 * q)
    den = factorial(p) * factorial(q) * factorial(p + q)
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def t_number(p: int, q: int) -> Fraction:
    """``(2p+1)/(p+q+1) * S(p, q)``, which is always an integer."""
    return Fraction(2 * p + 1, p + q + 1) * super_catalan(p, q)


def forward_difference(values: Sequence[Rational], n: int) -> Fraction:
    """n-th forward difference at 0 as the closed alternating binomial sum."""
    if n < 0:
        raise ValueError("difference order must be nonnegative")
    if len(values) < n + 1:
        raise ValueError(f"need at least {n + 1} values for an order-{n} difference, got {len(values)}")
    total = Fraction(0)
    for v in range(n + 1):
        term = int_binomial(n, v) * as_fraction(values[v])
        total += term if (n - v) % 2 == 0 else -term
    return total


def iterated_difference(values: Sequence[Rational], n: int) -> Fraction:
    """Same quantity as :func:`forward_difference`, one difference step at a time."""
    if len(values) < n + 1:
        raise ValueError(f"need at least {n + 1} values for an order-{n} difference, got {len(values)}")
    row = [as_fraction(v) for v in values[: n + 1]]
    for _ in range(n):
        row = [b - a for a, b in zip(row, row[1:])]
    return row[0]
