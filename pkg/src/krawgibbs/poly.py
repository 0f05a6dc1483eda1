"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .combinat import Rational, as_fraction

__all__ = ["Poly", "X", "ONE", "ZERO", "binom_poly", "int_convolve"]


def int_convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product of two integer coefficient vectors."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Coefficients are trimmed on construction, so two polynomials compare
    equal iff their coefficient tuples match.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    def __init__(self, coeffs: Iterable[Rational] = ()) -> None:
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _from_fractions(cls, cs: list[Fraction]) -> "Poly":
        while cs and not cs[-1]:
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def from_integer_form(cls, numerators: Sequence[int], denominator: int) -> "Poly":
        return cls._from_fractions([Fraction(c, denominator) for c in numerators])

    @classmethod
    def constant(cls, c: Rational) -> "Poly":
        return cls((c,))

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    @cached_property
    def integer_form(self) -> tuple[tuple[int, ...], int]:
        """``(numerators, d)`` with ``self == Poly(numerators) / d`` and d > 0 minimal."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return tuple(c.numerator * (d // c.denominator) for c in self.coeffs), d

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly | Rational") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._from_fractions(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._from_fractions([-c for c in self.coeffs])

    def __sub__(self, other: "Poly | Rational") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "Poly":
        return Poly.constant(other) - self

    def scale(self, c: Rational) -> "Poly":
        c = as_fraction(c)
        if c == 0:
            return ZERO
        return Poly._from_fractions([c * a for a in self.coeffs])

    def __mul__(self, other: "Poly | Rational") -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        an, ad = self.integer_form
        bn, bd = other.integer_form
        return Poly.from_integer_form(int_convolve(an, bn), ad * bd)

    def __rmul__(self, other: Rational) -> "Poly":
        return self.scale(other)

    def __truediv__(self, c: Rational) -> "Poly":
        return self.scale(1 / as_fraction(c))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "Poly":
        return Poly._from_fractions([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Rational) -> Fraction:
        """Exact value at a rational point (integer Horner, one division)."""
        x = as_fraction(x)
        nums, d = self.integer_form
        if not nums:
            return Fraction(0)
        a, b = x.numerator, x.denominator
        acc = 0
        bpow = 1
        for c in reversed(nums):
            acc = acc * a + c * bpow
            bpow *= b
        # acc = b^deg * d * p(x); bpow overshot by one factor of b
        return Fraction(acc, d * (bpow // b))

    def eval(self, x: Rational) -> Fraction:
        return self(x)

    def shift(self, c: Rational) -> "Poly":
        """The polynomial ``x -> self(x + c)`` (Taylor shift)."""
        c = as_fraction(c)
        out = [Fraction(0)] * len(self.coeffs)
        # Horner in polynomial form: acc = acc * (x + c) + a_i
        for a in reversed(self.coeffs):
            nxt = [Fraction(0)] * len(out)
            for i, v in enumerate(out):
                if v:
                    nxt[i] += v * c
                    if i + 1 < len(nxt):
                        nxt[i + 1] += v
            nxt[0] += a
            out = nxt
        return Poly._from_fractions(out)

    def substitute_linear(self, a: Rational, b: Rational) -> "Poly":
        """The polynomial ``x -> self(a x + b)``."""
        a = as_fraction(a)
        shifted = self.shift(b)
        apow = Fraction(1)
        out = []
        for c in shifted.coeffs:
            out.append(c * apow)
            apow *= a
        return Poly._from_fractions(out)

    def reflect(self) -> "Poly":
        """The polynomial ``x -> self(-x)``."""
        return Poly._from_fractions([-c if i % 2 else c for i, c in enumerate(self.coeffs)])

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


_binom_cache: dict[tuple[Fraction, int], list[Poly]] = {}
_binom_lock = threading.Lock()


def _binom_row(c: Fraction, s: int, k: int) -> list[Poly]:
    key = (c, s)
    row = _binom_cache.get(key)
    if row is not None and len(row) > k:
        return row
    with _binom_lock:
        row = _binom_cache.get(key) or [ONE]
        if len(row) <= k:
            grown = list(row)
            # binom(u, j) = binom(u, j-1) * (u - j + 1) / j with u = c + s x
            num, den = grown[-1].integer_form
            num = list(num)
            cn, cd = c.numerator, c.denominator
            for j in range(len(grown), k + 1):
                # (u - j + 1) * cd = (cn - (j-1) cd) + s cd x
                lin = (cn - (j - 1) * cd, s * cd)
                num = int_convolve(num, lin)
                den *= cd * j
                g = 0
                for v in num:
                    g = math.gcd(g, v)
                g = math.gcd(g, den)
                if g > 1:
                    num = [v // g for v in num]
                    den //= g
                grown.append(Poly.from_integer_form(num, den))
            _binom_cache[key] = grown
            row = grown
    return row


def binom_poly(c: Rational, s: int, k: int) -> Poly:
    """``binom(c + s*x, k)`` as a degree-k polynomial in x; ``s`` is +1 or -1.

    >>> str(binom_poly(2, -1, 2))
    '1 + (-3/2)*x + (1/2)*x^2'
    """
    if s not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if k < 0:
        return ZERO
    return _binom_row(as_fraction(c), s, k)[k]

