"""Krawtchouk polynomials on the grid {0..N} and their centred (shifted) form.

The shifted family ``k_n(x; N) = K_n(x + N/2; N)`` lives on the symmetric
grid ``-N/2..N/2``.  At ``p = 1/2`` it has the parity of ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .combinat import Rational, as_fraction, int_binomial
from .poly import ONE, ZERO, Poly, binom_poly

__all__ = [
    "KrawtchoukFamily",
    "HALF",
    "weight",
    "inner_product",
    "krawtchouk_poly",
    "unshifted_krawtchouk",
    "shifted_k",
    "norm_sq",
    "k_at_zero",
    "k_prime_at_zero",
    "difference_identity_check",
    "hermite_poly",
    "scaled_krawtchouk",
    "hermite_limit_error",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class KrawtchoukFamily:
    """Parameters ``(N, p)`` of a Krawtchouk family; ``q = 1 - p``."""

    N: int
    p: Fraction = HALF
    q: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if isinstance(self.N, bool) or not isinstance(self.N, int):
            raise TypeError("N must be an int")
        if self.N < 2 or self.N % 2:
            raise ValueError(f"N must be even and >= 2, got {self.N}")
        p = as_fraction(self.p)
        if not 0 < p < 1:
            raise ValueError(f"p must lie strictly between 0 and 1, got {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", 1 - p)

    @property
    def half(self) -> int:
        return self.N // 2

    def grid(self) -> range:
        """Centred abscissae ``-N/2, ..., N/2``."""
        return range(-self.half, self.half + 1)

    def _check_degree(self, n: int) -> None:
        if not 0 <= n <= self.N:
            raise ValueError(f"degree {n} outside 0..{self.N}")


def weight(fam: KrawtchoukFamily, j: int) -> Fraction:
    """Binomial weight ``binom(N, j) p^j q^(N-j)`` on the unshifted grid."""
    if not 0 <= j <= fam.N:
        raise ValueError(f"weight index {j} outside 0..{fam.N}")
    return int_binomial(fam.N, j) * fam.p**j * fam.q ** (fam.N - j)


def inner_product(fam: KrawtchoukFamily, f: Poly, g: Poly) -> Fraction:
    """Shifted discrete inner product over the centred grid."""
    total = Fraction(0)
    for y in fam.grid():
        fy = f(y)
        if fy:
            total += fy * g(y) * weight(fam, y + fam.half)
    return total


def _krawtchouk_sum(upper: Rational, p: Fraction, n: int, centred: bool) -> Poly:
    # sum_v (-1)^(n-v) binom(upper - x, n-v) binom(lower + x, v) p^(n-v) q^v,
    # where lower = upper when centred (x measured from N/2) and 0 otherwise
    q = 1 - p
    lower = upper if centred else 0
    acc = ZERO
    for v in range(n + 1):
        coeff = p ** (n - v) * q**v
        if (n - v) % 2:
            coeff = -coeff
        acc = acc + (binom_poly(upper, -1, n - v) * binom_poly(lower, 1, v)).scale(coeff)
    return acc


@lru_cache(maxsize=None)
def unshifted_krawtchouk(N: int, p: Fraction, n: int) -> Poly:
    """``K_n^(p)(x; N)`` for any positive N (odd N is allowed here)."""
    if N < 1 or not 0 <= n <= N:
        raise ValueError(f"need 0 <= n <= N with N >= 1, got n={n}, N={N}")
    return _krawtchouk_sum(N, as_fraction(p), n, centred=False)


def krawtchouk_poly(fam: KrawtchoukFamily, n: int) -> Poly:
    """Unshifted Krawtchouk polynomial of the family, variable on ``[0, N]``."""
    fam._check_degree(n)
    return unshifted_krawtchouk(fam.N, fam.p, n)


@lru_cache(maxsize=None)
def _shifted(N: int, p: Fraction, n: int) -> Poly:
    return _krawtchouk_sum(Fraction(N, 2), p, n, centred=True)


def shifted_k(fam: KrawtchoukFamily, n: int) -> Poly:
    """``k_n(x; N) = K_n(x + N/2; N)``, composed term by term from binomial polynomials."""
    fam._check_degree(n)
    return _shifted(fam.N, fam.p, n)


def norm_sq(fam: KrawtchoukFamily, n: int) -> Fraction:
    """Squared norm of ``k_n``: closed form ``4^-n binom(N, n)`` at p = 1/2."""
    fam._check_degree(n)
    if fam.p == HALF:
        return Fraction(int_binomial(fam.N, n), 4**n)
    k = shifted_k(fam, n)
    return inner_product(fam, k, k)


def _check_even_order(N: int, n: int) -> None:
    if N < 2 or N % 2:
        raise ValueError(f"N must be even and >= 2, got {N}")
    if not 0 <= n <= N:
        raise ValueError(f"index {n} outside 0..{N}")


def k_at_zero(N: int, n: int) -> Fraction:
    """Closed form of ``k_n(0; N)`` at p = 1/2."""
    _check_even_order(N, n)
    if n % 2:
        return Fraction(0)
    sign = -1 if (n // 2) % 2 else 1
    return Fraction(sign * int_binomial(N // 2, n // 2), 2**n)


def k_prime_at_zero(N: int, m: int) -> Fraction:
    """Closed form of ``k_m'(0; N)`` at p = 1/2 (linear coefficient of k_m)."""
    _check_even_order(N, m)
    if m % 2 == 0:
        return Fraction(0)
    half = N // 2
    total = Fraction(0)
    for ell in range((m - 1) // 2 + 1):
        term = Fraction(int_binomial(half, ell), m - 2 * ell)
        total += -term if ell % 2 else term
    return total / 2 ** (m - 1)


def difference_identity_check(N: int, n: int) -> bool:
    """Exact check of ``k_n(x+1; N) - k_n(x; N) = k_{n-1}(x + 1/2; N-1)``.

    The right side is realized as ``K_{n-1}(x + N/2; N-1)``.
    """
    _check_even_order(N, n)
    if n < 1:
        raise ValueError("difference identity needs n >= 1")
    k = _shifted(N, HALF, n)
    lhs = k.shift(1) - k
    rhs = unshifted_krawtchouk(N - 1, HALF, n - 1).shift(Fraction(N, 2))
    return lhs == rhs


@lru_cache(maxsize=None)
def hermite_poly(n: int) -> Poly:
    """Physicists' Hermite polynomial via ``H_{n+1} = 2x H_n - 2n H_{n-1}``."""
    if n < 0:
        raise ValueError("Hermite degree must be nonnegative")
    if n == 0:
        return ONE
    if n == 1:
        return Poly((0, 2))
    return Poly((0, 2)) * hermite_poly(n - 1) - hermite_poly(n - 2).scale(2 * (n - 1))


def scaled_krawtchouk(N: int, n: int) -> Poly:
    """``(2/(Npq))^(n/2) n! K_n(sqrt(2Npq) x + Np; N)`` at p = 1/2, as an exact polynomial.

    With ``a = sqrt(N/2)`` the expression equals ``2^n n! sum_i c_i a^(i-n) x^i``
    where ``c_i`` are the coefficients of ``k_n``; every surviving power
    ``i - n`` is even, so ``a^(i-n)`` is rational.
    """
    _check_even_order(N, n)
    k = _shifted(N, HALF, n)
    a_sq = Fraction(N, 2)
    scale = 2**n
    for i in range(2, n + 1):
        scale *= i
    out = []
    for i, c in enumerate(k.coeffs):
        if c == 0:
            out.append(c)
            continue
        if (i - n) % 2:
            raise ArithmeticError("shifted Krawtchouk polynomial lost its parity")
        out.append(scale * c * a_sq ** ((i - n) // 2))
    return Poly(out)


def hermite_limit_error(N: int, n: int, samples: Iterable[Rational]) -> Fraction:
    """Largest deviation of the scaled Krawtchouk polynomial from ``H_n`` on ``samples``.

    At p = 1/2 the square roots cancel, so the deviation is an exact rational.
    """
    diff = scaled_krawtchouk(N, n) - hermite_poly(n)
    return max((abs(diff(x)) for x in samples), default=Fraction(0))
