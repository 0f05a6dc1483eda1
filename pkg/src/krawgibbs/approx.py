"""The Krawtchouk Fourier approximation ``F_N`` of the sign function.

Three independent constructions are provided (direct projection, the
closed form in terms of ``k_n(0)``, and the binomial Lagrange form), plus a
fast integer interpolation path used by the overshoot search.  They agree
exactly; :func:`verify_triple_equality` checks it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .combinat import catalan, factorial, int_binomial
from .krawtchouk import (
    HALF,
    KrawtchoukFamily,
    k_at_zero,
    norm_sq,
    shifted_k,
    weight,
)
from .poly import ZERO, Poly, binom_poly
from .report import IdentityReport, sweep

__all__ = [
    "FourierApprox",
    "SignPointSet",
    "sgn",
    "fourier_coefficient",
    "build_direct",
    "build_closed_form",
    "lagrange_interpolant",
    "sign_interpolant",
    "cd_kernel",
    "leading_coeff_check",
    "verify_triple_equality",
    "verify_interpolation",
    "verify_p_independence",
    "verify_kernel_delta",
    "verify_leading_coefficient",
]


def sgn(y: int | Fraction) -> int:
    return (y > 0) - (y < 0)


def _check_N(N: int) -> None:
    if N < 2 or N % 2:
        raise ValueError(f"N must be even and >= 2, got {N}")


@dataclass(frozen=True)
class SignPointSet:
    """The N+1 points ``(i - N/2, sgn(i - N/2))``."""

    N: int

    def __post_init__(self) -> None:
        _check_N(self.N)

    @property
    def points(self) -> tuple[tuple[int, int], ...]:
        h = self.N // 2
        return tuple((i - h, sgn(i - h)) for i in range(self.N + 1))


@dataclass(frozen=True)
class FourierApprox:
    """Projection coefficients ``c_0..c_N`` and the assembled polynomial."""

    N: int
    coefficients: tuple[Fraction, ...]
    polynomial: Poly
    p: Fraction = HALF

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.N + 1:
            raise ValueError("need exactly N+1 coefficients")
        if self.polynomial.degree != self.N - 1:
            raise ValueError(f"F_N must have degree N-1, got {self.polynomial.degree}")
        if not self.polynomial.is_odd():
            raise ValueError("F_N must be an odd polynomial")

    def __call__(self, x) -> Fraction:
        return self.polynomial(x)


def fourier_coefficient(fam: KrawtchoukFamily, n: int) -> Fraction:
    """``<sgn, k_n> / ||k_n||^2`` for the family."""
    if not 0 <= n <= fam.N:
        raise ValueError(f"degree {n} outside 0..{fam.N}")
    k = shifted_k(fam, n)
    h = fam.half
    if fam.p == HALF:
        if n % 2 == 0:
            return Fraction(0)
        # odd integrand against an even weight: fold onto y >= 1
        acc = sum(k(y) * int_binomial(fam.N, h + y) for y in range(1, h + 1))
        projection = 2 * acc / Fraction(2) ** fam.N
    else:
        projection = sum(
            (k(y) * weight(fam, y + h) * sgn(y) for y in fam.grid() if y),
            Fraction(0),
        )
    return projection / norm_sq(fam, n)


def build_direct(fam: KrawtchoukFamily) -> FourierApprox:
    """``F_N = sum_n c_n k_n`` with every coefficient from an explicit projection."""
    coeffs = tuple(fourier_coefficient(fam, n) for n in range(fam.N + 1))
    poly = ZERO
    for n, c in enumerate(coeffs):
        if c:
            poly = poly + shifted_k(fam, n).scale(c)
    return FourierApprox(fam.N, coeffs, poly, fam.p)


def build_closed_form(N: int) -> FourierApprox:
    """``F_N = 2^(1-N) binom(N, N/2) sum_{n<=N-2} k_n(0) k_{n+1}(x) / ||k_n||^2``."""
    _check_N(N)
    fam = KrawtchoukFamily(N)
    prefactor = Fraction(int_binomial(N, N // 2), 2 ** (N - 1))
    coeffs = [Fraction(0)] * (N + 1)
    poly = ZERO
    for n in range(0, N - 1, 2):
        c = prefactor * k_at_zero(N, n) / norm_sq(fam, n)
        coeffs[n + 1] = c
        poly = poly + shifted_k(fam, n + 1).scale(c)
    return FourierApprox(N, tuple(coeffs), poly)


def lagrange_interpolant(N: int) -> Poly:
    """``I_N(x) = sum_i sgn(i - N/2) binom(N/2 + x, i) binom(N/2 - x, N - i)``."""
    _check_N(N)
    h = N // 2
    acc = ZERO
    for i in range(N + 1):
        s = sgn(i - h)
        if s:
            term = binom_poly(h, 1, i) * binom_poly(h, -1, N - i)
            acc = acc + term if s > 0 else acc - term
    return acc


@lru_cache(maxsize=64)
def _sign_interpolant_numerators(N: int) -> tuple[int, ...]:
    # N! * I_N = sum_i sgn(x_i) (-1)^(N-i) binom(N, i) * omega(x) / (x - x_i)
    # with omega the monic node polynomial; everything stays integral
    h = N // 2
    omega = [1]
    for j in range(N + 1):
        root = j - h
        nxt = [0] * (len(omega) + 1)
        for k, c in enumerate(omega):
            nxt[k + 1] += c
            nxt[k] -= root * c
        omega = nxt
    total = [0] * (N + 1)
    for i in range(N + 1):
        root = i - h
        if root == 0:
            continue
        weight_i = int_binomial(N, i)
        if (N - i) % 2:
            weight_i = -weight_i
        if root < 0:
            weight_i = -weight_i
        # synthetic division of omega by (x - root), high degree first
        carry = 0
        for k in range(N + 1, 0, -1):
            carry = omega[k] + carry * root
            total[k - 1] += weight_i * carry
    return tuple(total)


def sign_interpolant(N: int) -> Poly:
    """Interpolant of the sign points built in O(N^2) integer operations."""
    _check_N(N)
    return Poly.from_integer_form(_sign_interpolant_numerators(N), factorial(N))


def sign_interpolant_integer_form(N: int) -> tuple[tuple[int, ...], int]:
    """``(numerators, N!)`` with ``F_N = Poly(numerators) / N!`` (not reduced)."""
    _check_N(N)
    return _sign_interpolant_numerators(N), factorial(N)


def cd_kernel(fam: KrawtchoukFamily, x: int, y: int) -> Fraction:
    """Christoffel-Darboux kernel ``sum_n k_n(x) k_n(y) / ||k_n||^2`` on the grid."""
    h = fam.half
    for v in (x, y):
        if int(v) != v or not -h <= v <= h:
            raise ValueError(f"kernel argument {v} is not a grid point of [-{h}, {h}]")
    total = Fraction(0)
    for n in range(fam.N + 1):
        k = shifted_k(fam, n)
        total += k(x) * k(y) / norm_sq(fam, n)
    return total


def leading_coeff_check(N: int) -> bool:
    """Does ``I_N`` lead with ``(-1)^((N-2)/2) C((N-2)/2) / (N-1)!``?"""
    _check_N(N)
    m = (N - 2) // 2
    expected = Fraction((-1) ** m * catalan(m), factorial(N - 1))
    return lagrange_interpolant(N).leading_coefficient == expected


def interpolates_sign(poly: Poly, N: int) -> bool:
    return all(poly(y) == s for y, s in SignPointSet(N).points)


# -- sweeps --------------------------------------------------------------


def _even_range(N_max: int, start: int = 2) -> Iterable[tuple[int]]:
    return ((N,) for N in range(start, N_max + 1, 2))


def verify_triple_equality(N_max: int) -> IdentityReport:
    def check(N: int) -> bool:
        direct = build_direct(KrawtchoukFamily(N)).polynomial
        return direct == build_closed_form(N).polynomial == lagrange_interpolant(N)

    return sweep("triple_equality", f"even N in 2..{N_max}", _even_range(N_max), check)


def verify_interpolation(N_max: int) -> IdentityReport:
    return sweep(
        "interpolation",
        f"even N in 2..{N_max}",
        _even_range(N_max),
        lambda N: interpolates_sign(lagrange_interpolant(N), N),
    )


def verify_p_independence(N_max: int, ps: Sequence[Fraction]) -> IdentityReport:
    ps = [Fraction(p) for p in ps]

    def check(N: int) -> bool:
        reference = build_direct(KrawtchoukFamily(N)).polynomial
        return all(build_direct(KrawtchoukFamily(N, p)).polynomial == reference for p in ps)

    bounds = f"even N in 2..{N_max}, p in {{{', '.join(map(str, ps))}}}"
    return sweep("p_independence", bounds, _even_range(N_max), check)


def verify_kernel_delta(N_max: int, ps: Sequence[Fraction]) -> IdentityReport:
    ps = [Fraction(p) for p in ps]
    cases = [
        (N, pi, x, y)
        for N in range(2, N_max + 1, 2)
        for pi in range(len(ps))
        for x in range(-N // 2, N // 2 + 1)
        for y in range(-N // 2, N // 2 + 1)
    ]

    def check(N: int, pi: int, x: int, y: int) -> bool:
        fam = KrawtchoukFamily(N, ps[pi])
        return cd_kernel(fam, x, y) * weight(fam, y + N // 2) == (x == y)

    bounds = f"even N in 2..{N_max}, p in {{{', '.join(map(str, ps))}}}, full grid"
    return sweep("kernel_delta", bounds, cases, check)


def verify_leading_coefficient(N_max: int) -> IdentityReport:
    return sweep("leading_coefficient", f"even N in 2..{N_max}", _even_range(N_max), leading_coeff_check)
