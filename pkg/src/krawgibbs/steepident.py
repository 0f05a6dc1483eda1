"""Exact steepness ``F_N'(0)`` and the identity ladder behind its limit.

Notation follows the re-indexing ``M = N/2``, ``m = n/2``:

* ``S(M)`` -- the steepness sum, equal to ``F'_{2M}(0)``;
* ``T(M) = 2 sum_{k=1}^{M} 1/(M+k)``;
* ``C(m, M)``, ``D(m, M)``, ``X(m, M)`` -- the helper quantities of the
  induction ``S(M) = T(M)``.

Each ``verify_*`` function sweeps an index range with exact arithmetic and
returns an :class:`~krawgibbs.report.IdentityReport`.  With ``audit=True``
the brute-force sides recompute binomials by direct product instead of the
memoized table.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce
from operator import mul
from typing import Callable

from .combinat import binomial_product, int_binomial, t_number
from .report import IdentityReport, sweep

__all__ = [
    "steepness_exact",
    "s_of_m",
    "t_of_m",
    "helper_c",
    "helper_d",
    "helper_x",
    "x_closed_form",
    "wallis_sum",
    "wallis_closed_form",
    "verify_supercatalan_identity",
    "verify_appendix_lemma",
    "verify_st_equality",
    "verify_cd_identities",
    "verify_x_recurrence",
    "verify_x_closed_form",
    "verify_wallis",
    "identity_suite",
]


def _odd_lcm(top: int) -> int:
    """lcm(1, 3, 5, ..., top) for odd ``top`` (1 when top < 1)."""
    return reduce(math.lcm, range(1, top + 1, 2), 1)


def _scaled_inner_sums(M: int, count: int) -> tuple[list[int], int]:
    """Integer numerators of ``sum_{l<=j} (-1)^l binom(M, l) / (2(j-l)+1)`` for j < count.

    All sums share the common denominator ``L = lcm(1, 3, ..., 2 count - 1)``.
    """
    L = _odd_lcm(2 * count - 1)
    signed = [int_binomial(M, l) if l % 2 == 0 else -int_binomial(M, l) for l in range(count)]
    # reciprocal[j] = L / (2j + 1), listed in reverse so a prefix aligns with signed
    reciprocal = [L // (2 * j + 1) for j in range(count)]
    rev = reciprocal[::-1]
    sums = []
    for j in range(count):
        sums.append(sum(map(mul, signed[: j + 1], rev[count - 1 - j :])))
    return sums, L


def steepness_exact(N: int) -> Fraction:
    """``F_N'(0)`` from the closed steepness formula.

    ``2^(1-N) binom(N, N/2) sum_{n even <= N-2} c(n; N) sum_l (-1)^l binom(N/2, l) / (n+1-2l)``
    with ``c(n; N) = (-1)^(n/2) binom(N/2, n/2) / binom(N, n)``.

    >>> steepness_exact(4)
    Fraction(7, 6)
    """
    if N < 2 or N % 2:
        raise ValueError(f"N must be even and >= 2, got {N}")
    half = N // 2
    inner, L = _scaled_inner_sums(half, half)
    # binom(M, j) / binom(2M, 2j) = (2j-1)!! (2M-2j-1)!! / (2M-1)!!, so the
    # outer sum shares the denominator (2M-1)!!
    odd_df = [1]
    for k in range(1, half + 1):
        odd_df.append(odd_df[-1] * (2 * k - 1))
    total = 0
    for j, s in enumerate(inner):
        term = odd_df[j] * odd_df[half - j] * s
        total += -term if j % 2 else term
    return Fraction(total * int_binomial(N, half), odd_df[half] * L * 2 ** (N - 1))


def _c_unchecked(m: int, M: int) -> Fraction:
    value = Fraction(int_binomial(M, m), int_binomial(2 * M, 2 * m))
    return -value if m % 2 else value


def helper_c(m: int, M: int) -> Fraction:
    """``C(m, M) = (-1)^m binom(M, m) / binom(2M, 2m)`` for ``0 <= m <= M-1``."""
    if not 0 <= m <= M - 1:
        raise ValueError(f"C(m, M) needs 0 <= m <= M-1, got m={m}, M={M}")
    return _c_unchecked(m, M)


def helper_d(m: int, M: int) -> Fraction:
    """``D(m, M) = C(m, M) (2M - 2m + 1) / (2M + 2)``; also defined at ``m = M``."""
    if not 0 <= m <= M:
        raise ValueError(f"D(m, M) needs 0 <= m <= M, got m={m}, M={M}")
    if m == M:
        return Fraction((-1) ** M, 2 * M + 2)
    return _c_unchecked(m, M) * Fraction(2 * M - 2 * m + 1, 2 * M + 2)


def helper_x(m: int, M: int, binom: Callable[[int, int], int] = int_binomial) -> Fraction:
    """``X(m, M) = sum_{l=0}^{m} (-1)^l binom(M, l) / (2m + 1 - 2l)``, with ``X(-1, M) = 0``."""
    if m == -1:
        return Fraction(0)
    if m < -1 or M < 0:
        raise ValueError(f"X(m, M) needs m >= -1 and M >= 0, got m={m}, M={M}")
    total = Fraction(0)
    for ell in range(min(m, M) + 1):
        term = Fraction(binom(M, ell), 2 * m + 1 - 2 * ell)
        total += -term if ell % 2 else term
    return total


def x_closed_form(M: int) -> Fraction:
    """``X(M, M+1) = (-1)^(M+1) (1 - 2^(2M+1) / binom(2M+1, M+1))``."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    value = 1 - Fraction(2 ** (2 * M + 1), int_binomial(2 * M + 1, M + 1))
    return value if M % 2 else -value


def s_of_m(M: int) -> Fraction:
    """``S(M) = 2^(1-2M) binom(2M, M) sum_{m<M} C(m, M) X(m, M)``."""
    if M < 1:
        raise ValueError("S(M) needs M >= 1")
    xs, L = _scaled_inner_sums(M, M)
    total = Fraction(0)
    for m in range(M):
        total += helper_c(m, M) * xs[m]
    return total * int_binomial(2 * M, M) / (L * 2 ** (2 * M - 1))


def t_of_m(M: int) -> Fraction:
    """``T(M) = 2 sum_{k=1}^{M} 1/(M+k)``."""
    if M < 1:
        raise ValueError("T(M) needs M >= 1")
    L = reduce(math.lcm, range(M + 1, 2 * M + 1), 1)
    return Fraction(2 * sum(L // (M + k) for k in range(1, M + 1)), L)


def wallis_sum(M: int, binom: Callable[[int, int], int] = int_binomial) -> Fraction:
    """``sum_{k=0}^{M} (-1)^k binom(M, k) / (2k + 1)``, i.e. the integral of ``(1-x^2)^M`` on [0, 1]."""
    total = Fraction(0)
    for k in range(M + 1):
        term = Fraction(binom(M, k), 2 * k + 1)
        total += -term if k % 2 else term
    return total


def wallis_closed_form(M: int) -> Fraction:
    return Fraction(4**M, (2 * M + 1) * int_binomial(2 * M, M))


# -- brute-force double sums -------------------------------------------------


def _product_binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    value = binomial_product(n, k)
    assert value.denominator == 1
    return value.numerator


def _binom_source(audit: bool) -> Callable[[int, int], int]:
    return _product_binom if audit else int_binomial


def supercatalan_double_sum(p: int, q: int, binom: Callable[[int, int], int] = int_binomial) -> int:
    """``sum_{v=0}^{2q+1} sum_{s=p+q+2-v}^{2p+2q+2-v} (-1)^v binom(2q+1, v) binom(2p+1, s)``."""
    total = 0
    for v in range(2 * q + 2):
        inner = sum(binom(2 * p + 1, s) for s in range(p + q + 2 - v, 2 * p + 2 * q + 3 - v))
        term = binom(2 * q + 1, v) * inner
        total += -term if v % 2 else term
    return total


def appendix_double_sum(N: int, n: int, binom: Callable[[int, int], int] = int_binomial) -> int:
    """``sum_{v=0}^{n} sum_{s=N/2+1-v}^{N-v} (-1)^v binom(n, v) binom(N-n, s)``."""
    total = 0
    for v in range(n + 1):
        inner = sum(binom(N - n, s) for s in range(N // 2 + 1 - v, N - v + 1))
        term = binom(n, v) * inner
        total += -term if v % 2 else term
    return total


def verify_supercatalan_identity(p_max: int, q_max: int, audit: bool = False) -> IdentityReport:
    """Both sides of ``(-1)^(q+1) T(p, q) = double sum`` for all ``p <= p_max, q <= q_max``."""
    binom = _binom_source(audit)
    cases = [(p, q) for p in range(p_max + 1) for q in range(q_max + 1)]

    def check(p: int, q: int) -> bool:
        rhs = t_number(p, q) * (-1) ** (q + 1)
        return supercatalan_double_sum(p, q, binom) == rhs

    return sweep("supercatalan_identity", f"0<=p<={p_max}, 0<=q<={q_max}", cases, check)


def verify_appendix_lemma(N_max: int, audit: bool = False) -> IdentityReport:
    """The lemma ``double sum = (-1)^((n+1)/2) T((N-n-1)/2, (n-1)/2)`` for even N, odd n <= N."""
    binom = _binom_source(audit)
    cases = [(N, n) for N in range(2, N_max + 1, 2) for n in range(1, N + 1, 2)]

    def check(N: int, n: int) -> bool:
        rhs = t_number((N - n - 1) // 2, (n - 1) // 2) * (-1) ** ((n + 1) // 2)
        return appendix_double_sum(N, n, binom) == rhs

    return sweep("appendix_lemma", f"even N<={N_max}, odd n<=N", cases, check)


def verify_st_equality(M_max: int) -> IdentityReport:
    return sweep(
        "s_equals_t",
        f"1<=M<={M_max}",
        ((M,) for M in range(1, M_max + 1)),
        lambda M: s_of_m(M) == t_of_m(M),
    )


def verify_cd_identities(M_max: int) -> list[IdentityReport]:
    """The two C/D relations for ``0 <= m <= M-1``, ``1 <= M <= M_max``."""
    cases = [(m, M) for M in range(1, M_max + 1) for m in range(M)]
    bounds = f"0<=m<=M-1, M<={M_max}"
    scaled = sweep(
        "cd_scaling",
        bounds,
        cases,
        lambda m, M: Fraction(2 * M + 1, 2 * M + 2) * helper_c(m, M + 1) == helper_d(m, M),
    )
    telescoping = sweep(
        "cd_telescoping",
        bounds,
        cases,
        lambda m, M: helper_d(m, M) - helper_d(m + 1, M) == helper_c(m, M),
    )
    return [scaled, telescoping]


def verify_x_recurrence(M_max: int, audit: bool = False) -> IdentityReport:
    """``X(m, M+1) = X(m, M) - X(m-1, M)`` for ``0 <= m <= M <= M_max``."""
    binom = _binom_source(audit)
    cases = [(m, M) for M in range(M_max + 1) for m in range(M + 1)]
    x = lru_cache(maxsize=None)(lambda m, M: helper_x(m, M, binom))
    return sweep(
        "x_recurrence",
        f"0<=m<=M<={M_max}",
        cases,
        lambda m, M: x(m, M + 1) == x(m, M) - x(m - 1, M),
    )


def verify_x_closed_form(M_max: int, audit: bool = False) -> IdentityReport:
    binom = _binom_source(audit)
    return sweep(
        "x_closed_form",
        f"0<=M<={M_max}",
        ((M,) for M in range(M_max + 1)),
        lambda M: helper_x(M, M + 1, binom) == x_closed_form(M),
    )


def verify_wallis(M_max: int, audit: bool = False) -> IdentityReport:
    binom = _binom_source(audit)
    return sweep(
        "wallis",
        f"0<=M<={M_max}",
        ((M,) for M in range(M_max + 1)),
        lambda M: wallis_sum(M, binom) == wallis_closed_form(M),
    )


def identity_suite(
    M_max: int = 200,
    st_max: int = 500,
    x_closed_max: int = 100,
    pq_max: int = 12,
    N_max: int = 40,
    audit: bool = False,
) -> list[IdentityReport]:
    """Every identity sweep at the given bounds, in a fixed order."""
    return [
        verify_st_equality(st_max),
        *verify_cd_identities(M_max),
        verify_x_recurrence(M_max, audit),
        verify_x_closed_form(x_closed_max, audit),
        verify_wallis(M_max, audit),
        verify_supercatalan_identity(pq_max, pq_max, audit),
        verify_appendix_lemma(N_max, audit),
    ]
