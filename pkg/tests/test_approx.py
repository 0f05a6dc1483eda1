from fractions import Fraction

import pytest

from krawgibbs.approx import (
    FourierApprox,
    SignPointSet,
    build_closed_form,
    build_direct,
    cd_kernel,
    fourier_coefficient,
    interpolates_sign,
    lagrange_interpolant,
    leading_coeff_check,
    sign_interpolant,
    sign_interpolant_integer_form,
    verify_interpolation,
    verify_kernel_delta,
    verify_leading_coefficient,
    verify_p_independence,
    verify_triple_equality,
)
from krawgibbs.krawtchouk import HALF, KrawtchoukFamily, weight
from krawgibbs.poly import X, Poly

F = Fraction
F4 = Poly([0, F(7, 6), 0, F(-1, 6)])


def vandermonde_interpolant(N):
    """Independent oracle: Gauss-Jordan on the (N+1)x(N+1) Vandermonde system."""
    pts = SignPointSet(N).points
    rows = [[F(x) ** j for j in range(N + 1)] + [F(s)] for x, s in pts]
    n = len(rows)
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return Poly([row[-1] for row in rows])


def test_sign_point_set():
    assert SignPointSet(4).points == ((-2, -1), (-1, -1), (0, 0), (1, 1), (2, 1))
    with pytest.raises(ValueError):
        SignPointSet(5)


def test_fourier_coefficient_examples():
    assert fourier_coefficient(KrawtchoukFamily(2), 1) == 1
    assert fourier_coefficient(KrawtchoukFamily(4), 3) == -1
    for N in (2, 4, 10):
        assert fourier_coefficient(KrawtchoukFamily(N), 2) == 0


def test_fourier_coefficient_general_p_matches_definition():
    fam = KrawtchoukFamily(4, F(1, 3))
    assert tuple(fourier_coefficient(fam, n) for n in range(5)) == (F(-13, 27), F(2, 3), F(1, 3), -1, 0)


def test_build_direct_examples():
    assert build_direct(KrawtchoukFamily(2)).polynomial == X
    assert build_direct(KrawtchoukFamily(4)).polynomial == F4
    assert build_direct(KrawtchoukFamily(4, F(1, 3))).polynomial == F4
    assert build_direct(KrawtchoukFamily(4)).coefficients == (0, F(3, 4), 0, -1, 0)


def test_closed_form_examples():
    assert build_closed_form(2).polynomial == X
    assert build_closed_form(4).polynomial == F4
    assert build_closed_form(40).polynomial.derivative()(0) == F(3637485804655193, 2671465728531600)


def test_lagrange_examples():
    assert lagrange_interpolant(2) == X
    assert lagrange_interpolant(4) == F4
    assert interpolates_sign(lagrange_interpolant(10), 10)


@pytest.mark.parametrize("N", [2, 4, 6, 12, 18])
def test_against_vandermonde_oracle(N):
    oracle = vandermonde_interpolant(N)
    assert lagrange_interpolant(N) == oracle
    assert sign_interpolant(N) == oracle
    assert build_direct(KrawtchoukFamily(N)).polynomial == oracle


@pytest.mark.parametrize("N", [2, 8, 30, 60])
def test_integer_form(N):
    nums, den = sign_interpolant_integer_form(N)
    assert Poly.from_integer_form(nums, den) == lagrange_interpolant(N)


def test_fourier_approx_invariants():
    with pytest.raises(ValueError):
        FourierApprox(4, (0, 1), F4)
    with pytest.raises(ValueError):
        FourierApprox(4, (0,) * 5, X ** 2)
    with pytest.raises(ValueError):
        FourierApprox(2, (0,) * 3, X + 1)
    assert build_direct(KrawtchoukFamily(4))(2) == 1


def test_even_coefficients_vanish_only_at_half():
    fam = KrawtchoukFamily(6, F(2, 5))
    assert any(fourier_coefficient(fam, n) for n in (0, 2, 4, 6))
    assert all(fourier_coefficient(KrawtchoukFamily(6), n) == 0 for n in (0, 2, 4, 6))


def test_cd_kernel_examples():
    fam = KrawtchoukFamily(2)
    assert cd_kernel(fam, 1, 1) == 4
    assert cd_kernel(fam, 1, 0) == 0
    with pytest.raises(ValueError):
        cd_kernel(fam, 2, 0)


@pytest.mark.parametrize("p", [HALF, F(2, 5), F(7, 9)])
def test_cd_kernel_delta(p):
    fam = KrawtchoukFamily(6, p)
    for x in fam.grid():
        for y in fam.grid():
            expected = 1 / weight(fam, y + fam.half) if x == y else 0
            assert cd_kernel(fam, x, y) == expected


def test_leading_coefficient_examples():
    assert leading_coeff_check(2)
    assert leading_coeff_check(4)
    assert lagrange_interpolant(4).leading_coefficient == F(-1, 6)


def test_sweeps_small():
    assert verify_triple_equality(12)
    assert verify_interpolation(20)
    assert verify_p_independence(8, [HALF, F(1, 3), F(3, 5), F(9, 10)])
    assert verify_kernel_delta(6, [HALF, F(2, 5)])
    report = verify_leading_coefficient(20)
    assert report.all_passed and report.checked == 10 and report.first_failure is None


@pytest.mark.parametrize("N", [2, 6, 16, 30])
def test_every_construction_is_odd(N):
    for poly in (
        build_direct(KrawtchoukFamily(N)).polynomial,
        build_direct(KrawtchoukFamily(N, F(1, 3))).polynomial,
        build_closed_form(N).polynomial,
        lagrange_interpolant(N),
        sign_interpolant(N),
    ):
        assert poly.reflect() == -poly
