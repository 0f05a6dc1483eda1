from decimal import ROUND_DOWN, ROUND_HALF_EVEN
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from krawgibbs import gibbs
from krawgibbs.approx import sign_interpolant
from krawgibbs.gibbs import DecimalValue, NoCriticalPointError

F = Fraction
PI_50 = "3.14159265358979323846264338327950288419716939937510"
LOG4_40 = "1.3862943611198906188344642429163531361510"
# reference digits cross-checked against an independent 60-digit evaluation
GAMMA_58 = "1.1789797444721672702320288458249097414638974209643661468345"


def test_decimal_value_rounding():
    x = F(1101182534906, 10**12)
    assert str(DecimalValue.from_rational(x, 6)) == "1.101183"
    assert str(DecimalValue.from_rational(x, 6, ROUND_DOWN)) == "1.101182"
    assert str(DecimalValue.from_rational(F(5, 2), 0)) == "2"
    assert str(DecimalValue.from_rational(F(7, 2), 0)) == "4"
    assert str(DecimalValue.from_rational(F(-1, 8), 2)) == "-0.12"
    assert str(DecimalValue.from_rational(F(1, 1000), 2)) == "0.00"
    assert str(DecimalValue.from_rational(F(3, 100), 3)) == "0.030"
    with pytest.raises(ValueError):
        DecimalValue.from_rational(1, -1)
    with pytest.raises(ValueError):
        DecimalValue.from_rational(1, 2, "ROUND_UP")


@given(st.fractions(min_value=-100, max_value=100), st.integers(0, 12))
def test_decimal_value_error_bounds(x, places):
    ulp = F(1, 10**places)
    down = DecimalValue.from_rational(x, places, ROUND_DOWN).to_fraction()
    near = DecimalValue.from_rational(x, places).to_fraction()
    assert abs(down) <= abs(x) < abs(down) + ulp
    assert abs(near - x) <= ulp / 2


def test_pi_and_log4():
    assert str(DecimalValue.from_rational(F(gibbs.pi_fixed(60), 10**60), 50, ROUND_DOWN)) == PI_50
    assert str(DecimalValue.from_rational(gibbs.log4(50), 40, ROUND_DOWN)) == LOG4_40


def test_gibbs_constant_examples():
    assert str(gibbs.gibbs_constant(6)) == "1.178980"
    assert str(gibbs.gibbs_constant(1)) == "1.2"
    assert gibbs.gibbs_constant(4).to_fraction() == F("1.179")
    assert str(gibbs.gibbs_constant(40)) == "1.1789797444721672702320288458249097414639"
    assert str(gibbs.gibbs_constant(30)) == "1.178979744472167270232028845825"


def test_gibbs_series_bound_is_certified():
    value, bound = gibbs.gibbs_series(6)
    assert bound < F(1, 10**6)
    reference = F(GAMMA_58)
    assert abs(value - reference) <= bound + F(1, 10**58)
    with pytest.raises(ValueError):
        gibbs.gibbs_series(1001)


def test_critical_point_n4():
    r = gibbs.smallest_critical_point(4, F(1, 2**20))
    assert r.theta_lo**2 <= F(7, 3) <= r.theta_hi**2
    assert r.width <= F(1, 2**20)
    assert abs(float(r.midpoint) - 1.5275252) < 1e-6


def test_no_critical_point_n2():
    with pytest.raises(NoCriticalPointError, match="no critical point found"):
        gibbs.smallest_critical_point(2, F(1, 1024))


@pytest.mark.parametrize("N", [6, 10, 24, 50])
def test_critical_point_is_first_sign_change(N):
    r = gibbs.smallest_critical_point(N, F(1, 2**30))
    slope = sign_interpolant(N).derivative()
    assert slope(r.theta_lo) > 0 >= slope(r.theta_hi)
    # positive on a fine grid before the bracket
    grid = [r.theta_lo * k / 64 for k in range(64)]
    assert all(slope(t) > 0 for t in grid)


def test_overshoot_n4_closed_form():
    # F_4(sqrt(7/3)) = (7/9) sqrt(7/3), so value^2 = 343/243
    for rounding in (ROUND_DOWN, ROUND_HALF_EVEN):
        d = gibbs.overshoot(4, 5, rounding=rounding).to_fraction()
        ulp = F(1, 10**5)
        lo, hi = (d, d + ulp) if rounding == ROUND_DOWN else (d - ulp / 2, d + ulp / 2)
        assert lo**2 <= F(343, 243) < hi**2
    assert str(gibbs.overshoot(4, 5, rounding=ROUND_DOWN)) == "1.18807"
    assert str(gibbs.overshoot(4, 5)) == "1.18808"


def test_overshoot_reference_values():
    assert str(gibbs.overshoot(10, 6, rounding=ROUND_DOWN)) == "1.101182"
    assert str(gibbs.overshoot(50, 6, rounding=ROUND_DOWN)) == "1.071891"
    r = gibbs.overshoot_result(10, 6)
    assert r.digits == 6 and str(r.decimal) == "1.101183"


def test_overshoot_result_without_digits():
    r = gibbs.smallest_critical_point(6, F(1, 1000))
    with pytest.raises(ValueError):
        r.decimal


def test_theta_step_does_not_change_answer():
    a = gibbs.overshoot(20, 8, step=F(1, 8))
    b = gibbs.overshoot(20, 8, step=F(1, 32))
    assert a == b
    with pytest.raises(ValueError):
        gibbs.overshoot(20, 6, step=0)


def test_tables():
    rows = gibbs.steepness_table([40, 400], digits=5)
    assert [(N, str(d)) for N, d in rows] == [(40, "1.36160"), (400, "1.38379")]
    rows = gibbs.overshoot_table([10, 50])
    assert [(N, str(d)) for N, d in rows] == [(10, "1.101182"), (50, "1.071891")]


def test_parallel_map_order(monkeypatch):
    assert gibbs.parallel_map(abs, [-3, 1, -2], workers=2) == [3, 1, 2]
    monkeypatch.setenv(gibbs.WORKERS_ENV, "2")
    assert gibbs.worker_count() == 2
    rows = gibbs.steepness_table([4, 2, 6], digits=3)
    assert [N for N, _ in rows] == [4, 2, 6]
    monkeypatch.setenv(gibbs.WORKERS_ENV, "zero")
    with pytest.raises(ValueError):
        gibbs.worker_count()
