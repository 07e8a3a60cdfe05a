from fractions import Fraction

import pytest

import prismreal as pr


def test_series_arithmetic():
    f = pr.LaurentSeries({0: 1, 1: -10})
    g = pr.LaurentSeries({0: 1, 1: 10})
    assert (f * g).terms() == {0: 1, 2: -100}
    assert (f + (-f)).is_zero()
    assert pr.shift(pr.LaurentSeries({0: 1, 1: 1}), 2).terms() == {2: 1, 3: 1}
    assert pr.t_valuation(pr.LaurentSeries()) is None
    assert pr.t_valuation(pr.LaurentSeries({-3: 1, 1: 5})) == -3


def test_big_coefficients_survive():
    big = 3**200
    f = pr.LaurentSeries([(5, big), (-2, -big)])
    assert f.coeff(5) == big
    assert pr.LaurentSeries.from_text(f.to_text()) == f


def test_norms_and_theta():
    f = pr.LaurentSeries({0: -1, 1: 10})
    assert pr.r_norm(f, Fraction(1, 2)) == 6
    assert pr.in_budget(f, "1/2", 6)
    assert not pr.in_budget(f, "1/2", 5)
    assert pr.theta(f, Fraction(1, 10)) == 0
    pi = pr.LaurentSeries({0: 3, 1: 1, 2: 4, 3: 1, 4: 5, 5: 9})
    assert pr.theta(pi, "1/10") == Fraction(314159, 100000)
    assert pr.continuity_bound(3, 1, "1/2", "1/4").bound == Fraction(1, 2)


def test_expansion():
    cert = pr.expand(Fraction(314159, 100000))
    assert cert.digits == [(0, 3), (1, 1), (2, 4), (3, 1), (4, 5), (5, 9)]
    assert cert.residual == 0
    third = pr.expand(Fraction(1, 3), max_digits=6)
    assert third.residual == Fraction(1, 3_000_000)
    assert third.audit() == ""
    assert pr.theta(pr.series_of(third), "1/10") == Fraction(1, 3) - third.residual
    assert pr.next_digit(Fraction(-1, 2)) == (1, -5, Fraction(0))
    assert pr.min_exponent(50, "1/10") == -1
    assert pr.min_exponent(100, "1/10") == -2


def test_kernel():
    assert pr.divide(pr.LaurentSeries({0: -1, 1: 10}), 10).terms() == {0: -1}
    with pytest.raises(pr.NotDivisible) as info:
        pr.divide(pr.LaurentSeries({1: 1}), 10)
    assert not info.value.args[0].is_zero()
    assert pr.in_kernel(pr.generator_poly(10), "1/10")
    assert not pr.in_kernel(pr.LaurentSeries({0: 3, 1: 1}), "1/10")
    assert pr.inverse_truncation(10, 2).terms() == {0: 1, 1: 10, 2: 100}
    assert pr.not_zero_divisor_check(10, 200, 42)["failures"] == 0
    with pytest.raises(ValueError):
        pr.generator_poly(1)


def test_truncation_sets():
    assert pr.count(1, "1/2", 1) == 7
    one = pr.enumerate(1, "1/2", 1)
    assert len(one) == 7 and [0, -2] in one
    assert pr.restrict(one, "1/2", 1) == pr.enumerate(0, "1/2", 1)
    assert pr.normalize_budget("1/2", 3) == (2, Fraction(3, 4))
    with pytest.raises(pr.CardinalityCapExceeded):
        pr.enumerate(3, "1/2", 5, cap=10)


def test_verify():
    report = pr.verify(seed=42, trials=50)
    assert report["passed"]
    assert all(p["failures"] == 0 for p in report["properties"])


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        pr.expand(1, r_prime="1/2", r="1/3")
    with pytest.raises(ValueError):
        pr.r_norm(pr.LaurentSeries(), 2)
