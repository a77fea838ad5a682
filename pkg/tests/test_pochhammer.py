"""Pochhammer derivatives: closed forms, cross-method agreement, poles."""

from fractions import Fraction as F

import pytest

from pochex.errors import DomainError, PoleError
from pochex.pochhammer import (
    LinearParam,
    PochMethod,
    RecipMethod,
    poch_deriv,
    poch_eps_series,
    pochhammer,
    quotient_deriv,
    recip_poch_deriv,
    recip_poch_laurent,
)
from pochex.series import series_div, series_invert


# -- plain Pochhammer ------------------------------------------------------------


@pytest.mark.parametrize(
    "alpha,m,value",
    [
        (1, 0, 1),
        (1, 3, 6),
        (F(1, 2), 2, F(3, 4)),
        (-2, 3, 0),
        (-2, 2, 2),
        (F(-5, 2), 3, F(-15, 8)),
    ],
)
def test_pochhammer_values(alpha, m, value):
    assert pochhammer(alpha, m) == value


def test_pochhammer_negative_length_rejected():
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_poch_eps_series_matches_expansion():
    # (1+eps)(2+eps) = 2 + 3 eps + eps^2
    s = poch_eps_series(LinearParam(1, 1), 2, 2)
    assert s.coefficient(0) == 2
    assert s.coefficient(1) == 3
    assert s.coefficient(2) == 1


def test_linear_param_helpers():
    p = LinearParam(F(1, 2), -2)
    assert p.at(F(1, 4)) == 0
    assert p.shifted(3) == LinearParam(F(7, 2), -2)


# -- normalized derivatives of (alpha)_m ------------------------------------------


@pytest.mark.parametrize(
    "alpha,m,k,value",
    [
        (1, 2, 0, 2),
        (1, 2, 1, 3),
        (2, 2, 1, 5),
        (F(-5, 2), 3, 2, F(-9, 2)),
        (-1, 2, 1, -1),
        (-1, 3, 2, 0),
        (-1, 2, 2, 1),
        (1, 2, 5, 0),  # k > m vanishes identically
    ],
)
def test_poch_deriv_values(alpha, m, k, value):
    assert poch_deriv(alpha, m, k) == value


def test_poch_deriv_methods_agree():
    grid = [F(0), F(1), F(2), F(5), F(-1), F(-3), F(1, 2), F(-5, 2), F(7, 3)]
    for alpha in grid:
        for m in range(0, 7):
            for k in range(0, m + 1):
                reference = poch_deriv(alpha, m, k, method=PochMethod.RECURRENCE)
                for method in PochMethod:
                    assert poch_deriv(alpha, m, k, method=method) == reference, (
                        alpha,
                        m,
                        k,
                        method,
                    )


def test_poch_deriv_rejects_bad_orders():
    with pytest.raises(DomainError):
        poch_deriv(1, -1, 0)
    with pytest.raises(DomainError):
        poch_deriv(1, 2, -1)


# -- normalized derivatives of 1/(beta)_m ------------------------------------------


@pytest.mark.parametrize(
    "beta,m,k,value",
    [
        (2, 1, 1, F(-1, 4)),
        (1, 2, 1, F(-3, 4)),
        (2, 2, 1, F(-5, 36)),
        (-3, 2, 1, F(5, 36)),
        (1, 0, 0, 1),
        (1, 0, 3, 0),  # no beta dependence at length zero
    ],
)
def test_recip_poch_deriv_values(beta, m, k, value):
    assert recip_poch_deriv(beta, m, k) == value


def test_recip_poch_deriv_methods_agree():
    grid = [F(1), F(2), F(1, 2), F(7, 3)]
    for beta in grid:
        for m in range(0, 7):
            for k in range(0, 5):
                reference = recip_poch_deriv(beta, m, k, method=RecipMethod.RECURRENCE)
                for method in RecipMethod:
                    assert recip_poch_deriv(beta, m, k, method=method) == reference, (
                        beta,
                        m,
                        k,
                        method,
                    )


def test_recip_poch_deriv_pole_reports_index():
    with pytest.raises(PoleError) as exc_info:
        recip_poch_deriv(-2, 4, 1)
    assert exc_info.value.index == 2  # beta + 2 == 0


def test_recip_series_inversion_consistency():
    # Taylor coefficients of 1/(beta+eps)_m equal the normalized derivatives.
    beta, m, order = F(7, 3), 5, 6
    inv = series_invert(poch_eps_series(LinearParam(beta, 1), m, order))
    for k in range(order + 1):
        assert inv.coefficient(k) == recip_poch_deriv(beta, m, k)


# -- Laurent window at a non-positive integer --------------------------------------


def test_recip_poch_laurent_n1_values():
    s = recip_poch_laurent(1, F(1), 3, 3)
    expected = {-1: F(-1), 0: F(0), 1: F(-1), 2: F(0), 3: F(-1)}
    for e, c in expected.items():
        assert s.coefficient(e) == c


def test_recip_poch_laurent_matches_direct_inversion():
    # Direct inversion of the series of (-1+eps)_3 is an independent oracle.
    oracle = series_invert(poch_eps_series(LinearParam(-1, 1), 3, 8))
    s = recip_poch_laurent(1, F(1), 3, 6)
    for e in range(-1, 7):
        assert s.coefficient(e) == oracle.coefficient(e)


def test_recip_poch_laurent_scales_with_slope():
    a = recip_poch_laurent(2, F(1, 3), 5, 4)
    oracle = series_invert(poch_eps_series(LinearParam(-2, F(1, 3)), 5, 10))
    for e in range(-1, 5):
        assert a.coefficient(e) == oracle.coefficient(e)


def test_recip_poch_laurent_guards():
    with pytest.raises(DomainError):
        recip_poch_laurent(-1, F(1), 3, 3)
    with pytest.raises(DomainError):
        recip_poch_laurent(1, F(0), 3, 3)
    with pytest.raises(DomainError):
        recip_poch_laurent(3, F(1), 2, 3)  # needs m > n
    with pytest.raises(DomainError):
        recip_poch_laurent(1, F(1), 3, -2)  # order below the pole


# -- derivatives of Pochhammer quotients -------------------------------------------


@pytest.mark.parametrize(
    "num,m,den,n,k,value",
    [
        ((1, 1), 1, (2, 1), 1, 1, F(1, 4)),
        ((1, 1), 2, (2, 0), 1, 1, F(3, 2)),
        ((1, 1), 3, (2, 1), 1, 0, 3),
        ((1, 1), 0, (2, 1), 0, 0, 1),
    ],
)
def test_quotient_deriv_values(num, m, den, n, k, value):
    assert quotient_deriv(LinearParam(*num), m, LinearParam(*den), n, k) == value


def _quotient_series_oracle(num, m, den, n, k, at_eps):
    """k-th normalized derivative via recentered series division."""
    order = k + 1
    num_series = poch_eps_series(LinearParam(num.at(at_eps), num.slope), m, order)
    den_series = poch_eps_series(LinearParam(den.at(at_eps), den.slope), n, order)
    return series_div(num_series, den_series).coefficient(k)


def test_quotient_deriv_against_series_oracle():
    cases = [
        (LinearParam(1, 1), 2, LinearParam(2, 1), 3),
        (LinearParam(1, 1), 3, LinearParam(2, 1), 1),  # excess numerator degree
        (LinearParam(F(1, 2), -1), 2, LinearParam(F(7, 3), 2), 2),
        (LinearParam(3, 2), 4, LinearParam(F(1, 2), 1), 4),
        (LinearParam(1, 0), 2, LinearParam(2, 1), 2),  # constant numerator
        (LinearParam(1, 1), 2, LinearParam(2, 0), 2),  # constant denominator
    ]
    for num, m, den, n in cases:
        for k in range(0, 4):
            for at_eps in (F(0), F(1, 2), F(-1, 3)):
                expected = _quotient_series_oracle(num, m, den, n, k, at_eps)
                got = quotient_deriv(num, m, den, n, k, at_eps=at_eps)
                assert got == expected, (num, m, den, n, k, at_eps)


def test_quotient_deriv_pole_detection():
    # denominator factor (2+eps) at eps=-2 vanishes
    with pytest.raises(PoleError) as exc_info:
        quotient_deriv(LinearParam(1, 1), 2, LinearParam(2, 1), 3, 1, at_eps=F(-2))
    assert exc_info.value.index == 0
    # shifted factor: (2+eps)+2 vanishes at eps=-4
    with pytest.raises(PoleError) as exc_info:
        quotient_deriv(LinearParam(1, 1), 2, LinearParam(2, 1), 3, 1, at_eps=F(-4))
    assert exc_info.value.index == 2


def test_quotient_deriv_constant_denominator_pole():
    with pytest.raises(PoleError):
        quotient_deriv(LinearParam(1, 1), 2, LinearParam(0, 0), 2, 1)


def test_quotient_deriv_rejects_bad_arguments():
    with pytest.raises(DomainError):
        quotient_deriv(LinearParam(1, 1), -1, LinearParam(2, 1), 1, 0)
    with pytest.raises(DomainError):
        quotient_deriv(LinearParam(1, 1), 1, LinearParam(2, 1), -1, 0)
    with pytest.raises(DomainError):
        quotient_deriv(LinearParam(1, 1), 1, LinearParam(2, 1), 1, -1)
