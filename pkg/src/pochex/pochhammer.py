"""Rising factorials, their reciprocals, and exact derivatives of both.

The two derivative families are normalized by k!:

    P(m, k, alpha) = (1/k!) d^k/dalpha^k  (alpha)_m
    Q(m, k, beta)  = (1/k!) d^k/dbeta^k   1/(beta)_m

Each family has several closed forms plus a series oracle; they are kept as
separate code paths on purpose so they can cross-check one another, and all
of them must agree exactly.  `quotient_deriv` differentiates a quotient of
two rising factorials with linear-in-eps arguments, and `recip_poch_laurent`
expands a reciprocal around a simple pole in eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .combinatorics import gen_bernoulli_poly, stirling_s1
from .errors import DomainError, PoleError
from .series import EpsSeries, polynomial_series, series_invert

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value):
    if isinstance(value, int):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class LinearParam:
    """A parameter that is linear in the expansion variable: constant + slope*eps."""

    constant: Fraction
    slope: Fraction

    def __post_init__(self):
        object.__setattr__(self, "constant", _coerce(self.constant))
        object.__setattr__(self, "slope", _coerce(self.slope))

    def at(self, eps):
        return self.constant + self.slope * _coerce(eps)

    def shifted(self, offset) -> "LinearParam":
        return LinearParam(self.constant + offset, self.slope)


class PochMethod(str, Enum):
    RECURRENCE = "recurrence"
    STIRLING_SUM = "stirling_sum"
    COFFEY = "coffey"
    BERNOULLI = "bernoulli"
    SERIES_ORACLE = "series_oracle"


class RecipMethod(str, Enum):
    RECURRENCE = "recurrence"
    CLOSED_SUM = "closed_sum"
    DELTA_FORM = "delta_form"
    SERIES_ORACLE = "series_oracle"


def _as_method(method, enum_cls):
    if isinstance(method, enum_cls):
        return method
    try:
        return enum_cls(method)
    except ValueError:
        names = ", ".join(m.value for m in enum_cls)
        raise DomainError(f"unknown method {method!r}; expected one of: {names}") from None


def pochhammer(alpha, m: int):
    """Rising factorial (alpha)_m = alpha (alpha+1) ... (alpha+m-1); empty product is 1."""
    if m < 0:
        raise DomainError("pochhammer needs m >= 0")
    alpha = _coerce(alpha)
    value = _ONE
    for j in range(m):
        value = value * (alpha + j)
    return value


def poch_eps_series(param: LinearParam, m: int, order: int) -> EpsSeries:
    """Exact polynomial (constant + slope*eps)_m as a series with window [0, order]."""
    if m < 0:
        raise DomainError("poch_eps_series needs m >= 0")
    poly = [_ONE]
    for j in range(m):
        c = param.constant + j
        s = param.slope
        nxt = [_ZERO] * (len(poly) + 1)
        for i, p in enumerate(poly):
            nxt[i] = nxt[i] + p * c
            nxt[i + 1] = nxt[i + 1] + p * s
        poly = nxt
    return polynomial_series(poly, order)


# -- derivatives of the rising factorial ------------------------------------


def _poch_deriv_recurrence(alpha, m, k):
    # Row-by-row: P(m+1, k) = (alpha + m) P(m, k) + P(m, k-1).
    row = [_ONE] + [_ZERO] * k
    for mm in range(m):
        factor = alpha + mm
        nxt = [_ZERO] * (k + 1)
        for kk in range(k + 1):
            nxt[kk] = factor * row[kk] + (row[kk - 1] if kk else _ZERO)
        row = nxt
    return row[k]


def _poch_deriv_stirling(alpha, m, k):
    # Alternating sum over s(m-l, k) weighted by binomials and (alpha)_l.
    acc = _ZERO
    poch = _ONE  # (alpha)_l, accumulated
    for l in range(m - k + 1):
        s = stirling_s1(m - l, k)
        if s != 0:
            acc += (-1) ** l * math.comb(m, l) * s * poch
        poch = poch * (alpha + l)
    return (-1) ** (m - k) * acc


def _poch_deriv_coffey(alpha, m, k):
    # Polynomial in alpha with Stirling-number coefficients.
    acc = _ZERO
    power = _ONE  # alpha**j, accumulated
    for j in range(m - k + 1):
        s = stirling_s1(m, k + j)
        if s != 0:
            acc += (-1) ** j * math.comb(k + j, k) * s * power
        power = power * alpha
    return (-1) ** (m - k) * acc


def _poch_deriv_bernoulli(alpha, m, k):
    # Single generalized-Bernoulli evaluation at 1 - alpha.
    return (
        (-1) ** (m - k)
        * math.comb(m, k)
        * gen_bernoulli_poly(m - k, m + 1, _ONE - alpha)
    )


def _poch_deriv_oracle(alpha, m, k):
    return poch_eps_series(LinearParam(alpha, 1), m, k).coefficient(k)


_POCH_DISPATCH = {
    PochMethod.RECURRENCE: _poch_deriv_recurrence,
    PochMethod.STIRLING_SUM: _poch_deriv_stirling,
    PochMethod.COFFEY: _poch_deriv_coffey,
    PochMethod.BERNOULLI: _poch_deriv_bernoulli,
    PochMethod.SERIES_ORACLE: _poch_deriv_oracle,
}


def poch_deriv(alpha, m: int, k: int, method=PochMethod.STIRLING_SUM):
    """P(m, k, alpha): the k-th derivative of (alpha)_m divided by k!."""
    if m < 0 or k < 0:
        raise DomainError("poch_deriv needs m >= 0 and k >= 0")
    if k > m:
        return _ZERO
    alpha = _coerce(alpha)
    return _POCH_DISPATCH[_as_method(method, PochMethod)](alpha, m, k)


# -- derivatives of the reciprocal -------------------------------------------


def _recip_pole_check(beta, m):
    if isinstance(beta, Fraction) and beta.denominator == 1:
        l = -int(beta)
        if 0 <= l < m:
            raise PoleError(
                f"1/(beta)_{m} has a pole at beta = {beta}: factor beta + {l} vanishes",
                index=l,
            )


def _recip_deriv_recurrence(beta, m, k):
    # Q(m+1, k) = (Q(m, k) - Q(m+1, k-1)) / (beta + m), filled k-ascending.
    row = [_ONE if kk == 0 else _ZERO for kk in range(k + 1)]
    for mm in range(m):
        factor = beta + mm
        nxt = [_ZERO] * (k + 1)
        nxt[0] = row[0] / factor
        for kk in range(1, k + 1):
            nxt[kk] = (row[kk] - nxt[kk - 1]) / factor
        row = nxt
    return row[k]


def _recip_deriv_closed_sum(beta, m, k):
    if m == 0:
        return _ONE if k == 0 else _ZERO
    acc = _ZERO
    for l in range(m):
        term = Fraction((-1) ** l, math.factorial(l) * math.factorial(m - 1 - l))
        acc += term / (beta + l) ** (k + 1)
    return (-1) ** k * acc


def _recip_deriv_delta_form(beta, m, k):
    if m == 0:
        return _ONE if k == 0 else _ZERO
    # Forward difference of order m-1 applied to beta**-(k+1).
    acc = _ZERO
    for i in range(m):
        acc += Fraction((-1) ** (m - 1 - i) * math.comb(m - 1, i)) / (beta + i) ** (k + 1)
    sign = 1 if (m - k - 1) % 2 == 0 else -1
    return sign * acc / math.factorial(m - 1)


def _recip_deriv_oracle(beta, m, k):
    return series_invert(poch_eps_series(LinearParam(beta, 1), m, k)).coefficient(k)


_RECIP_DISPATCH = {
    RecipMethod.RECURRENCE: _recip_deriv_recurrence,
    RecipMethod.CLOSED_SUM: _recip_deriv_closed_sum,
    RecipMethod.DELTA_FORM: _recip_deriv_delta_form,
    RecipMethod.SERIES_ORACLE: _recip_deriv_oracle,
}


def recip_poch_deriv(beta, m: int, k: int, method=RecipMethod.CLOSED_SUM):
    """Q(m, k, beta): the k-th derivative of 1/(beta)_m divided by k!."""
    if m < 0 or k < 0:
        raise DomainError("recip_poch_deriv needs m >= 0 and k >= 0")
    beta = _coerce(beta)
    _recip_pole_check(beta, m)
    return _RECIP_DISPATCH[_as_method(method, RecipMethod)](beta, m, k)


def recip_poch_laurent(n: int, b, m: int, order: int) -> EpsSeries:
    """Laurent expansion of 1/(-n + b*eps)_m around eps = 0 (simple pole).

    Requires m > n >= 0 and b != 0; the factor at shift n is exactly b*eps,
    and the remaining factors split into (1 - b*eps)_n and (1 + b*eps)_{m-n-1}.
    """
    if n < 0:
        raise DomainError("recip_poch_laurent needs n >= 0")
    b = _coerce(b)
    if b == 0:
        raise DomainError("recip_poch_laurent needs a nonzero slope b")
    if m <= n:
        raise DomainError(
            f"recip_poch_laurent needs m > n (got m = {m}, n = {n}); "
            "a pole-free reciprocal belongs to recip_poch_deriv"
        )
    if order < -1:
        raise DomainError("order must be >= -1 (the pole is simple)")
    falling = poch_eps_series(LinearParam(1, -b), n, order + 1)
    rising = poch_eps_series(LinearParam(1, b), m - n - 1, order + 1)
    unit = series_invert(falling * rising)
    return unit.scaled(Fraction((-1) ** n) / b).shifted(-1).truncated(order)


# -- derivatives of a quotient ------------------------------------------------


def _quotient_pf_terms(num: LinearParam, m: int, den: LinearParam, n: int):
    # Simple-pole coefficients of (num)_m/(den)_n for m <= n, den.slope != 0.
    ratio = num.slope / den.slope
    for j in range(n):
        r = Fraction((-1) ** j, math.factorial(j) * math.factorial(n - 1 - j))
        r *= pochhammer(num.constant - ratio * (den.constant + j), m)
        yield j, r


def quotient_deriv(
    num: LinearParam, m: int, den: LinearParam, n: int, k: int, at_eps=0
):
    """(1/k!) d^k/deps^k [ (num)_m / (den)_n ] evaluated at eps = at_eps."""
    if m < 0 or n < 0 or k < 0:
        raise DomainError("quotient_deriv needs m, n, k >= 0")
    at_eps = _coerce(at_eps)
    for j in range(n):
        if den.at(at_eps) + j == 0:
            raise PoleError(
                f"denominator factor {den.constant + j} + {den.slope}*eps "
                f"vanishes at eps = {at_eps}",
                index=j,
            )
    if den.slope == 0:
        # Constant denominator: differentiate the numerator polynomial directly.
        value = num.slope**k * poch_deriv(num.at(at_eps), m, k)
        return value / pochhammer(den.constant, n)
    if m <= n:
        acc = _ZERO
        if k == 0 and m == n:
            acc += (num.slope / den.slope) ** n
        for j, r in _quotient_pf_terms(num, m, den, n):
            acc += r / (den.at(at_eps) + j) ** (k + 1)
        return (-den.slope) ** k * acc
    # Excess numerator degree: peel off (num)_{m-n} and apply the product rule.
    core_num = num.shifted(m - n)
    acc = _ZERO
    for k1 in range(k + 1):
        left = num.slope**k1 * poch_deriv(num.at(at_eps), m - n, k1)
        if left == 0:
            continue
        acc += left * quotient_deriv(core_num, n, den, n, k - k1, at_eps)
    return acc
