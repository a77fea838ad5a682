"""Exact combinatorial quantities used throughout the package.

Covers signed Stirling numbers of the first kind, generalized Bernoulli
polynomials, plain/modified harmonic numbers, two flavours of nested unit
sums, rational-argument binomials, and double factorials.  Everything is a
Fraction; void sums are zero by convention.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import DomainError
from .series import EpsSeries, series_invert, series_pow

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Triangular table of signed Stirling numbers of the first kind, grown on
# demand.  Rows are appended complete, never mutated afterwards.
_stirling_rows: list[tuple[int, ...]] = [(1,)]
_stirling_lock = threading.Lock()


def stirling_s1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind s(n, k).

    Convention: [log(1+t)]**k = k! * sum(s(n, k) t**n / n!, n >= k), i.e.
    s(n+1, k) = s(n, k-1) - n*s(n, k) with s(0, 0) = 1.
    """
    if n < 0 or k < 0:
        raise DomainError("stirling_s1 needs n >= 0 and k >= 0")
    if k > n:
        return _ZERO
    with _stirling_lock:
        while len(_stirling_rows) <= n:
            m = len(_stirling_rows) - 1
            prev = _stirling_rows[-1]
            row = [0] * (m + 2)
            for j in range(m + 2):
                above = prev[j] if j <= m else 0
                left = prev[j - 1] if 1 <= j else 0
                row[j] = left - m * above
            _stirling_rows.append(tuple(row))
        return Fraction(_stirling_rows[n][k])


# Cache: (order a, argument x) -> list of B_n^(a)(x) for n = 0..N.
_bernoulli_cache: dict[tuple, list[Fraction]] = {}
_bernoulli_lock = threading.Lock()


def _bernoulli_values(n: int, a: int, x: Fraction) -> list[Fraction]:
    # Coefficients of (z/(e^z - 1))**a * e^{xz}, scaled by n!.
    order = n
    base = EpsSeries([Fraction(1, math.factorial(j + 1)) for j in range(order + 1)])
    core = series_pow(series_invert(base), a)
    expx = EpsSeries([x**j / math.factorial(j) for j in range(order + 1)])
    prod = core * expx
    return [prod.coefficient(i) * math.factorial(i) for i in range(n + 1)]


def gen_bernoulli_poly(n: int, a: int, x) -> Fraction:
    """Generalized Bernoulli polynomial B_n^(a)(x).

    Defined by (z/(e^z - 1))**a * e^{xz} = sum(B_n^(a)(x) z**n / n!).
    """
    if n < 0:
        raise DomainError("gen_bernoulli_poly needs n >= 0")
    if not isinstance(a, int) or a < 1:
        raise DomainError("gen_bernoulli_poly needs integer order a >= 1")
    x = Fraction(x)
    key = (a, x)
    with _bernoulli_lock:
        values = _bernoulli_cache.get(key)
        if values is None or len(values) <= n:
            values = _bernoulli_values(max(n, 8), a, x)
            _bernoulli_cache[key] = values
        return values[n]


def harmonic(m: int, k: int) -> Fraction:
    """Harmonic number of order k: sum(1/j**k, j = 1..m)."""
    if m < 0 or k < 0:
        raise DomainError("harmonic needs m >= 0 and k >= 0")
    return sum((Fraction(1, j**k) for j in range(1, m + 1)), _ZERO)


def mod_harmonic(m: int, k: int) -> Fraction:
    """Binomial-alternating harmonic sum: sum((-1)**(j-1) C(m,j)/j**k, j=1..m).

    The empty case m = 0 is 1 for k = 0 and 0 otherwise.
    """
    if m < 0 or k < 0:
        raise DomainError("mod_harmonic needs m >= 0 and k >= 0")
    if m == 0:
        return _ONE if k == 0 else _ZERO
    return sum(
        (Fraction((-1) ** (j - 1) * math.comb(m, j), j**k) for j in range(1, m + 1)),
        _ZERO,
    )


def nested_ones_Z(m: int, k: int) -> Fraction:
    """Strictly-nested unit sum: sum over m >= i1 > i2 > ... > ik >= 1 of 1/(i1*...*ik)."""
    if m < 0 or k < 0:
        raise DomainError("nested_ones_Z needs m >= 0 and k >= 0")
    if k == 0:
        return _ONE
    if k > m:
        return _ZERO
    row = [_ONE] + [_ZERO] * k  # row[j] = Z(i, j) as i grows
    for i in range(1, m + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = row[j] + row[j - 1] / i
    return row[k]


def nested_ones_S(m: int, k: int) -> Fraction:
    """Non-strictly-nested unit sum: S(m, k) = sum(S(i, k-1)/i, i = 1..m), S(m, 0) = 1."""
    if m < 0 or k < 0:
        raise DomainError("nested_ones_S needs m >= 0 and k >= 0")
    if k == 0:
        return _ONE
    prev = [_ONE] * (m + 1)
    for _ in range(k):
        cur = [_ZERO] * (m + 1)
        for i in range(1, m + 1):
            cur[i] = cur[i - 1] + prev[i] / i
        prev = cur
    return prev[m]


def binomial(top, k: int) -> Fraction:
    """Binomial coefficient with arbitrary rational (or integer) top argument."""
    if k < 0:
        raise DomainError("binomial needs k >= 0")
    if isinstance(top, int) and top >= 0:
        return Fraction(math.comb(top, k))
    if isinstance(top, Fraction) and top.denominator == 1 and top >= 0:
        return Fraction(math.comb(int(top), k))
    top = Fraction(top)
    num = _ONE
    for i in range(k):
        num *= top - i
    return num / math.factorial(k)


def double_factorial(n: int) -> Fraction:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise DomainError("double factorial is only defined for n >= -1")
    value = 1
    while n > 1:
        value *= n
        n -= 2
    return Fraction(value)
