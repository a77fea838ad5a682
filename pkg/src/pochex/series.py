"""Exact rational scalars and truncated Laurent series in one variable.

Scalars are `fractions.Fraction` values (aliased `Rational` here); they are
always stored reduced with a positive denominator, and `str()` renders them
in the package's bit-exact text format (`-3/4`, `0`, `12`).  `parse_rational`
is the strict inverse of that rendering.

`EpsSeries` is a truncated Laurent series: coefficients are known exactly
from `min_exponent` through `max_exponent` (inclusive), are exactly zero
below `min_exponent`, and are unknown above `max_exponent`.  Arithmetic
never reports a coefficient the operands cannot justify, which is why the
truncation order of a result depends on the pole depths of the inputs.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, NonzeroConstantTerm, ParseError, ZeroSeries

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^-?[0-9]+(?:/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse `p` or `p/q` (decimal digits, optional leading minus)."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = s.partition("/")
    if den:
        if int(den) == 0:
            raise ParseError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def format_rational(value) -> str:
    """Render a scalar in the bit-exact text format (inverse of parse_rational)."""
    return str(value)


def _coerce(value):
    # int -> Fraction; exact scalar types (Fraction, Dual) pass through.
    if isinstance(value, int):
        return Fraction(value)
    return value


class EpsSeries:
    """Truncated Laurent series sum(c_e * eps**e, min_exponent <= e <= max_exponent).

    Instances are immutable and normalized: leading zero coefficients at
    negative exponents are stripped, and an all-zero series is stored with
    min_exponent = 0.  Coefficients are Fractions (or any exact field scalar
    with the same operator surface, such as `pochex.duals.Dual`).
    """

    __slots__ = ("_min", "_coeffs")

    def __init__(self, coefficients: Iterable, min_exponent: int = 0):
        coeffs = [_coerce(c) for c in coefficients]
        if not coeffs:
            raise DomainError("a series needs at least one coefficient in its window")
        max_exp = min_exponent + len(coeffs) - 1
        if all(c == 0 for c in coeffs):
            # Canonical zero; window clamped to start at 0 (see module notes).
            max_exp = max(max_exp, 0)
            self._min = 0
            self._coeffs = (_ZERO,) * (max_exp + 1)
            return
        while min_exponent < 0 and coeffs[0] == 0:
            del coeffs[0]
            min_exponent += 1
        self._min = min_exponent
        self._coeffs = tuple(coeffs)

    # -- window -----------------------------------------------------------

    @property
    def min_exponent(self) -> int:
        return self._min

    @property
    def max_exponent(self) -> int:
        return self._min + len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def _get(self, exponent: int):
        if exponent < self._min:
            return _ZERO
        return self._coeffs[exponent - self._min]

    def coefficient(self, exponent: int):
        """Coefficient of eps**exponent; exact zero below the window, error above it."""
        if exponent > self.max_exponent:
            raise DomainError(
                f"coefficient at exponent {exponent} lies above the truncation "
                f"order {self.max_exponent}"
            )
        return self._get(exponent)

    def leading_exponent(self):
        """Exponent of the lowest known nonzero coefficient, or None if all zero."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return self._min + i
        return None

    def is_zero(self) -> bool:
        return self.leading_exponent() is None

    # -- basic reshaping ---------------------------------------------------

    def truncated(self, new_max: int) -> "EpsSeries":
        """Forget coefficients above new_max (never extends the window)."""
        if new_max >= self.max_exponent:
            return self
        if new_max < self._min:
            return EpsSeries([_ZERO], max(new_max, 0))
        return EpsSeries(self._coeffs[: new_max - self._min + 1], self._min)

    def shifted(self, offset: int) -> "EpsSeries":
        """Multiply by eps**offset (exact)."""
        return EpsSeries(self._coeffs, self._min + offset)

    def scaled(self, factor) -> "EpsSeries":
        factor = _coerce(factor)
        return EpsSeries([factor * c for c in self._coeffs], self._min)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        new_min = min(self._min, other._min)
        new_max = min(self.max_exponent, other.max_exponent)
        coeffs = [self._get(e) + other._get(e) for e in range(new_min, new_max + 1)]
        return EpsSeries(coeffs, new_min)

    def __sub__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return EpsSeries([-c for c in self._coeffs], self._min)

    def __mul__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        # The product window is limited by each operand's truncation shifted
        # by the other's leading exponent.
        pa = self.leading_exponent()
        pb = other.leading_exponent()
        pa = self._min if pa is None else pa
        pb = other._min if pb is None else pb
        new_min = pa + pb
        new_max = min(self.max_exponent + pb, other.max_exponent + pa)
        out = [_ZERO] * (new_max - new_min + 1)
        for i, ca in enumerate(self._coeffs):
            if ca == 0:
                continue
            ea = self._min + i
            for j, cb in enumerate(other._coeffs):
                if cb == 0:
                    continue
                e = ea + other._min + j
                if e > new_max:
                    break
                out[e - new_min] = out[e - new_min] + ca * cb
        return EpsSeries(out, new_min)

    def __eq__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        if self.max_exponent != other.max_exponent:
            return False
        lo = min(self._min, other._min)
        return all(
            self._get(e) == other._get(e) for e in range(lo, self.max_exponent + 1)
        )

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            e = self._min + i
            if c == 0 and len(self._coeffs) > 1:
                continue
            if e == 0:
                terms.append(f"{c}")
            elif e == 1:
                terms.append(f"{c}*eps")
            else:
                terms.append(f"{c}*eps^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"EpsSeries({body} + O(eps^{self.max_exponent + 1}))"

    # -- constructors --------------------------------------------------------

    @staticmethod
    def constant(value, order: int = 0) -> "EpsSeries":
        if order < 0:
            raise DomainError("truncation order of a constant must be >= 0")
        return EpsSeries([_coerce(value)] + [_ZERO] * order, 0)

    @staticmethod
    def one(order: int = 0) -> "EpsSeries":
        return EpsSeries.constant(_ONE, order)

    @staticmethod
    def zero(order: int = 0) -> "EpsSeries":
        return EpsSeries.constant(_ZERO, order)


def polynomial_series(coefficients: Iterable, order: int) -> EpsSeries:
    """Series for an exact polynomial (constant term first), window [0, order].

    The caller asserts the list is the complete polynomial, so padding with
    zeros up to `order` is justified.
    """
    if order < 0:
        raise DomainError("truncation order must be >= 0")
    coeffs = [_coerce(c) for c in coefficients]
    if len(coeffs) < order + 1:
        coeffs = coeffs + [_ZERO] * (order + 1 - len(coeffs))
    else:
        coeffs = coeffs[: order + 1]
    return EpsSeries(coeffs, 0)


def series_add(a: EpsSeries, b: EpsSeries) -> EpsSeries:
    return a + b


def series_mul(a: EpsSeries, b: EpsSeries) -> EpsSeries:
    return a * b


def series_invert(a: EpsSeries) -> EpsSeries:
    """Multiplicative inverse.

    If the lowest known nonzero coefficient sits at exponent p, the result
    window is [-p, max_exponent - 2p]: relative precision is preserved and
    inverting twice restores the original window.
    """
    p = a.leading_exponent()
    if p is None:
        raise ZeroSeries(
            "cannot invert a series with no known nonzero coefficient "
            f"(window [{a.min_exponent}, {a.max_exponent}])"
        )
    u = list(a.coefficients[p - a.min_exponent :])
    lead = u[0]
    v = [1 / lead]
    for n in range(1, len(u)):
        acc = _ZERO
        for i in range(1, n + 1):
            if u[i] != 0:
                acc = acc + u[i] * v[n - i]
        v.append(-acc / lead)
    return EpsSeries(v, -p)


def series_div(a: EpsSeries, b: EpsSeries) -> EpsSeries:
    return a * series_invert(b)


def _list_mul_trunc(a: list, b: list, order: int) -> list:
    out = [_ZERO] * (order + 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if i + j > order:
                break
            if cb != 0:
                out[i + j] = out[i + j] + ca * cb
    return out


def series_compose(outer: EpsSeries, inner: EpsSeries) -> EpsSeries:
    """Substitute `inner` into `outer`, truncated at the common order.

    Requires outer.min_exponent >= 0 and inner with no negative exponents and
    zero constant term (otherwise infinitely many outer terms would feed one
    output coefficient).
    """
    if outer.min_exponent < 0:
        raise DomainError("outer series of a composition must have no pole")
    if inner.min_exponent < 0:
        raise DomainError("inner series of a composition must have no pole")
    if inner.min_exponent == 0 and inner.coefficients[0] != 0:
        raise NonzeroConstantTerm(
            f"inner series has constant term {inner.coefficients[0]}, expected 0"
        )
    order = min(outer.max_exponent, inner.max_exponent)
    o = [outer._get(e) for e in range(order + 1)]
    g = [inner._get(e) for e in range(order + 1)]
    acc = [o[order]] + [_ZERO] * order
    for e in range(order - 1, -1, -1):
        acc = _list_mul_trunc(acc, g, order)
        acc[0] = acc[0] + o[e]
    return EpsSeries(acc, 0)


def series_pow(a: EpsSeries, exponent: int) -> EpsSeries:
    """Integer power; negative exponents go through series_invert."""
    if exponent < 0:
        return series_pow(series_invert(a), -exponent)
    result = EpsSeries.one(a.max_exponent)
    base = a
    n = exponent
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def series_elementary(kind: str, order: int) -> EpsSeries:
    """Reference expansions of elementary functions: 'exp' or 'log1p'."""
    if order < 0:
        raise DomainError("truncation order must be >= 0")
    if kind == "exp":
        coeffs = [_ONE]
        for n in range(1, order + 1):
            coeffs.append(coeffs[-1] / n)
        return EpsSeries(coeffs, 0)
    if kind == "log1p":
        coeffs = [_ZERO]
        for n in range(1, order + 1):
            coeffs.append(Fraction((-1) ** (n - 1), n))
        return EpsSeries(coeffs[: order + 1], 0)
    raise DomainError(f"unknown elementary series kind: {kind!r}")
