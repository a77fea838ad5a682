"""Partial-fraction decomposition of quotients of rising factorials.

A quotient  prod (A_p + a_p eps)_{m_p} / prod (B_q + b_q eps)_{n_q}  whose
numerator eps-degree does not exceed its denominator eps-degree, and whose
denominator poles are simple, splits into a constant plus simple-pole terms
C / (B_q + j_q + b_q eps).  The k-th normalized derivative of the quotient
is then a single finite sum over those poles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError, DomainError, PoleError, RepeatedRoot, ZeroSlope
from .pochhammer import LinearParam, pochhammer

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value):
    if isinstance(value, int):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class PFTerm:
    """One simple-pole contribution: coefficient / (pole_constant + pole_slope*eps)."""

    coefficient: Fraction
    pole_constant: Fraction
    pole_slope: Fraction

    @property
    def pole_location(self) -> Fraction:
        return -self.pole_constant / self.pole_slope


@dataclass(frozen=True)
class PartialFractionForm:
    """constant + sum of PFTerms, the whole thing times a scalar prefactor."""

    constant: Fraction
    terms: tuple
    scalar: Fraction = _ONE

    def evaluate(self, at_eps) -> Fraction:
        at_eps = _coerce(at_eps)
        return pf_derivative(self, 0, at_eps)

    def render(self) -> str:
        """Human-readable sum, e.g. `2/(1+eps) - 3/(2+eps)`."""
        pieces: list[str] = []
        if self.constant != 0 or not self.terms:
            pieces.append((str(self.constant), False))
        for t in self.terms:
            c = t.coefficient
            negative = c < 0
            c = -c if negative else c
            if t.pole_slope == 1:
                slope_txt = "+eps"
            elif t.pole_slope == -1:
                slope_txt = "-eps"
            elif t.pole_slope < 0:
                slope_txt = f"-{-t.pole_slope}*eps"
            else:
                slope_txt = f"+{t.pole_slope}*eps"
            pieces.append((f"{c}/({t.pole_constant}{slope_txt})", negative))
        text = ""
        for i, (piece, negative) in enumerate(pieces):
            if i == 0:
                text = ("-" if negative else "") + piece
            else:
                text += (" - " if negative else " + ") + piece
        if self.scalar != 1:
            return f"{self.scalar}*({text})"
        return text

    def __str__(self):
        return self.render()


class PochProductQuotient:
    """A quotient of products of rising factorials with linear-in-eps arguments.

    Zero-slope factors are evaluated and folded into `.scalar` at construction
    (they contribute no eps-dependence); the remaining factors must satisfy the
    degree condition sum(m_p) <= sum(n_q).
    """

    __slots__ = ("numer", "denom", "scalar")

    def __init__(self, numer=(), denom=()):
        scalar = _ONE
        kept_num = []
        for param, length in numer:
            if length < 0:
                raise DomainError("factor lengths must be >= 0")
            if param.slope == 0 or length == 0:
                scalar *= pochhammer(param.constant, length)
            else:
                kept_num.append((param, int(length)))
        kept_den = []
        for q, (param, length) in enumerate(denom):
            if length < 0:
                raise DomainError("factor lengths must be >= 0")
            if param.slope == 0 or length == 0:
                value = pochhammer(param.constant, length)
                if value == 0:
                    for j in range(length):
                        if param.constant + j == 0:
                            raise PoleError(
                                f"slope-free denominator factor ({param.constant})_{length} "
                                f"vanishes identically (shift {j})",
                                index=j,
                                factor=q,
                            )
                scalar /= value
            else:
                kept_den.append((param, int(length)))
        num_degree = sum(m for _, m in kept_num)
        den_degree = sum(n for _, n in kept_den)
        if num_degree > den_degree:
            raise DegreeError(
                f"numerator eps-degree {num_degree} exceeds denominator "
                f"eps-degree {den_degree}; reduce the excess first"
            )
        self.numer = tuple(kept_num)
        self.denom = tuple(kept_den)
        self.scalar = scalar

    def __repr__(self):
        return (
            f"PochProductQuotient(numer={list(self.numer)}, "
            f"denom={list(self.denom)}, scalar={self.scalar})"
        )


def decompose_single(num: LinearParam, m: int, den: LinearParam, n: int) -> PartialFractionForm:
    """Decompose (num)_m / (den)_n for m <= n, den.slope != 0.

    The poles of a single denominator factor are automatically simple.  The
    constant is (a/b)**n when the degrees are equal, else 0.
    """
    if m < 0 or n < 0:
        raise DomainError("decompose_single needs m >= 0 and n >= 0")
    if den.slope == 0:
        raise ZeroSlope("denominator factor has zero slope: nothing to decompose over")
    if m > n:
        raise DegreeError(
            f"numerator length {m} exceeds denominator length {n}; "
            "use reduce_excess first"
        )
    ratio = num.slope / den.slope
    constant = ratio**n if m == n else _ZERO
    terms = []
    for j in range(n):
        r = Fraction((-1) ** j, math.factorial(j) * math.factorial(n - 1 - j))
        r *= pochhammer(num.constant - ratio * (den.constant + j), m)
        terms.append(PFTerm(r, den.constant + j, den.slope))
    return PartialFractionForm(constant, tuple(terms), _ONE)


def decompose_multi(quotient: PochProductQuotient) -> PartialFractionForm:
    """Decompose a multi-factor quotient over the union of its simple poles.

    Every pole (B_q + j_q)/(-b_q) must be distinct across all denominator
    factors and shifts; collisions raise RepeatedRoot naming the pairs.
    """
    poles = []  # (q, j, location)
    for q, (param, length) in enumerate(quotient.denom):
        for j in range(length):
            poles.append((q, j, -(param.constant + j) / param.slope))
    by_location: dict[Fraction, tuple] = {}
    collisions = []
    for q, j, loc in poles:
        if loc in by_location:
            collisions.append((by_location[loc], (q, j), loc))
        else:
            by_location[loc] = (q, j)
    if collisions:
        spots = "; ".join(
            f"factors {a} and {b} both vanish at eps = {loc}" for a, b, loc in collisions
        )
        raise RepeatedRoot(f"repeated denominator root: {spots}", collisions=collisions)

    num_degree = sum(m for _, m in quotient.numer)
    den_degree = sum(n for _, n in quotient.denom)
    if num_degree == den_degree:
        constant = _ONE
        for param, m in quotient.numer:
            constant *= param.slope**m
        for param, n in quotient.denom:
            constant /= param.slope**n
    else:
        constant = _ZERO

    terms = []
    for q, (den_q, n_q) in enumerate(quotient.denom):
        b_q = den_q.slope
        for j in range(n_q):
            root = den_q.constant + j  # the pole sits where B_q + j + b_q*eps = 0
            c = Fraction((-1) ** j, math.factorial(j) * math.factorial(n_q - 1 - j))
            for param, m_p in quotient.numer:
                c *= pochhammer(param.constant - (param.slope / b_q) * root, m_p)
            for kk, (den_k, n_k) in enumerate(quotient.denom):
                if kk == q:
                    continue
                c /= pochhammer(den_k.constant - (den_k.slope / b_q) * root, n_k)
            terms.append(PFTerm(c, root, b_q))
    return PartialFractionForm(constant, tuple(terms), quotient.scalar)


def pf_derivative(form: PartialFractionForm, k: int, at_eps=0) -> Fraction:
    """(1/k!) d^k/deps^k of the decomposed quotient, evaluated at eps = at_eps."""
    if k < 0:
        raise DomainError("pf_derivative needs k >= 0")
    at_eps = _coerce(at_eps)
    acc = form.constant if k == 0 else _ZERO
    for i, t in enumerate(form.terms):
        denominator = t.pole_constant + t.pole_slope * at_eps
        if denominator == 0:
            raise PoleError(
                f"term {t.coefficient}/({t.pole_constant}+{t.pole_slope}*eps) "
                f"has its pole at eps = {at_eps}",
                index=i,
            )
        acc += (-t.pole_slope) ** k * t.coefficient / denominator ** (k + 1)
    return form.scalar * acc


def reduce_excess(num: LinearParam, m: int, den: LinearParam, n: int):
    """Split an excess-degree quotient (m > n) into a polynomial prefix and a core.

    Returns ((num, m - n), core) with core = (num + (m-n))_n / (den)_n, an
    equal-degree quotient ready for decomposition.
    """
    if m <= n:
        raise DomainError(
            f"reduce_excess needs m > n (got m = {m}, n = {n}); "
            "the quotient already decomposes as is"
        )
    prefix = (num, m - n)
    core = PochProductQuotient(
        numer=[(num.shifted(m - n), n)], denom=[(den, n)]
    )
    return prefix, core
