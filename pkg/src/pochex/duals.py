"""First-order dual numbers over exact rationals.

A Dual carries a value and the derivative of that value with respect to one
formal perturbation, so running an exact computation on Dual inputs yields
the exact derivative alongside the result.  The operator surface matches
what EpsSeries needs from its scalars, so series arithmetic works over
Duals unchanged.
"""

from __future__ import annotations

from fractions import Fraction


def _lift(x):
    if isinstance(x, Dual):
        return x
    if isinstance(x, (int, Fraction)):
        return Dual(Fraction(x))
    return None


class Dual:
    __slots__ = ("val", "der")

    def __init__(self, val, der=0):
        self.val = Fraction(val)
        self.der = Fraction(der)

    def __repr__(self):
        return f"Dual({self.val}, {self.der})"

    def __bool__(self):
        return self.val != 0 or self.der != 0

    def __eq__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self.val == o.val and self.der == o.der

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __neg__(self):
        return Dual(-self.val, -self.der)

    def __add__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Dual(self.val + o.val, self.der + o.der)

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Dual(self.val - o.val, self.der - o.der)

    def __rsub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Dual(o.val - self.val, o.der - self.der)

    def __mul__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Dual(self.val * o.val, self.val * o.der + self.der * o.val)

    __rmul__ = __mul__

    def _inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("dual number with zero value part has no inverse")
        inv = 1 / self.val
        return Dual(inv, -self.der * inv * inv)

    def __truediv__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self._inverse() ** (-exponent)
        result = Dual(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


def value_part(x) -> Fraction:
    """The plain value of a scalar that may or may not be a Dual."""
    return x.val if isinstance(x, Dual) else Fraction(x)


def delta_part(x) -> Fraction:
    """The derivative component of a scalar; 0 for plain rationals."""
    return x.der if isinstance(x, Dual) else Fraction(0)
