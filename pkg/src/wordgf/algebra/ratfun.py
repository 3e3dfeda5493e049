"""Rational functions as unreduced numerator/denominator pairs.

No multivariate gcd is ever taken.  The only normalization is that the
coefficient of the denominator's graded-lex leading monomial is 1, so
equality must be decided by cross-multiplication (:func:`ratfun_eq`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import DivisionByZero, SubstitutionPole
from .polynomial import Polynomial, _coerce
from .variables import VariableName


class RationalFunction:
    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=1):
        num, den = _coerce(num), _coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be polynomials or rationals")
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            num, den = Polynomial(num.ring, {}), Polynomial.constant(1)
        elif den.is_constant():
            num, den = num.scale(1 / den.constant_value()), Polynomial.constant(1)
        else:
            lc = den.leading_coefficient()
            if lc != 1:
                inv = 1 / lc
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _lift(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        p = _coerce(value)
        if p is NotImplemented:
            return NotImplemented
        return cls(p)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        if self.den == g.den:
            return RationalFunction(self.num + g.num, self.den)
        return RationalFunction(self.num * g.den + g.num * self.den, self.den * g.den)

    __radd__ = __add__

    def __sub__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        if self.num == g.den:
            return RationalFunction(g.num, self.den)
        if g.num == self.den:
            return RationalFunction(self.num, g.den)
        return RationalFunction(self.num * g.num, self.den * g.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        if not g.num:
            raise DivisionByZero("division by the zero rational function")
        return self * RationalFunction(g.den, g.num)

    def __rtruediv__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        return g / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(1) / self ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    # -- queries ----------------------------------------------------------

    def __eq__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return NotImplemented
        return ratfun_eq(self, g)

    def is_zero(self) -> bool:
        return not self.num

    def variables(self) -> set[VariableName]:
        return self.num.variables() | self.den.variables()

    def substitute(self, bindings: Mapping[VariableName, object]) -> "RationalFunction":
        return substitute(self, bindings)

    def render(self, symbols=None) -> str:
        return f"({self.num.render(symbols)})/({self.den.render(symbols)})"

    def __repr__(self):
        return f"RationalFunction({self.render()})"


def ratfun_eq(f: RationalFunction, g: RationalFunction) -> bool:
    """True iff ``f.num * g.den == g.num * f.den``."""
    f, g = RationalFunction._lift(f), RationalFunction._lift(g)
    if f.den == g.den:
        return f.num == g.num
    return f.num * g.den == g.num * f.den


def field_ops(f, g, op: str) -> RationalFunction:
    f, g = RationalFunction._lift(f), RationalFunction._lift(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def substitute(f, bindings: Mapping[VariableName, object]) -> RationalFunction:
    """Simultaneous substitution; values may be numbers, polynomials or
    rational functions.  Unbound variables pass through."""
    f = RationalFunction._lift(f)
    poly_map, frac_map = {}, {}
    for v, value in bindings.items():
        if isinstance(value, RationalFunction):
            if value.den.is_constant():
                poly_map[v] = value.num.scale(1 / value.den.constant_value())
            else:
                frac_map[v] = value
        else:
            poly_map[v] = value
    if not frac_map:
        num = f.num.substitute(poly_map)
        den = f.den.substitute(poly_map)
    else:
        num = _substitute_fractional(f.num, poly_map, frac_map)
        den = _substitute_fractional(f.den, poly_map, frac_map)
        num, den = num.num * den.den, den.num * num.den
    if not den:
        raise SubstitutionPole("denominator vanishes under the substitution")
    return RationalFunction(num, den)


def _substitute_fractional(p: Polynomial, poly_map, frac_map) -> RationalFunction:
    # Clear denominators variable by variable: p(a/b) = (sum c_k a^k b^(d-k)) / b^d
    result = RationalFunction(p.substitute(poly_map))
    for v, value in frac_map.items():
        parts = result.num.coeffs_in(v)
        if not parts or set(parts) == {0}:
            continue
        d = max(parts)
        total = Polynomial.constant(0)
        for k, coeff in parts.items():
            total = total + coeff * value.num ** k * value.den ** (d - k)
        result = RationalFunction(total, result.den * value.den ** d)
    return result


def as_fraction(f: RationalFunction) -> Fraction:
    """Value of a constant rational function."""
    if not (f.num.is_constant() and f.den.is_constant()):
        raise ValueError("rational function is not constant")
    return f.num.constant_value() / f.den.constant_value()
