"""Truncated power series in ``t`` of rational functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import SeriesNotNormalized
from .polynomial import Polynomial
from .ratfun import RationalFunction
from .variables import S, T


@dataclass(frozen=True)
class SeriesPrefix:
    """Coefficients of ``t**0 .. t**N``; none of them contains ``t``."""

    coefficients: tuple

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, n) -> Polynomial:
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def count(self, i: int, n: int) -> Fraction:
        """Coefficient of ``s**i`` inside the ``t**n`` coefficient."""
        return self.coefficients[n].coeffs_in(S).get(i, Polynomial.constant(0)).constant_value()

    def render(self, symbols=None) -> list[str]:
        return [c.render(symbols) for c in self.coefficients]

    def __eq__(self, other):
        if isinstance(other, SeriesPrefix):
            other = other.coefficients
        try:
            other = tuple(other)
        except TypeError:
            return NotImplemented
        return len(other) == len(self.coefficients) and all(
            a == b for a, b in zip(self.coefficients, other)
        )

    __hash__ = None


def series_in_t(f: RationalFunction, N: int) -> SeriesPrefix:
    """Taylor coefficients of f in t up to t**N.

    Uses ``p_n = (c_n - sum_{k>=1} d_k p_{n-k}) / d_0`` where c and d are the
    t-coefficients of numerator and denominator; d_0 must be a nonzero
    constant.
    """
    if N < 0:
        raise ValueError("series order must be nonnegative")
    f = RationalFunction._lift(f)
    num = f.num.coeffs_in(T)
    den = f.den.coeffs_in(T)
    d0 = den.get(0)
    if d0 is None or not d0 or not d0.is_constant():
        raise SeriesNotNormalized("t-free part of the denominator must be a nonzero constant")
    inv = 1 / d0.constant_value()
    den_items = sorted((k, d) for k, d in den.items() if k > 0)
    zero = Polynomial.constant(0)
    coeffs = []
    for n in range(N + 1):
        acc = num.get(n, zero)
        for k, d in den_items:
            if k > n:
                break
            prev = coeffs[n - k]
            if prev:
                acc = acc - d * prev
        coeffs.append(acc.scale(inv).compact())
    return SeriesPrefix(tuple(coeffs))
