"""Fraction-free (Bareiss) elimination over the polynomial ring."""

from __future__ import annotations

from typing import Sequence

from ..errors import SingularSystem
from .polynomial import Polynomial, Ring, _coerce
from .ratfun import RationalFunction


def _to_poly(x) -> Polynomial:
    p = _coerce(x)
    if p is NotImplemented:
        raise TypeError(f"matrix entries must be polynomials, got {type(x).__name__}")
    return p


def bareiss_solve(A: Sequence[Sequence], b: Sequence) -> tuple[list[Polynomial], Polynomial]:
    """Solve ``A x = b`` returning ``(X, d)`` with ``x_i = X_i / d``.

    ``d`` is the last Bareiss pivot, equal to ``det(A)`` up to sign.
    """
    n = len(A)
    if n == 0 or any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("need a nonempty square system with matching right-hand side")
    rows = [[_to_poly(x) for x in row] + [_to_poly(bi)] for row, bi in zip(A, b)]
    ring = Ring.union(*(p.ring for row in rows for p in row))
    rows = [[p.lift(ring) if not p.is_constant() else Polynomial(ring, p.terms) for p in row] for row in rows]

    prev = None
    for k in range(n):
        candidates = [i for i in range(k, n) if rows[i][k]]
        if not candidates:
            raise SingularSystem("coefficient matrix is singular")
        best = min(candidates, key=lambda i: len(rows[i][k]))
        rows[k], rows[best] = rows[best], rows[k]
        pivot_row = rows[k]
        p = pivot_row[k]
        for i in range(k + 1, n):
            row = rows[i]
            m = row[k]
            for j in range(k + 1, n + 1):
                v = p * row[j] if row[j] else row[j]
                if m and pivot_row[j]:
                    v = v - m * pivot_row[j]
                if prev is not None and v:
                    v = v.exquo(prev)
                row[j] = v
            row[k] = Polynomial(ring, {})
        prev = p

    d = rows[n - 1][n - 1]
    X: list[Polynomial] = [Polynomial(ring, {})] * n
    X[n - 1] = rows[n - 1][n]
    for i in range(n - 2, -1, -1):
        acc = d * rows[i][n]
        for j in range(i + 1, n):
            if rows[i][j] and X[j]:
                acc = acc - rows[i][j] * X[j]
        X[i] = acc.exquo(rows[i][i])
    return X, d


def solve_linear_system(A: Sequence[Sequence], b: Sequence) -> list[RationalFunction]:
    """Exact solution of a square polynomial system as rational functions."""
    X, d = bareiss_solve(A, b)
    return [RationalFunction(x, d) for x in X]
