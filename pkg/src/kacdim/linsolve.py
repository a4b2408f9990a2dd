"""Tiny exact linear solver: rational matrix, affine-scalar right-hand side."""

from __future__ import annotations

from fractions import Fraction

from .scalar import AffineScalar, scal


class SingularSystem(ValueError):
    """The system has no unique solution (rank-deficient or inconsistent)."""


def solve_linear(matrix, rhs) -> list[AffineScalar]:
    """Solve M x = rhs exactly.

    M is an m x n matrix of Fractions with m >= n and full column rank; the
    right-hand side entries may carry a free parameter, in which case the
    solution does too (pivots stay rational, so no parameter division occurs).
    """
    m = [list(map(Fraction, row)) for row in matrix]
    b = [scal(v) for v in rhs]
    nrows, ncols = len(m), len(m[0])
    if nrows < ncols:
        raise SingularSystem("underdetermined system")
    row = 0
    where = []
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            raise SingularSystem(f"no pivot in column {col}")
        m[row], m[piv] = m[piv], m[row]
        b[row], b[piv] = b[piv], b[row]
        inv = Fraction(1) / m[row][col]
        m[row] = [inv * v for v in m[row]]
        b[row] = b[row] * inv
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * p for a, p in zip(m[r], m[row])]
                b[r] = b[r] - b[row] * f
        where.append(row)
        row += 1
    # leftover rows must be identically satisfied
    for r in range(row, nrows):
        if not b[r].is_zero:
            raise SingularSystem("inconsistent system")
    return [b[where[c]] for c in range(ncols)]
