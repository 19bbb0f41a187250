"""Small exact matrix kernels: products, binary powering, Bareiss determinants.

Matrices are lists of rows. Entries may be anything supporting ``+ - *``
(Fractions for the determinant routines).
"""

from __future__ import annotations

from fractions import Fraction

from .ring import HyperbolicNumber


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == k else zero for k in range(n)] for i in range(n)]


def mat_mul(a, b):
    inner = len(b)
    cols = len(b[0])
    out = []
    for row in a:
        out.append([sum((row[k] * b[k][c] for k in range(1, inner)), row[0] * b[0][c])
                    for c in range(cols)])
    return out


def mat_vec(a, v):
    """``a @ v`` where ``v`` may hold non-scalar entries (e.g. spinors)."""
    return [sum((row[k] * v[k] for k in range(1, len(v))), row[0] * v[0]) for row in a]


def mat_pow(m, n: int):
    """``m ** n`` by repeated squaring; ``n >= 0``."""
    if n < 0:
        raise ValueError("negative matrix power")
    integral = all(isinstance(x, Fraction) and x.denominator == 1 for row in m for x in row)
    if integral:
        base = [[int(x) for x in row] for row in m]
        result = identity(len(m), 1, 0)
    else:
        result = identity(len(m))
        base = m
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    if integral:
        return [[Fraction(x) for x in row] for row in result]
    return result


def bareiss_det(matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    Every division in the loop is exact, so integer input never leaves the
    integers; rational input stays rational.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for c in range(k + 1, n):
                m[i][c] = (m[i][c] * pivot - m[i][k] * m[k][c]) / prev
            m[i][k] = Fraction(0)
        prev = pivot
    return sign * m[n - 1][n - 1]


def hyperbolic_det(matrix) -> HyperbolicNumber:
    """Determinant over the hyperbolic numbers.

    The ring splits as a product of two copies of Q through the idempotent
    coordinates ``a+b`` and ``a-b``; the determinant is taken in each copy.
    """
    lifted = [[x if isinstance(x, HyperbolicNumber) else HyperbolicNumber(x) for x in row]
              for row in matrix]
    u = bareiss_det([[x.re + x.jpart for x in row] for row in lifted])
    v = bareiss_det([[x.re - x.jpart for x in row] for row in lifted])
    return HyperbolicNumber.from_idempotent(u, v)
