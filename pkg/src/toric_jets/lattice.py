"""Exact integer linear algebra on N = Z^n and its dual M.

Vectors are plain tuples of Python ints.  Results are kept inside the signed
64-bit range; anything larger raises ``OverflowError`` instead of silently
growing, which keeps the behaviour identical to a fixed-width implementation.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .errors import DimensionError, NotUnimodularError, ShapeError, ZeroVectorError

LatticeVector = tuple[int, ...]
DualVector = tuple[int, ...]
IntegerMatrix = Sequence[Sequence[int]]

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"integer {value} outside the signed 64-bit range")
    return value


def as_vector(v: Sequence[int]) -> tuple[int, ...]:
    out = []
    for x in v:
        if isinstance(x, bool) or int(x) != x:
            raise TypeError(f"lattice coordinates must be integers, got {x!r}")
        out.append(_checked(int(x)))
    return tuple(out)


def pair(m: Sequence[int], v: Sequence[int]) -> int:
    """The pairing <m, v> of a dual vector with a lattice vector."""
    if len(m) != len(v):
        raise DimensionError(f"cannot pair vectors of length {len(m)} and {len(v)}")
    return _checked(sum(a * b for a, b in zip(m, v)))


def add(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    if len(v) != len(w):
        raise DimensionError(f"cannot add vectors of length {len(v)} and {len(w)}")
    return tuple(_checked(a + b) for a, b in zip(v, w))


def sub(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    if len(v) != len(w):
        raise DimensionError(f"cannot subtract vectors of length {len(v)} and {len(w)}")
    return tuple(_checked(a - b) for a, b in zip(v, w))


def scale(c: int, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(_checked(c * a) for a in v)


def _square(A: IntegerMatrix) -> list[list[int]]:
    rows = [list(r) for r in A]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ShapeError(f"expected a non-empty square matrix, got {len(rows)} rows")
    return rows


def det(A: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = _square(A)
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Bareiss guarantees divisibility
                M[i][j] = _checked((M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev)
        prev = M[k][k]
    return _checked(sign * M[n - 1][n - 1])


def solve_unimodular(A: IntegerMatrix, b: Sequence[int]) -> tuple[int, ...]:
    """Return the integer x with ``A x = b`` for a square A of determinant +-1.

    Row i of A is read as the linear form x -> sum_j A[i][j] x[j], so passing
    the rays of a smooth cone as rows and ``-a_i`` as ``b`` yields the dual
    vector m with <m, rho_i> = -a_i.
    """
    rows = _square(A)
    n = len(rows)
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    d = det(rows)
    if d not in (1, -1):
        raise NotUnimodularError(f"matrix has determinant {d}, expected +-1")
    x = []
    for j in range(n):
        replaced = [r[:j] + [b[i]] + r[j + 1:] for i, r in enumerate(rows)]
        x.append(_checked(det(replaced) * d))
    return tuple(x)


def coordinates_in_basis(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    """Integer coefficients c with ``v = sum_i c_i basis[i]`` (basis unimodular)."""
    n = len(basis)
    transposed = [[basis[i][j] for i in range(n)] for j in range(n)]
    return solve_unimodular(transposed, v)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVectorError("the zero vector has no primitive generator")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def lattice_length(v: Sequence[int]) -> int:
    """Number of lattice steps along the segment from 0 to v (gcd of coordinates)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free Gaussian elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        p = M[r][c]
        for i in range(r + 1, len(M)):
            f = M[i][c]
            row = M[i]
            top = M[r]
            for j in range(c, ncols):
                row[j] = (row[j] * p - f * top[j]) // prev
        prev = p
        r += 1
        if r == len(M):
            break
    return r
