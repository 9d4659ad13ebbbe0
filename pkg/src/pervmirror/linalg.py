"""Exact integer linear algebra.

Matrices are plain nested sequences of Python ints (rows). Nothing here ever
touches floating point; Python ints give arbitrary precision for free.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def transpose(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Transpose; ``ncols`` is needed to transpose a 0-row matrix faithfully."""
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def gcd_content(v: Iterable[int]) -> int:
    """gcd of the absolute values of the entries, 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence[int]) -> IntVector:
    g = gcd_content(v)
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def _bareiss_echelon(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], int, int]:
    """Fraction-free row echelon form.

    Returns (reduced rows, rank, sign of the row permutation). Column skipping
    is allowed; every entry stays an integer minor of M so the divisions by the
    previous pivot are exact.
    """
    rows = [[int(x) for x in r] for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    prev = 1
    sign = 1
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        pivot_row = rows[r]
        for i in range(r + 1, m):
            row = rows[i]
            a = row[c]
            for j in range(c + 1, n):
                row[j] = (row[j] * p - a * pivot_row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return rows, r, sign


def rank_exact(M: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals. Empty matrices (no rows or no columns) have rank 0."""
    if not M or not M[0]:
        return 0
    return _bareiss_echelon(M)[1]


def det_exact(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    rows, rank, sign = _bareiss_echelon(M)
    if rank < n:
        return 0
    return sign * rows[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a*x + b*y = g >= 0
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_normal_form(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form of the row lattice of M, zero rows dropped.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``. The result is a basis of the integer row span of M.
    """
    rows = [[int(x) for x in r] for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        # fold every row below r into row r with unimodular 2x2 steps
        for i in range(r + 1, m):
            a, b = rows[r][c], rows[i][c]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ua, ub = a // g, b // g
            top = [x * s + y * t for s, t in zip(rows[r], rows[i])]
            bot = [-ub * s + ua * t for s, t in zip(rows[r], rows[i])]
            rows[r], rows[i] = top, bot
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [s - q * t for s, t in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row) for row in rows[:r])


def integer_kernel(M: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Z-basis (rows) of {x in Z^ncols : M x = 0}.

    Works by unimodular row reduction of [M^T | I]; the identity part of the
    rows whose M^T part vanishes is a basis of the kernel lattice, which is
    automatically saturated.
    """
    m = len(M)
    aug = [[int(M[i][j]) for i in range(m)] + [int(j == k) for k in range(ncols)]
           for j in range(ncols)]
    r = 0
    for c in range(m):
        for i in range(r + 1, ncols):
            a, b = aug[r][c], aug[i][c]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ua, ub = a // g, b // g
            top = [x * s + y * t for s, t in zip(aug[r], aug[i])]
            bot = [-ub * s + ua * t for s, t in zip(aug[r], aug[i])]
            aug[r], aug[i] = top, bot
        if r < ncols and aug[r][c] != 0:
            r += 1
        if r == ncols:
            break
    return tuple(tuple(row[m:]) for row in aug[r:])


def hermite_basis(vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of the saturation of the integer span of ``vectors``.

    That is the lattice (span_Q vectors) intersected with Z^d, returned in
    Hermite normal form. The row count equals the rank of the inputs.
    """
    if not vectors:
        return ()
    d = len(vectors[0])
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if rank_exact(vecs) == 0:
        return ()
    # integer vectors orthogonal to the span, then everything orthogonal to those
    ortho = integer_kernel(vecs, d)
    if not ortho:
        return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    return hermite_normal_form(integer_kernel(ortho, d))


def lattice_index(sub: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> int:
    """Index of the row lattice of ``sub`` inside that of ``basis`` (same rank).

    Computed as the ratio of gcds of maximal minors; 0 if the ranks differ.
    """
    from itertools import combinations

    k = len(basis)
    if rank_exact(sub) != k:
        return 0
    d = len(basis[0])

    def minors_gcd(rows):
        hnf = hermite_normal_form(rows)
        g = 0
        for cols in combinations(range(d), k):
            g = gcd(g, det_exact([[r[c] for c in cols] for r in hnf]))
        return g

    return minors_gcd(sub) // minors_gcd(basis)
