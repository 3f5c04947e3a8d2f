"""Exact linear algebra over the rationals.

Everything here works on plain sequences of :class:`fractions.Fraction`
and never touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

Vector = Sequence[Fraction]


def dot(u: Vector, v: Vector) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Vector, v: Vector) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Vector, v: Vector) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u: Vector) -> tuple:
    return tuple(c * a for a in u)


def _echelon(rows: Sequence[Vector]) -> List[List[Fraction]]:
    """Row-reduce a copy of ``rows``; return the nonzero echelon rows."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                factor = m[i][c] / pv
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return m[:r]


def rank(rows: Sequence[Vector]) -> int:
    return len(_echelon(rows))


def affinely_independent(points: Sequence[Vector]) -> bool:
    if len(points) <= 1:
        return True
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) == len(points) - 1


def solve(a: Sequence[Vector], b: Vector) -> Optional[List[Fraction]]:
    """One solution of ``a x = b`` (free variables set to zero), or None.

    ``a`` is given as a list of rows.
    """
    nrows = len(a)
    if nrows == 0:
        return []
    ncols = len(a[0])
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x


def nonnegative_combination(columns: Sequence[Vector], target: Vector) -> Optional[List[Fraction]]:
    """Find ``lam >= 0`` with ``sum(lam[j] * columns[j]) == target``, or None.

    Phase-one simplex on the standard-form system with Bland's rule, in exact
    arithmetic, so it always terminates and the answer is a certificate.
    """
    n = len(target)
    m = len(columns)
    if n == 0:
        return [Fraction(0)] * m
    # tableau rows: [A | I_art | b], b >= 0
    rows: List[List[Fraction]] = []
    for i in range(n):
        coeffs = [Fraction(columns[j][i]) for j in range(m)]
        rhs = Fraction(target[i])
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(1) if k == i else Fraction(0) for k in range(n)]
        rows.append(coeffs + art + [rhs])
    width = m + n
    basis = [m + i for i in range(n)]

    def reduced_costs() -> List[Fraction]:
        # minimise sum of artificials
        cost = [Fraction(0)] * m + [Fraction(1)] * n
        rc = list(cost)
        for i, bcol in enumerate(basis):
            cb = cost[bcol]
            if cb:
                for j in range(width):
                    rc[j] -= cb * rows[i][j]
        return rc

    while True:
        rc = reduced_costs()
        entering = next((j for j in range(width) if rc[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(n):
            a_ij = rows[i][entering]
            if a_ij > 0:
                ratio = rows[i][width] / a_ij
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded cannot happen for phase one
            break
        r = best[1]
        pv = rows[r][entering]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][entering] != 0:
                factor = rows[i][entering]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        basis[r] = entering

    lam = [Fraction(0)] * width
    for i, bcol in enumerate(basis):
        lam[bcol] = rows[i][width]
    if any(lam[m + i] != 0 for i in range(n)):
        return None
    return lam[:m]
