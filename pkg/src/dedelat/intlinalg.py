"""Exact integer row reduction used by the production code paths.

Row-style Hermite normal form over Z with an optional unimodular transform,
plus the linear solves built on it. Matrices are lists of equal-length lists
of Python ints; inputs are never mutated. The independent oracle in
``zoracle`` has its own reduction code and must not import this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s*a + t*b`` and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_rows(rows: list[list[int]], transform: bool = False):
    """Canonical row Hermite normal form.

    Returns ``(H, U)`` when ``transform`` is set (``U`` unimodular with
    ``U @ rows == H``), else just ``H``. ``H`` is in echelon shape with
    positive pivots, entries above each pivot reduced into ``[0, pivot)``,
    and zero rows at the bottom.
    """
    h = [list(r) for r in rows]
    m = len(h)
    u = [[int(i == j) for j in range(m)] for i in range(m)] if transform else None
    ncols = len(h[0]) if h else 0
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row >= m:
            break
        # Euclidean elimination below the pivot position.
        for i in range(pivot_row + 1, m):
            while h[i][col]:
                if h[pivot_row][col] == 0:
                    h[pivot_row], h[i] = h[i], h[pivot_row]
                    if u:
                        u[pivot_row], u[i] = u[i], u[pivot_row]
                    continue
                q = h[i][col] // h[pivot_row][col]
                for k in range(ncols):
                    h[i][k] -= q * h[pivot_row][k]
                if u:
                    for k in range(m):
                        u[i][k] -= q * u[pivot_row][k]
                if h[i][col]:
                    h[pivot_row], h[i] = h[i], h[pivot_row]
                    if u:
                        u[pivot_row], u[i] = u[i], u[pivot_row]
        if h[pivot_row][col] == 0:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            if u:
                u[pivot_row] = [-x for x in u[pivot_row]]
        pivots.append((pivot_row, col))
        pivot_row += 1
    # Reduce entries above each pivot into [0, pivot).
    for prow, pcol in pivots:
        p = h[prow][pcol]
        for i in range(prow):
            q = h[i][pcol] // p
            if q:
                for k in range(ncols):
                    h[i][k] -= q * h[prow][k]
                if u:
                    for k in range(m):
                        u[i][k] -= q * u[prow][k]
    return (h, u) if transform else h


def nonzero_rows(rows: list[list[int]]) -> list[list[int]]:
    return [r for r in rows if any(r)]


def solve_row_combination(rows: list[list[int]], target: list[int]) -> list[int] | None:
    """Find integers ``x`` with ``sum_i x[i]*rows[i] == target``, or None."""
    if not rows:
        return None if any(target) else []
    h, u = hnf_rows(rows, transform=True)
    ncols = len(target)
    rem = list(target)
    coeffs = [0] * len(rows)
    for i, row in enumerate(h):
        piv = next((j for j, v in enumerate(row) if v), None)
        if piv is None:
            break
        q, r = divmod(rem[piv], row[piv])
        if r:
            return None
        if q:
            for k in range(ncols):
                rem[k] -= q * row[k]
            for k in range(len(rows)):
                coeffs[k] += q * u[i][k]
    if any(rem):
        return None
    return coeffs


def clear_denominators(rows) -> tuple[list[list[int]], int]:
    """Scale a rational matrix to integers; returns ``(int_rows, den)`` with
    ``rows == int_rows / den``."""
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, Fraction(x).denominator)
    out = []
    for r in rows:
        out.append([int(Fraction(x) * den) for x in r])
    return out, den


def content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
