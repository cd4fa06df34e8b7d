"""Exact Gaussian elimination over a field.

Entries are Fractions or QuadElements (anything with exact ``+ - * /`` and a
truth value for zero-testing); no rounding ever happens. Matrices are
sequences of equal-length row sequences and are never mutated.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row-echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        a[r] = [v / piv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def solve_in_span(basis, target):
    """Coordinates of ``target`` in the linearly independent ``basis`` rows,
    or None when the vector lies outside their span."""
    d = len(basis)
    n = len(target)
    aug = [[basis[j][i] for j in range(d)] + [target[i]] for i in range(n)]
    r = 0
    pivot_rows = {}
    for c in range(d):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            raise ValueError("basis rows are linearly dependent")
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        aug[r] = [v / piv for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_rows[c] = r
        r += 1
    for i in range(r, n):
        if aug[i][d]:
            return None
    return [aug[pivot_rows[c]][d] for c in range(d)]


def det(matrix):
    """Determinant of a square matrix by exact elimination."""
    n = len(matrix)
    a = [list(r) for r in matrix]
    neg = False
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c]), None)
        if pr is None:
            zero = a[0][0] - a[0][0]
            return zero
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            neg = not neg
        piv = a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    prod = a[0][0]
    for i in range(1, n):
        prod = prod * a[i][i]
    return -prod if neg else prod


def mat_vec(matrix, vec):
    out = []
    for row in matrix:
        acc = None
        for x, v in zip(row, vec):
            term = x * v
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[_dot(row, col) for col in bt] for row in a]


def _dot(xs, ys):
    acc = None
    for x, y in zip(xs, ys):
        term = x * y
        acc = term if acc is None else acc + term
    return acc


def mat_inverse(matrix):
    """Inverse of a square matrix; raises ValueError when singular."""
    n = len(matrix)
    probe = next((x for row in matrix for x in row if x), None)
    if probe is None:
        raise ValueError("singular matrix")
    one = probe / probe
    zero = probe - probe
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(matrix)]
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c]), None)
        if pr is None:
            raise ValueError("singular matrix")
        a[c], a[pr] = a[pr], a[c]
        piv = a[c][c]
        a[c] = [v / piv for v in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]
