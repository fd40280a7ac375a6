"""Exact linear algebra over the rationals.

Dense matrices are lists of rows of ``Fraction``; the sparse rank routine
takes rows as ``{column: value}`` dicts.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form. Returns ``(nonzero_rows, pivot_columns)``."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{v : rows @ v = 0}`` as a list of Fraction vectors."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    reduced, pivots = rref(rows)
    n = len(rows[0])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(matrix):
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in reduced]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for i in range(len(a))]


def sparse_rank(rows) -> int:
    """Rank of a sparse matrix given as an iterable of ``{col: value}`` dicts.

    Incremental elimination keyed on the smallest column of each row; every
    stored pivot row is normalised so its leading entry is 1.
    """
    pivots = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = 1 / r[c]
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
            f = r[c]
            for k, v in p.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def charpoly(matrix):
    """Characteristic polynomial ``det(t*I - M)`` as coefficients, low degree first.

    Hessenberg reduction followed by the standard determinant recurrence.
    """
    n = len(matrix)
    h = [[Fraction(v) for v in row] for row in matrix]
    for m in range(1, n - 1):
        i = next((r for r in range(m, n) if h[r][m - 1] != 0), None)
        if i is None:
            continue
        if i != m:
            h[i], h[m] = h[m], h[i]
            for row in h:
                row[i], row[m] = row[m], row[i]
        piv = h[m][m - 1]
        for j in range(m + 1, n):
            u = h[j][m - 1] / piv
            if u:
                h[j] = [a - u * b for a, b in zip(h[j], h[m])]
                for row in h:
                    row[m] += u * row[j]
    polys = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        d = h[m - 1][m - 1]
        cur = [Fraction(0)] * (m + 1)
        for k, c in enumerate(prev):
            cur[k + 1] += c
            cur[k] -= d * c
        t = Fraction(1)
        for i in range(1, m):
            t *= h[m - i][m - i - 1]
            coef = t * h[m - i - 1][m - 1]
            if coef:
                for k, c in enumerate(polys[m - i - 1]):
                    cur[k] -= coef * c
        polys.append(cur)
    return polys[n]
