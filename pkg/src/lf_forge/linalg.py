"""Exact linear algebra over the rationals on lists of lists.

Only what the Meyer cocycle needs: a nullspace basis and the signature
of a symmetric matrix. Inputs may hold ints or Fractions.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[Fraction]]


def to_fractions(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def matmul(a, b):
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = to_fractions(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows, ncols: int) -> Matrix:
    """Basis (as row vectors) of ``{v : rows @ v = 0}``."""
    m, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def rank(rows) -> int:
    return len(rref(rows)[1])


def inertia(sym) -> tuple[int, int, int]:
    """``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Symmetric Gaussian elimination (congruence). When every remaining
    diagonal entry is zero but some off-diagonal ``S[i][j]`` is not, adding
    row/column ``j`` to ``i`` makes ``S[i][i] = 2 S[i][j] != 0``.
    """
    s = to_fractions(sym)
    size = n = len(s)
    for i in range(n):
        for j in range(i + 1, n):
            if s[i][j] != s[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    while s:
        n = len(s)
        k = next((i for i in range(n) if s[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if s[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for t in range(n):
                s[i][t] += s[j][t]
            for t in range(n):
                s[t][i] += s[t][j]
            k = i
        d = s[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        s = [[s[i][j] - s[i][k] * s[k][j] / d for j in rest] for i in rest]
    return pos, neg, size - pos - neg


def signature(sym) -> int:
    pos, neg, _ = inertia(sym)
    return pos - neg
