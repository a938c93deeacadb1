"""Exact linear algebra over Q: row reduction, kernels, solving.

Matrices are lists of row tuples of Fractions. Small and dense is all the
rest of the package ever needs (field degrees stay single digit).
"""

from fractions import Fraction


def _rows(m):
    return [list(map(Fraction, row)) for row in m]


def rref(m):
    """(reduced rows, pivot column list). Zero rows are dropped."""
    rows = _rows(m)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def matrix_kernel(m, ncols=None):
    """Basis of the right kernel of m, in reduced echelon form.

    Returns a list of tuples; empty iff the matrix is injective. The basis is
    canonicalized by a final row reduction so each vector's first nonzero
    entry is 1.
    """
    rows = _rows(m)
    if ncols is None:
        if not rows:
            return []
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    if not basis:
        return []
    canon, _ = rref(basis)
    return [tuple(row) for row in canon]


def solve(m, b):
    """One solution x of m x = b, or None when inconsistent.

    Free variables are set to 0.
    """
    rows = _rows(m)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    aug = [rows[i] + [Fraction(b[i])] for i in range(nrows)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[i][-1]
    return tuple(x)


def rank(m) -> int:
    red, _ = rref(m)
    return len(red)


def in_span(basis_rref, vector) -> bool:
    """Membership of vector in the row span given in RREF form."""
    v = list(map(Fraction, vector))
    for row in basis_rref:
        pc = next((i for i, x in enumerate(row) if x != 0), None)
        if pc is not None and v[pc] != 0:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)
