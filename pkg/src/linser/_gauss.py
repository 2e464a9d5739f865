"""Exact Gaussian elimination over any field-like scalar type.

Scalars must support +, -, *, / and be falsy exactly when zero, which
holds for Fraction and for FieldElement.  The forward pass uses the
fraction-free cross-multiplication recurrence, pivoting on the leftmost
column and the first nonzero row.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    pivots = []
    prev = None
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            for j in range(c, n):
                val = piv * rows[i][j] - ric * rows[r][j]
                if prev is not None:
                    val = val / prev
                rows[i][j] = val
        pivots.append(c)
        prev = piv
        r += 1
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        piv = rows[idx][c]
        rows[idx] = [x / piv for x in rows[idx]]
        for i in range(idx):
            f = rows[i][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[idx])]
    return rows[: len(pivots)], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel(rows, ncols: int, zero, one):
    """Canonical basis of the right kernel of the matrix given by ``rows``.

    The raw free-column basis is re-echelonized, so the result depends only
    on the kernel subspace, not on the elimination path.
    """
    reduced, pivots = rref(rows)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    vecs = []
    for j in free:
        v = [zero] * ncols
        v[j] = one
        for i, c in enumerate(pivots):
            val = reduced[i][j]
            if val:
                v[c] = zero - val
        vecs.append(v)
    if not vecs:
        return []
    return rref(vecs)[0]
