"""Small dense linear algebra over a FieldContext.

Fields with dense tables (``q <= gf.TABLE_LIMIT``) take vectorized numpy
paths; larger fields fall back to scalar loops.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .gf import FieldContext

Matrix = list[list[int]]


def _as_array(rows: Sequence[Sequence[int]], ncols: int) -> np.ndarray:
    return np.array(rows, dtype=np.int32).reshape(len(rows), ncols)


def gram(ctx: FieldContext, a: Matrix, b: Matrix) -> Matrix:
    """Return ``a @ b.T`` over F_q (rows of ``a`` against rows of ``b``)."""
    if not a or not b:
        return [[0] * len(b) for _ in a]
    n = len(a[0])
    if ctx.mul_table is not None:
        A = _as_array(a, n)
        B = _as_array(b, n)
        prods = ctx.mul_table[A[:, None, :], B[None, :, :]]
        acc = np.zeros(prods.shape[:2], dtype=np.int32)
        for col in range(n):
            acc = ctx.add_table[acc, prods[:, :, col]]
        return acc.tolist()
    out = []
    for row in a:
        line = []
        for other in b:
            s = 0
            for x, y in zip(row, other):
                if x and y:
                    s = ctx.add(s, ctx.mul(x, y))
            line.append(s)
        out.append(line)
    return out


def rank(ctx: FieldContext, rows: Matrix) -> int:
    """Row rank by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ctx.inv(m[r][c])
        m[r] = [ctx.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = ctx.neg(m[i][c])
                m[i] = [ctx.add(x, ctx.mul(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def is_nonsingular(ctx: FieldContext, square: Matrix) -> bool:
    """True iff the square matrix has nonzero determinant."""
    k = len(square)
    if k == 0:
        return True
    if ctx.mul_table is None:
        return rank(ctx, square) == k
    M = _as_array(square, k).copy()
    add, mul, neg, inv = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    for c in range(k):
        nz = np.nonzero(M[c:, c])[0]
        if nz.size == 0:
            return False
        piv = c + int(nz[0])
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
        M[c] = mul[inv[M[c, c]], M[c]]
        below = M[c + 1 :]
        factors = neg[below[:, c]]
        M[c + 1 :] = add[below, mul[factors[:, None], M[c][None, :]]]
    return True


def first_singular(ctx: FieldContext, rows: Matrix, col_sets: Sequence[Sequence[int]],
                   chunk: int = 4096) -> Optional[int]:
    """Index of the first column set whose square submatrix of ``rows`` is singular.

    Returns None when every submatrix is nonsingular.  With dense tables the
    eliminations run in batches of ``chunk`` minors.
    """
    if not col_sets:
        return None
    k = len(rows)
    if k == 0:
        return None
    if ctx.mul_table is None:
        for idx, cols in enumerate(col_sets):
            if not is_nonsingular(ctx, [[row[c] for c in cols] for row in rows]):
                return idx
        return None
    G = _as_array(rows, len(rows[0]))
    add, mul, neg, inv = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    for start in range(0, len(col_sets), chunk):
        cols = np.array(col_sets[start : start + chunk], dtype=np.intp)
        M = np.transpose(G[:, cols], (1, 0, 2)).copy()  # (batch, k, k)
        batch = np.arange(M.shape[0])
        singular = np.zeros(M.shape[0], dtype=bool)
        for c in range(k):
            nz = M[:, c:, c] != 0
            has = nz.any(axis=1)
            singular |= ~has
            piv = c + np.argmax(nz, axis=1)
            top = M[batch, c].copy()
            M[batch, c] = M[batch, piv]
            M[batch, piv] = top
            # rows of already-singular minors become junk; they are ignored
            lead = np.where(has, M[:, c, c], 1)
            M[:, c] = mul[inv[lead][:, None], M[:, c]]
            factors = neg[M[:, c + 1 :, c]]
            M[:, c + 1 :] = add[M[:, c + 1 :], mul[factors[:, :, None], M[:, c][:, None, :]]]
        if singular.any():
            return start + int(np.argmax(singular))
    return None


def span_min_weight(ctx: FieldContext, rows: Matrix) -> tuple[int, list[int]]:
    """Minimum Hamming weight over all nonzero combinations of ``rows``.

    Returns ``(weight, codeword)``.  Enumerates ``q**len(rows)`` vectors, so
    callers bound the work themselves.
    """
    k = len(rows)
    if k == 0:
        raise ValueError("zero code has no nonzero codewords")
    n = len(rows[0])
    if ctx.mul_table is not None:
        G = _as_array(rows, n)
        # messages ordered with the first row's coefficient most significant
        span = np.zeros((1, n), dtype=np.int32)
        for j in range(k):
            scaled = ctx.mul_table[np.arange(ctx.q)[:, None], G[j][None, :]]
            span = ctx.add_table[span[:, None, :], scaled[None, :, :]].reshape(-1, n)
        weights = np.count_nonzero(span, axis=1)
        weights[0] = n + 1
        best = int(np.argmin(weights))
        return int(weights[best]), span[best].tolist()
    best_w, best_c = n + 1, None
    span = [[0] * n]
    for row in rows:
        span = [
            [ctx.add(x, ctx.mul(c, y)) for x, y in zip(vec, row)]
            for vec in span
            for c in range(ctx.q)
        ]
    for vec in span[1:]:
        w = sum(1 for x in vec if x)
        if w < best_w:
            best_w, best_c = w, vec
    return best_w, best_c
