"""Pure-Python counting kernels; reference implementation of the compiled core.

All three kernels share the flat-bytes table signature of the Cython module
so the backends are interchangeable.  Enumeration is exhaustive and visits
matrices in lexicographic entry order (the triple kernel is Z-major, then X,
then Y); counts do not depend on the order, which the tests confirm against
the compiled backend.
"""

from __future__ import annotations

from itertools import product


def _nested(flat: bytes, q: int):
    return [list(flat[a * q : (a + 1) * q]) for a in range(q)]


def _rank(rows, ncols, sub, mul, inv):
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        pinv = inv[prow[c]]
        for i in range(r + 1, nrows):
            f0 = rows[i][c]
            if f0:
                fac = mul[f0][pinv]
                frow = mul[fac]
                row = rows[i]
                for j in range(c, ncols):
                    row[j] = sub[row[j]][frow[prow[j]]]
        r += 1
    return r


def count_by_rank(q, add_flat, sub_flat, mul_flat, inv_flat, rows, cols):
    """Counts of rows x cols matrices over GF(q) by rank, rank 0..min(rows, cols)."""
    sub = _nested(sub_flat, q)
    mul = _nested(mul_flat, q)
    inv = list(inv_flat)
    counts = [0] * (min(rows, cols) + 1)
    for entries in product(range(q), repeat=rows * cols):
        mat = [list(entries[i * cols : (i + 1) * cols]) for i in range(rows)]
        counts[_rank(mat, cols, sub, mul, inv)] += 1
    return counts


def count_by_rank_trace(q, add_flat, sub_flat, mul_flat, inv_flat, size):
    """counts[rank][trace] over all size x size matrices over GF(q)."""
    add = _nested(add_flat, q)
    sub = _nested(sub_flat, q)
    mul = _nested(mul_flat, q)
    inv = list(inv_flat)
    counts = [[0] * q for _ in range(size + 1)]
    for entries in product(range(q), repeat=size * size):
        tr = 0
        for i in range(size):
            tr = add[tr][entries[i * size + i]]
        mat = [list(entries[i * size : (i + 1) * size]) for i in range(size)]
        counts[_rank(mat, size, sub, mul, inv)][tr] += 1
    return counts


def count_triples_by_rank_bucket(q, add_flat, sub_flat, mul_flat, inv_flat, n):
    """counts[rank][gamma] over all triples (X, Y, Z) of n x n matrices.

    rank is of the 2n x 2n block matrix [[X, Y], [0, Z]] (the nonzero corner
    of u - I), gamma = tr X + tr Z.  The Z rows are put in reduced echelon
    form once per Z; the rank of each triple is rank(Z) plus the rank of
    [X | Y'] with Y' reduced by Z's pivot rows, which equals full elimination
    on the 2n x 2n matrix.
    """
    add = _nested(add_flat, q)
    sub = _nested(sub_flat, q)
    mul = _nested(mul_flat, q)
    inv = list(inv_flat)
    counts = [[0] * q for _ in range(2 * n + 1)]

    mats = []
    for entries in product(range(q), repeat=n * n):
        tr = 0
        for i in range(n):
            tr = add[tr][entries[i * n + i]]
        mats.append(([list(entries[i * n : (i + 1) * n]) for i in range(n)], tr))

    for zmat, trz in mats:
        zred = [row[:] for row in zmat]
        zrank = _rank(zred, n, sub, mul, inv)
        # normalize pivots to 1 for direct reduction of the Y rows
        pivots = []
        for r in range(zrank):
            c = next(j for j in range(n) if zred[r][j])
            piv_inv = inv[zred[r][c]]
            zred[r] = [mul[piv_inv][v] for v in zred[r]]
            pivots.append((c, zred[r]))
        for xmat, trx in mats:
            gamma = add[trx][trz]
            for ymat, _ in mats:
                work = [xmat[i] + ymat[i] for i in range(n)]
                for c, prow in pivots:
                    for i in range(n):
                        f0 = work[i][n + c]
                        if f0:
                            frow = mul[f0]
                            wrow = work[i]
                            for j in range(n):
                                wrow[n + j] = sub[wrow[n + j]][frow[prow[j]]]
                r2 = _rank(work, 2 * n, sub, mul, inv)
                counts[zrank + r2][gamma] += 1
    return counts
