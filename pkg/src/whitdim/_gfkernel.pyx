# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled counting kernels; semantics match _gfkernel_py exactly.

Matrices are unsigned-char element indices; field arithmetic goes through the
flat q*q lookup tables.  Dimensions are capped by the fixed work buffers
(entry vectors up to 64, matrix sides up to 8), which is far beyond anything
the 10^9-candidate feasibility gate lets through.
"""

from libc.string cimport memset


cdef inline int _rank_inplace(unsigned char* w, int nrows, int ncols, int stride,
                              const unsigned char* sub_t, const unsigned char* mul_t,
                              const unsigned char* inv_t, int q) noexcept nogil:
    cdef int r = 0
    cdef int c, i, j, piv
    cdef int f0, fac, pinv
    cdef unsigned char tmp
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if w[i * stride + c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = w[r * stride + j]
                w[r * stride + j] = w[piv * stride + j]
                w[piv * stride + j] = tmp
        pinv = inv_t[w[r * stride + c]]
        for i in range(r + 1, nrows):
            f0 = w[i * stride + c]
            if f0:
                fac = mul_t[f0 * q + pinv]
                for j in range(c, ncols):
                    w[i * stride + j] = sub_t[w[i * stride + j] * q
                                              + mul_t[fac * q + w[r * stride + j]]]
        r += 1
    return r


cdef inline bint _advance(unsigned char* ent, int count, int q) noexcept nogil:
    """Lexicographic odometer; returns False after the last state."""
    cdef int i = count - 1
    while i >= 0:
        ent[i] += 1
        if ent[i] == q:
            ent[i] = 0
            i -= 1
        else:
            return True
    return False


def count_by_rank(int q, bytes add_t, bytes sub_t, bytes mul_t, bytes inv_t,
                  int rows, int cols):
    """Counts of rows x cols matrices over GF(q) by rank."""
    if rows * cols > 64 or rows > 8 or cols > 8:
        raise ValueError("matrix too large for the compiled kernel buffers")
    cdef const unsigned char* sub_p = sub_t
    cdef const unsigned char* mul_p = mul_t
    cdef const unsigned char* inv_p = inv_t
    cdef unsigned char ent[64]
    cdef unsigned char w[64]
    cdef long long cnt[9]
    cdef int total = rows * cols
    cdef int i, r
    memset(ent, 0, sizeof(ent))
    memset(cnt, 0, sizeof(cnt))
    with nogil:
        while True:
            for i in range(total):
                w[i] = ent[i]
            r = _rank_inplace(w, rows, cols, cols, sub_p, mul_p, inv_p, q)
            cnt[r] += 1
            if not _advance(ent, total, q):
                break
    return [cnt[i] for i in range(min(rows, cols) + 1)]


def count_by_rank_trace(int q, bytes add_t, bytes sub_t, bytes mul_t, bytes inv_t,
                        int size):
    """counts[rank][trace] over all size x size matrices over GF(q)."""
    if size * size > 64 or size > 8:
        raise ValueError("matrix too large for the compiled kernel buffers")
    cdef const unsigned char* add_p = add_t
    cdef const unsigned char* sub_p = sub_t
    cdef const unsigned char* mul_p = mul_t
    cdef const unsigned char* inv_p = inv_t
    cdef unsigned char ent[64]
    cdef unsigned char w[64]
    cdef long long cnt[9][9]
    cdef int total = size * size
    cdef int i, r, tr
    memset(ent, 0, sizeof(ent))
    memset(cnt, 0, sizeof(cnt))
    with nogil:
        while True:
            tr = 0
            for i in range(size):
                tr = add_p[tr * q + ent[i * size + i]]
            for i in range(total):
                w[i] = ent[i]
            r = _rank_inplace(w, size, size, size, sub_p, mul_p, inv_p, q)
            cnt[r][tr] += 1
            if not _advance(ent, total, q):
                break
    return [[cnt[r][tr] for tr in range(q)] for r in range(size + 1)]


def count_triples_by_rank_bucket(int q, bytes add_t, bytes sub_t, bytes mul_t,
                                 bytes inv_t, int n):
    """counts[rank][gamma] over all (X, Y, Z): rank of [[X,Y],[0,Z]], gamma = trX+trZ.

    Z-major, then X, then Y, in lexicographic entry order.  Per Z, its rows
    are reduced to normalized echelon form once; each triple's rank is then
    rank(Z) plus the rank of [X | Y'] with Y' reduced by the Z pivot rows.
    """
    if n > 4:
        raise ValueError("block size too large for the compiled kernel buffers")
    cdef const unsigned char* add_p = add_t
    cdef const unsigned char* sub_p = sub_t
    cdef const unsigned char* mul_p = mul_t
    cdef const unsigned char* inv_p = inv_t
    cdef unsigned char zent[16], xent[16], yent[16]
    cdef unsigned char zred[16]
    cdef unsigned char w[128]
    cdef int pivcol[4]
    cdef long long cnt[9][9]
    cdef int nn = n * n
    cdef int i, j, t, c, r, zrank, trz, trx, gamma, f0, pinv
    cdef int two_n = 2 * n
    memset(zent, 0, sizeof(zent))
    memset(cnt, 0, sizeof(cnt))
    with nogil:
        while True:  # Z odometer
            for i in range(nn):
                zred[i] = zent[i]
            zrank = _rank_inplace(zred, n, n, n, sub_p, mul_p, inv_p, q)
            for t in range(zrank):
                c = 0
                while zred[t * n + c] == 0:
                    c += 1
                pivcol[t] = c
                pinv = inv_p[zred[t * n + c]]
                for j in range(n):
                    zred[t * n + j] = mul_p[pinv * q + zred[t * n + j]]
            trz = 0
            for i in range(n):
                trz = add_p[trz * q + zent[i * n + i]]

            memset(xent, 0, sizeof(xent))
            while True:  # X odometer
                trx = 0
                for i in range(n):
                    trx = add_p[trx * q + xent[i * n + i]]
                gamma = add_p[trx * q + trz]

                memset(yent, 0, sizeof(yent))
                while True:  # Y odometer
                    for i in range(n):
                        for j in range(n):
                            w[i * two_n + j] = xent[i * n + j]
                            w[i * two_n + n + j] = yent[i * n + j]
                    for t in range(zrank):
                        c = pivcol[t]
                        for i in range(n):
                            f0 = w[i * two_n + n + c]
                            if f0:
                                for j in range(n):
                                    w[i * two_n + n + j] = sub_p[
                                        w[i * two_n + n + j] * q
                                        + mul_p[f0 * q + zred[t * n + j]]
                                    ]
                    r = _rank_inplace(w, n, two_n, two_n, sub_p, mul_p, inv_p, q)
                    cnt[zrank + r][gamma] += 1
                    if not _advance(yent, nn, q):
                        break
                if not _advance(xent, nn, q):
                    break
            if not _advance(zent, nn, q):
                break
    return [[cnt[r][gamma] for gamma in range(q)] for r in range(2 * n + 1)]
