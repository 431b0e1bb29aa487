# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled token alignment kernel.

Semantics must match gecedit._align_py.align_ops exactly; the test suite and
the alignment benchmark compare the two implementations.
"""

from libc.stdlib cimport free, malloc

cdef enum:
    OP_KEEP = 0
    OP_SUB = 1
    OP_DEL = 2
    OP_INS = 3


cdef int _lcs_len(const int* a, int la, const int* b, int lb, int* row_prev, int* row_cur) noexcept nogil:
    cdef int i, j, up, left, ai
    cdef int* tmp
    for j in range(lb + 1):
        row_prev[j] = 0
    for i in range(1, la + 1):
        ai = a[i - 1]
        row_cur[0] = 0
        for j in range(1, lb + 1):
            if ai == b[j - 1]:
                row_cur[j] = row_prev[j - 1] + 1
            else:
                up = row_prev[j]
                left = row_cur[j - 1]
                row_cur[j] = up if up >= left else left
        tmp = row_prev
        row_prev = row_cur
        row_cur = tmp
    return row_prev[lb]


def align_ops(src, tgt):
    """Minimal-cost monotone edit script; see the pure-Python twin for docs."""
    cdef int n = len(src)
    cdef int m = len(tgt)
    cdef int width = m + 1
    cdef int i, j, k, op, la, lb, lcs, tok_id
    cdef double c, best, t, sim

    # Intern tokens to integer ids for O(1) equality and store codepoints for
    # the character-overlap computation.
    ids = {}
    cdef int* src_id = <int*> malloc(n * sizeof(int)) if n else NULL
    cdef int* tgt_id = <int*> malloc(m * sizeof(int)) if m else NULL
    cdef int* src_len = <int*> malloc(n * sizeof(int)) if n else NULL
    cdef int* tgt_len = <int*> malloc(m * sizeof(int)) if m else NULL
    cdef int** src_cp = <int**> malloc(n * sizeof(int*)) if n else NULL
    cdef int** tgt_cp = <int**> malloc(m * sizeof(int*)) if m else NULL
    cdef double* prev = <double*> malloc(width * sizeof(double))
    cdef double* cur = <double*> malloc(width * sizeof(double))
    cdef double* swp
    cdef unsigned char* opmat = <unsigned char*> malloc((n + 1) * width * sizeof(unsigned char))
    cdef int max_len = 1
    cdef int* lcs_prev = NULL
    cdef int* lcs_cur = NULL

    try:
        for i in range(n):
            src_cp[i] = NULL
        for j in range(m):
            tgt_cp[j] = NULL
        for i in range(n):
            tok = src[i]
            tok_id = ids.setdefault(tok, len(ids))
            src_id[i] = tok_id
            la = len(tok)
            src_len[i] = la
            if la > max_len:
                max_len = la
            src_cp[i] = <int*> malloc(la * sizeof(int))
            for k in range(la):
                src_cp[i][k] = ord(tok[k])
        for j in range(m):
            tok = tgt[j]
            tok_id = ids.setdefault(tok, len(ids))
            tgt_id[j] = tok_id
            lb = len(tok)
            tgt_len[j] = lb
            if lb > max_len:
                max_len = lb
            tgt_cp[j] = <int*> malloc(lb * sizeof(int))
            for k in range(lb):
                tgt_cp[j][k] = ord(tok[k])

        lcs_prev = <int*> malloc((max_len + 1) * sizeof(int))
        lcs_cur = <int*> malloc((max_len + 1) * sizeof(int))

        opmat[0] = OP_KEEP
        for j in range(1, width):
            opmat[j] = OP_INS
            prev[j] = <double> j
        prev[0] = 0.0

        for i in range(1, n + 1):
            cur[0] = <double> i
            opmat[i * width] = OP_DEL
            la = src_len[i - 1]
            for j in range(1, width):
                if src_id[i - 1] == tgt_id[j - 1]:
                    c = 0.0
                    op = OP_KEEP
                else:
                    lb = tgt_len[j - 1]
                    lcs = _lcs_len(src_cp[i - 1], la, tgt_cp[j - 1], lb, lcs_prev, lcs_cur)
                    sim = 2.0 * lcs / (la + lb)
                    if sim >= 0.5:
                        c = 1.0 - sim / 2.0
                    else:
                        c = 1.0
                    op = OP_SUB
                best = prev[j - 1] + c
                t = prev[j] + 1.0
                if t < best:
                    best = t
                    op = OP_DEL
                t = cur[j - 1] + 1.0
                if t < best:
                    best = t
                    op = OP_INS
                cur[j] = best
                opmat[i * width + j] = <unsigned char> op
            swp = prev
            prev = cur
            cur = swp

        out = []
        i = n
        j = m
        while i > 0 or j > 0:
            op = opmat[i * width + j]
            if op == OP_INS:
                j -= 1
                out.append((OP_INS, -1, j))
            elif op == OP_DEL:
                i -= 1
                out.append((OP_DEL, i, -1))
            else:
                i -= 1
                j -= 1
                out.append((op, i, j))
        out.reverse()
        return out
    finally:
        if src_cp != NULL:
            for i in range(n):
                free(src_cp[i])
        if tgt_cp != NULL:
            for j in range(m):
                free(tgt_cp[j])
        free(src_cp)
        free(tgt_cp)
        free(src_id)
        free(tgt_id)
        free(src_len)
        free(tgt_len)
        free(prev)
        free(cur)
        free(opmat)
        free(lcs_prev)
        free(lcs_cur)
