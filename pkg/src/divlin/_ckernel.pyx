# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduced row echelon form over GF(p), for primes below 2**31."""

from libc.stdlib cimport malloc, free

from divlin import _pykernel

ctypedef long long i64

cdef i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rref_mod_p(rows, Py_ssize_t ncols, p):
    """Return ``(reduced_rows, pivots)`` for the integer matrix ``rows`` mod ``p``."""
    if p >= 2147483648:
        return _pykernel.rref_mod_p(rows, ncols, p)
    cdef Py_ssize_t nrows = len(rows)
    cdef i64 pp = p
    cdef Py_ssize_t i, j, k, c, r = 0, piv_i
    cdef i64 f, inv, v
    cdef i64 *m
    cdef i64 *prow
    cdef i64 *row
    cdef i64 *tmp
    if nrows == 0 or ncols == 0:
        return [], []
    m = <i64 *> malloc(nrows * ncols * sizeof(i64))
    if m == NULL:
        raise MemoryError()
    tmp = <i64 *> malloc(ncols * sizeof(i64))
    if tmp == NULL:
        free(m)
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            src = rows[i]
            for j in range(ncols):
                v = src[j] % p
                m[i * ncols + j] = v
        for c in range(ncols):
            if r == nrows:
                break
            piv_i = -1
            for i in range(r, nrows):
                if m[i * ncols + c]:
                    piv_i = i
                    break
            if piv_i < 0:
                continue
            if piv_i != r:
                for j in range(ncols):
                    tmp[j] = m[r * ncols + j]
                    m[r * ncols + j] = m[piv_i * ncols + j]
                    m[piv_i * ncols + j] = tmp[j]
            prow = m + r * ncols
            if prow[c] != 1:
                inv = _inv_mod(prow[c], pp)
                for j in range(c, ncols):
                    prow[j] = prow[j] * inv % pp
            for k in range(nrows):
                if k == r:
                    continue
                row = m + k * ncols
                f = row[c]
                if f:
                    for j in range(c, ncols):
                        v = (row[j] - f * prow[j]) % pp
                        if v < 0:
                            v += pp
                        row[j] = v
            pivots.append(c)
            r += 1
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(m)
        free(tmp)
    return out, pivots
