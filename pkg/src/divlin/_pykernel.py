"""Pure-Python reduced row echelon form over GF(p).

Reference implementation of the compiled kernel in ``_ckernel.pyx``; both
must return identical results.
"""


def rref_mod_p(rows, ncols, p):
    """Return ``(reduced_rows, pivots)`` for the integer matrix ``rows`` mod ``p``.

    Zero rows are dropped from the result. The input is not modified.
    """
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if m[i][c]:
                break
        else:
            continue
        m[r], m[i] = m[i], m[r]
        prow = m[r]
        if prow[c] != 1:
            inv = pow(prow[c], -1, p)
            for j in range(c, ncols):
                prow[j] = prow[j] * inv % p
        for k in range(nrows):
            if k != r:
                row = m[k]
                f = row[c]
                if f:
                    for j in range(c, ncols):
                        row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots
