"""Side-aware Gaussian elimination over a division ring.

Rows are sequences of scalars. ``side`` names the side on which the
allowed scalar multiples act on the rows:

* ``"left"``  -- row operations ``row <- lam * row`` and ``row_i -= lam * row_j``;
* ``"right"`` -- row operations ``row <- row * lam`` and ``row_i -= row_j * lam``.

Over GF(p) the side is irrelevant and the work is delegated to the integer
kernel ``rref_mod_p``, compiled when the extension is available. Set the
environment variable ``DIVLIN_PURE=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os

from .scalar import PrimeField

if os.environ.get("DIVLIN_PURE"):
    from ._pykernel import rref_mod_p

    COMPILED = False
else:
    try:
        from ._ckernel import rref_mod_p

        COMPILED = True
    except ImportError:  # extension not built
        from ._pykernel import rref_mod_p

        COMPILED = False

LEFT = "left"
RIGHT = "right"


def rref(rows, ncols, side, domain):
    """Reduced row echelon form of ``rows`` under ``side`` row operations.

    Returns ``(reduced, pivots)``: the nonzero reduced rows as tuples and the
    strictly increasing pivot columns. Every pivot entry is 1 and every other
    entry in a pivot column is 0, so the result is the unique canonical basis
    of the (side-)row space.
    """
    if isinstance(domain, PrimeField):
        ints, pivots = rref_mod_p([[x.value for x in row] for row in rows], ncols, domain.p)
        el = domain.element
        return [tuple(el(v) for v in row) for row in ints], pivots
    return _rref_generic(rows, ncols, side, domain)


def _rref_generic(rows, ncols, side, domain):
    m = [list(row) for row in rows]
    nrows = len(m)
    pivots = []
    left = side == LEFT
    inv = domain.inv
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
        pinv = inv(prow[c])
        if left:
            prow[c:] = [pinv * x for x in prow[c:]]
        else:
            prow[c:] = [x * pinv for x in prow[c:]]
        tail = prow[c:]
        for k in range(nrows):
            if k == r:
                continue
            row = m[k]
            f = row[c]
            if not f:
                continue
            if left:
                row[c:] = [a - f * b for a, b in zip(row[c:], tail)]
            else:
                row[c:] = [a - b * f for a, b in zip(row[c:], tail)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, ncols, side, domain) -> int:
    return len(rref(rows, ncols, side, domain)[1])


def _opposite(side):
    return RIGHT if side == LEFT else LEFT


def nullspace(equations, n, unknown_side, domain):
    """Basis of the solutions ``x`` (length ``n``) of a homogeneous system.

    For ``unknown_side == "right"`` each equation ``a`` reads
    ``sum_j a[j] * x[j] = 0``; for ``"left"`` it reads ``sum_j x[j] * a[j] = 0``.
    One basis vector per free column, in column order.
    """
    reduced, pivots = rref(equations, n, _opposite(unknown_side), domain)
    zero, one = domain.zero(), domain.one()
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        x = [zero] * n
        x[f] = one
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(equations, rhs_columns, n, unknown_side, domain):
    """Particular solutions of ``equations . x = rhs`` for several right-hand sides.

    ``rhs_columns[k][i]`` is the right-hand side of equation ``i`` in system
    ``k``. Returns one solution tuple per system (free variables set to zero),
    or ``None`` in place of an inconsistent system.
    """
    nrhs = len(rhs_columns)
    if nrhs == 0:
        return []
    zero = domain.zero()
    results = [None] * nrhs
    # Inconsistency of one system must not hide pivots for another, so each
    # system with a pivot in its own augmented column is retried separately.
    aug = [tuple(eq) + tuple(rhs[i] for rhs in rhs_columns) for i, eq in enumerate(equations)]
    reduced, pivots = rref(aug, n + nrhs, _opposite(unknown_side), domain)
    coeff_pivots = [p for p in pivots if p < n]
    rank_a = len(coeff_pivots)
    if len(pivots) == rank_a:
        for k in range(nrhs):
            x = [zero] * n
            for row, p in zip(reduced, coeff_pivots):
                x[p] = row[n + k]
            results[k] = tuple(x)
        return results
    for k in range(nrhs):
        aug = [tuple(eq) + (rhs_columns[k][i],) for i, eq in enumerate(equations)]
        reduced, pivots = rref(aug, n + 1, _opposite(unknown_side), domain)
        if pivots and pivots[-1] == n:
            continue
        x = [zero] * n
        for row, p in zip(reduced, pivots):
            x[p] = row[n]
        results[k] = tuple(x)
    return results
