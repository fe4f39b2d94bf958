"""Exhaustive oracles over small prime fields.

Everything here enumerates: all vectors, all maps, closures of generator
sets under addition and composition. Nothing calls into the elimination
code, so these functions serve as independent checks of the library.
Maps are handled as integer matrices in the layout of :class:`LinMap`.
"""

from __future__ import annotations

import itertools

from .linmap import LinMap
from .scalar import PrimeField
from .space import RIGHT, Space, Vec


def _field(space: Space) -> PrimeField:
    if not isinstance(space.domain, PrimeField):
        raise ValueError("brute-force oracles need a prime field")
    return space.domain


def all_vectors(space: Space) -> list[Vec]:
    F = _field(space)
    els = F.elements()
    return [Vec(space, c) for c in itertools.product(els, repeat=space.dim)]


def key(t: LinMap) -> tuple:
    return tuple(tuple(x.value for x in row) for row in t.matrix)


def from_key(k, domain: Space, codomain: Space) -> LinMap:
    el = domain.domain.element
    return LinMap(domain, codomain, tuple(tuple(el(v) for v in row) for row in k))


def _shape(domain: Space, codomain: Space):
    if domain.chirality is RIGHT:
        return codomain.dim, domain.dim
    return domain.dim, codomain.dim


def all_keys(domain: Space, codomain: Space) -> list[tuple]:
    p = _field(domain).p
    nrows, ncols = _shape(domain, codomain)
    rows = list(itertools.product(range(p), repeat=ncols))
    return [tuple(m) for m in itertools.product(rows, repeat=nrows)]


def all_maps(domain: Space, codomain: Space) -> list[LinMap]:
    return [from_key(k, domain, codomain) for k in all_keys(domain, codomain)]


def _mul(a, b, inner, ncols, p):
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(inner)) % p for j in range(ncols))
        for row in a
    )


class _Keys:
    """Integer-matrix arithmetic for maps ``X -> Y`` of one chirality over GF(p)."""

    def __init__(self, chirality, p):
        self.right = chirality is RIGHT
        self.p = p

    def compose(self, a, a_dims, b, b_dims):
        """Key of ``a o b``; ``*_dims`` are ``(dim domain, dim codomain)``."""
        if self.right:
            return _mul(a, b, b_dims[1], b_dims[0], self.p)
        return _mul(b, a, a_dims[0], a_dims[1], self.p)

    def add(self, a, b):
        p = self.p
        return tuple(tuple((x + y) % p for x, y in zip(r1, r2)) for r1, r2 in zip(a, b))


def closure(gens, side: str, domain: Space, codomain: Space) -> set:
    """Keys of the submodule of ``L(domain, codomain)`` generated by ``gens``.

    ``side`` is ``"right"`` (closed under ``A -> A R``, ``R`` in ``L(V)``),
    ``"left"`` (``A -> R A``, ``R`` in ``L(W)``) or ``"two-sided"``. The set is
    grown to a fixpoint under addition and the allowed compositions.
    """
    p = _field(domain).p
    ops = _Keys(domain.chirality, p)
    vw = (domain.dim, codomain.dim)
    ring_v = all_keys(domain, domain) if side in ("right", "two-sided") else []
    ring_w = all_keys(codomain, codomain) if side in ("left", "two-sided") else []
    vv = (domain.dim, domain.dim)
    ww = (codomain.dim, codomain.dim)
    members = {key_zero(domain, codomain)} | {key(g) for g in gens}
    while True:
        current = list(members)
        new = set()
        for a in current:
            for r in ring_v:
                new.add(ops.compose(a, vw, r, vv))
            for r in ring_w:
                new.add(ops.compose(r, ww, a, vw))
        for a, b in itertools.combinations_with_replacement(current, 2):
            new.add(ops.add(a, b))
        new -= members
        if not new:
            return members
        members |= new


def key_zero(domain: Space, codomain: Space) -> tuple:
    nrows, ncols = _shape(domain, codomain)
    return tuple((0,) * ncols for _ in range(nrows))


def kernel_set(t: LinMap) -> set:
    """Coordinates of every domain vector killed by ``t``."""
    return {v.coords for v in all_vectors(t.domain) if t(v).is_zero()}


def image_set(t: LinMap) -> set:
    return {t(v).coords for v in all_vectors(t.domain)}


def span_set(vectors, space: Space) -> set:
    """Every side-correct linear combination of ``vectors``."""
    vectors = list(vectors)
    F = _field(space)
    out = set()
    for coeffs in itertools.product(F.elements(), repeat=len(vectors)):
        acc = space.zero()
        for v, c in zip(vectors, coeffs):
            acc = acc + v.scale(c)
        out.add(acc.coords)
    return out


def search_kernel_factor(s: LinMap, t: LinMap):
    """Some ``P`` with ``P o s == t`` found by trying every ``P``, else ``None``."""
    p = _field(s.domain).p
    ops = _Keys(s.chirality, p)
    target = key(t)
    ks = key(s)
    W, Z = s.codomain, t.codomain
    for k in all_keys(W, Z):
        if ops.compose(k, (W.dim, Z.dim), ks, (s.domain.dim, W.dim)) == target:
            return from_key(k, W, Z)
    return None


def search_image_factor(s: LinMap, t: LinMap):
    """Some ``P`` with ``t o P == s`` found by trying every ``P``, else ``None``."""
    p = _field(s.domain).p
    ops = _Keys(s.chirality, p)
    target = key(s)
    kt = key(t)
    V, Z = s.domain, t.domain
    for k in all_keys(V, Z):
        if ops.compose(kt, (Z.dim, t.codomain.dim), k, (V.dim, Z.dim)) == target:
            return from_key(k, V, Z)
    return None
