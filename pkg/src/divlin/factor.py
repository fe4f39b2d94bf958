"""Witness-producing factorizations of linear transformations.

Each ``factor_*`` function decides whether a factorization exists and returns
either a :class:`Factorization`, whose product re-substitutes exactly to the
target, or a falsy :class:`NoFactor` carrying a finite certificate (a vector
violating the kernel/image inclusion, or the offending ranks).

Kernel side: ``T = P S`` exists iff ``ker S <= ker T``.
Image side:  ``S = T P`` exists iff ``im S <= im T``.
Rank:        ``S = P T Q`` exists iff ``rank S <= rank T``.

The constructions follow the usual basis-extension recipe: take a basis of a
kernel, extend it greedily by coordinate vectors, prescribe the witness on the
resulting basis. Where the recipe allows an arbitrary choice on a complement
it is fixed to zero, and injections/surjections between complements match
basis vectors in index order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SpaceMismatchError
from .linmap import (
    LinMap,
    apply,
    block,
    compose,
    compose_all,
    from_basis_values,
    image,
    is_injective,
    is_invertible,
    is_surjective,
    juxtapose,
    kernel,
    preimages,
    rank,
    stack,
    sum_maps,
    zero_map,
)
from .space import Space, Vec, extend_basis, full_subspace, intersect, span, subspace_leq


@dataclass(frozen=True)
class WitnessFlags:
    injective: bool
    surjective: bool
    invertible: bool

    @classmethod
    def of(cls, t: LinMap) -> WitnessFlags:
        return cls(is_injective(t), is_surjective(t), is_invertible(t))


@dataclass(frozen=True)
class Factorization:
    """``target == sum over terms of compose(*term)``.

    ``witnesses`` lists the constructed maps with their labels, in the order
    they appear in ``form``; ``terms`` holds the full products, operands
    included. ``claim`` names a property promised for the first witness
    (``"injective"``, ``"surjective"`` or ``"invertible"``).
    """

    form: str
    target: LinMap
    terms: tuple
    witnesses: tuple
    labels: tuple
    claim: str | None = None

    def __bool__(self):
        return True

    def __getitem__(self, label: str) -> LinMap:
        return self.witnesses[self.labels.index(label)]

    @property
    def flags(self) -> tuple[WitnessFlags, ...]:
        return tuple(WitnessFlags.of(w) for w in self.witnesses)

    def recompose(self) -> LinMap:
        t = self.target
        return sum_maps([compose_all(*term) for term in self.terms], t.domain, t.codomain)

    def claim_holds(self) -> bool:
        if self.claim is None:
            return True
        return getattr(WitnessFlags.of(self.witnesses[0]), self.claim)

    def verify(self) -> bool:
        return self.recompose() == self.target and self.claim_holds()


@dataclass(frozen=True)
class NoFactor:
    """Negative answer with a certificate.

    ``vector`` is a vector violating the required inclusion (the ``reason``
    says which); ``ranks`` holds ``(rank of target, available rank)`` for the
    rank factorizations.
    """

    reason: str
    vector: Vec | None = None
    ranks: tuple | None = None

    def __bool__(self):
        return False


def _same_domain(*maps: LinMap):
    d = maps[0].domain
    if any(m.domain != d for m in maps):
        raise SpaceMismatchError("maps must share their domain")


def _same_codomain(*maps: LinMap):
    c = maps[0].codomain
    if any(m.codomain != c for m in maps):
        raise SpaceMismatchError("maps must share their codomain")


def _kernel_escape(s: LinMap, t: LinMap):
    """A basis vector of ``ker s`` not killed by ``t``, or ``None``."""
    for v in kernel(s).vectors():
        if not apply(t, v).is_zero():
            return v
    return None


def _image_escape(s: LinMap, t: LinMap):
    """A basis vector of ``im s`` outside ``im t``, or ``None``."""
    im_t = image(t)
    for w in image(s).vectors():
        if w not in im_t:
            return w
    return None


def _fac(form, target, terms, witnesses, labels, claim=None) -> Factorization:
    fac = Factorization(form, target, tuple(tuple(t) for t in terms), tuple(witnesses), tuple(labels), claim)
    if claim is not None and not fac.claim_holds():
        raise AssertionError(f"constructed witness is not {claim}")
    return fac


# Kernel side ---------------------------------------------------------------


def factor_kernel_subset(s: LinMap, t: LinMap):
    """``P`` with ``t = P s``, given ``s : V -> W`` and ``t : V -> Z``."""
    _same_domain(s, t)
    v = _kernel_escape(s, t)
    if v is not None:
        return NoFactor("ker S is not contained in ker T", vector=v)
    V, W, Z = s.domain, s.codomain, t.codomain
    ker_s = kernel(s).vectors()
    b2 = extend_basis(ker_s, V, within=kernel(t))
    b3 = extend_basis(ker_s + b2, V)
    s_img = [apply(s, x) for x in b2 + b3]
    b4 = extend_basis(s_img, W)
    values = [apply(t, x) for x in b2 + b3] + [Z.zero()] * len(b4)
    p = from_basis_values(W, Z, s_img + b4, values)
    return _fac("T=PS", t, [(p, s)], [p], ["P"])


def factor_kernel_equal(s: LinMap, t: LinMap):
    """Injective ``P`` with ``t = P s``, or injective ``Q`` with ``s = Q t``.

    The direction follows the cokernel dimensions: ``P`` when
    ``coker s <= coker t``, else ``Q``. With equal cokernel dimensions the
    witness is invertible.
    """
    _same_domain(s, t)
    v = _kernel_escape(s, t)
    if v is not None:
        return NoFactor("ker S is not contained in ker T", vector=v)
    v = _kernel_escape(t, s)
    if v is not None:
        return NoFactor("ker T is not contained in ker S", vector=v)
    V = s.domain
    b1 = kernel(s).vectors()
    b2 = extend_basis(b1, V)
    s_img = [apply(s, x) for x in b2]
    t_img = [apply(t, x) for x in b2]
    b3 = extend_basis(s_img, s.codomain)
    b4 = extend_basis(t_img, t.codomain)
    if len(b3) <= len(b4):
        p = from_basis_values(s.codomain, t.codomain, s_img + b3, t_img + b4[: len(b3)])
        claim = "invertible" if len(b3) == len(b4) else "injective"
        return _fac("T=PS", t, [(p, s)], [p], ["P"], claim)
    q = from_basis_values(t.codomain, s.codomain, t_img + b4, s_img + b3[: len(b4)])
    return _fac("S=QT", s, [(q, t)], [q], ["Q"], "injective")


def factor_kernel_multi(gens, t: LinMap):
    """``P_1..P_n`` with ``t = P_1 S_1 + ... + P_n S_n``.

    The generators are stacked into ``S : V -> W^n`` and ``t`` into
    ``T_1 : V -> Z^n``; the single-map factorization ``T_1 = P S`` is computed
    and the first block row of ``P`` is read off.
    """
    gens = list(gens)
    if not gens:
        if t.is_zero():
            return _fac("T=sum PiSi", t, [], [], [])
        return NoFactor("T is nonzero on the common kernel V of an empty family",
                        vector=next(v for v in t.domain.standard_basis() if not apply(t, v).is_zero()))
    _same_domain(*gens, t)
    _same_codomain(*gens)
    n = len(gens)
    W, Z = gens[0].codomain, t.codomain
    big_s = stack(gens, W)
    big_t = stack([t] * n, Z)
    inner = factor_kernel_subset(big_s, big_t)
    if not inner:
        return NoFactor("the common kernel of the S_i is not contained in ker T", vector=inner.vector)
    p = inner["P"]
    ps = [block(p, W, n, Z, n, 0, j) for j in range(n)]
    labels = [f"P{j + 1}" for j in range(n)]
    return _fac("T=sum PiSi", t, [(pj, sj) for pj, sj in zip(ps, gens)], ps, labels)


# Image side ----------------------------------------------------------------


def factor_image_subset(s: LinMap, t: LinMap):
    """``P`` with ``s = t P``, given ``s : V -> W`` and ``t : Z -> W``."""
    _same_codomain(s, t)
    w = _image_escape(s, t)
    if w is not None:
        return NoFactor("im S is not contained in im T", vector=w)
    V, Z = s.domain, t.domain
    b1 = kernel(s).vectors()
    b3 = extend_basis(b1, V)
    xs = preimages(t, [apply(s, y) for y in b3])
    p = from_basis_values(V, Z, b1 + b3, [Z.zero()] * len(b1) + xs)
    return _fac("S=TP", s, [(t, p)], [p], ["P"])


def _surjective_factor(a: LinMap, b: LinMap) -> LinMap:
    """Surjective ``P : dom b -> dom a`` with ``b = a P``.

    Requires ``im a == im b`` and ``dim ker a <= dim ker b``.
    """
    X, Y = a.domain, b.domain
    ker_a = kernel(a).vectors()
    ker_b = kernel(b).vectors()
    comp = extend_basis(ker_b, Y)
    xs = preimages(a, [apply(b, y) for y in comp])
    on_kernel = [ker_a[i] if i < len(ker_a) else X.zero() for i in range(len(ker_b))]
    return from_basis_values(Y, X, ker_b + comp, on_kernel + xs)


def factor_image_equal(s: LinMap, t: LinMap):
    """Surjective ``P`` with ``t = s P``, or surjective ``Q`` with ``s = t Q``.

    ``P`` is used when ``dim ker s <= dim ker t``, ``Q`` otherwise; with equal
    kernel dimensions the witness is invertible.
    """
    _same_codomain(s, t)
    w = _image_escape(s, t)
    if w is not None:
        return NoFactor("im S is not contained in im T", vector=w)
    w = _image_escape(t, s)
    if w is not None:
        return NoFactor("im T is not contained in im S", vector=w)
    ks, kt = kernel(s).dim, kernel(t).dim
    if ks <= kt:
        p = _surjective_factor(s, t)
        return _fac("T=SP", t, [(s, p)], [p], ["P"], "invertible" if ks == kt else "surjective")
    q = _surjective_factor(t, s)
    return _fac("S=TQ", s, [(t, q)], [q], ["Q"], "surjective")


def factor_image_multi(s: LinMap, gens):
    """``P_1..P_n`` with ``s = T_1 P_1 + ... + T_n P_n``.

    Uses ``S_1 : V^n -> W``, ``(x_i) -> sum S x_i`` and the sum map
    ``T : Z^n -> W``; from ``S_1 = T P`` the first block column of ``P`` gives
    the witnesses.
    """
    gens = list(gens)
    if not gens:
        if s.is_zero():
            return _fac("S=sum TiPi", s, [], [], [])
        return NoFactor("im S is not contained in the zero image of an empty family",
                        vector=image(s).vectors()[0])
    _same_codomain(s, *gens)
    _same_domain(*gens)
    n = len(gens)
    V, Z = s.domain, gens[0].domain
    big_s = juxtapose([s] * n, V)
    big_t = juxtapose(gens, Z)
    inner = factor_image_subset(big_s, big_t)
    if not inner:
        return NoFactor("im S is not contained in the sum of the images of the T_i", vector=inner.vector)
    p = inner["P"]
    ps = [block(p, V, n, Z, n, i, 0) for i in range(n)]
    labels = [f"P{i + 1}" for i in range(n)]
    return _fac("S=sum TiPi", s, [(ti, pi) for ti, pi in zip(gens, ps)], ps, labels)


# Rank ----------------------------------------------------------------------


def _image_basis_of(s: LinMap):
    """Images ``S x_i`` of a kernel complement: a basis of ``im S``."""
    comp = extend_basis(kernel(s).vectors(), s.domain)
    return [apply(s, x) for x in comp]


def _carry_image(t: LinMap, targets, W: Space) -> LinMap:
    """``P : cod t -> W`` sending the canonical image basis of ``t`` to ``targets``.

    Missing targets and the greedy complement go to zero.
    """
    Y = t.codomain
    ty = image(t).vectors()
    comp = extend_basis(ty, Y)
    values = list(targets) + [W.zero()] * (len(ty) - len(targets)) + [W.zero()] * len(comp)
    return from_basis_values(Y, W, ty + comp, values)


def factor_rank(s: LinMap, t: LinMap):
    """``P, Q`` with ``s = P t Q`` for arbitrary ``s : V -> W`` and ``t : X -> Y``."""
    if s.scalars != t.scalars or s.chirality is not t.chirality:
        raise SpaceMismatchError("maps must share scalars and chirality")
    rs, rt = rank(s), rank(t)
    if rs > rt:
        return NoFactor("rank S exceeds rank T", ranks=(rs, rt))
    p = _carry_image(t, _image_basis_of(s), s.codomain)
    q = factor_image_subset(s, compose(p, t))["P"]
    return _fac("S=PTQ", s, [(p, t, q)], [p, q], ["P", "Q"])


def _cyclic_targets(sx, sizes):
    """Split indices of ``sx`` among blocks of the given sizes.

    Block ``k`` receives ``sizes[k]`` consecutive indices modulo ``len(sx)``,
    starting where block ``k - 1`` stopped: onto as soon as the sizes sum to at
    least ``len(sx)``, and one-to-one on each block since every size is
    smaller than ``len(sx)``.
    """
    r = len(sx)
    out, offset = [], 0
    for size in sizes:
        out.append([sx[(offset + j) % r] for j in range(size)])
        offset += size
    return out


def factor_rank_multi(s: LinMap, gens):
    """``P_i, Q_i`` with ``s = sum_i P_i T_i Q_i``; needs ``rank s <= sum rank T_i``."""
    gens = list(gens)
    if not gens:
        if s.is_zero():
            return _fac("S=sum PiTiQi", s, [], [], [])
        return NoFactor("rank S exceeds the total rank of an empty family", ranks=(rank(s), 0))
    for g in gens:
        if g.domain != gens[0].domain or g.codomain != gens[0].codomain:
            raise SpaceMismatchError("generators must share domain and codomain")
    if s.scalars != gens[0].scalars or s.chirality is not gens[0].chirality:
        raise SpaceMismatchError("maps must share scalars and chirality")
    V, W = s.domain, s.codomain
    X, Y = gens[0].domain, gens[0].codomain
    ranks = [rank(g) for g in gens]
    rs = rank(s)
    if rs > sum(ranks):
        return NoFactor("rank S exceeds the sum of the ranks of the T_i", ranks=(rs, sum(ranks)))
    labels = []
    for i in range(len(gens)):
        labels += [f"P{i + 1}", f"Q{i + 1}"]
    zero_p, zero_q = zero_map(Y, W), zero_map(V, X)
    big = next((k for k, r in enumerate(ranks) if r >= rs), None)
    if big is not None:
        single = factor_rank(s, gens[big])
        pairs = [(single["P"], single["Q"]) if k == big else (zero_p, zero_q) for k in range(len(gens))]
    else:
        sx = _image_basis_of(s)
        ps = [_carry_image(g, targets, W) for g, targets in zip(gens, _cyclic_targets(sx, ranks))]
        inner = factor_image_multi(s, [compose(p, g) for p, g in zip(ps, gens)])
        pairs = list(zip(ps, inner.witnesses))
    terms = [(p, g, q) for (p, q), g in zip(pairs, gens)]
    witnesses = [m for pair in pairs for m in pair]
    return _fac("S=sum PiTiQi", s, terms, witnesses, labels)


def replication_count(target_rank: int, generator_rank: int) -> int:
    """Smallest ``k`` with ``k * generator_rank >= target_rank`` (at least 1)."""
    return max(1, math.ceil(target_rank / generator_rank))


# Predicates ----------------------------------------------------------------


def kernel_inclusion(gens, t: LinMap) -> bool:
    """``ker S_1 & ... & ker S_n <= ker T``."""
    common = full_subspace(t.domain)
    for g in gens:
        common = intersect(common, kernel(g))
    return subspace_leq(common, kernel(t))


def image_inclusion(s: LinMap, gens) -> bool:
    """``im S <= im T_1 + ... + im T_n``."""
    total = span([v for g in gens for v in image(g).vectors()], s.codomain)
    return subspace_leq(image(s), total)
