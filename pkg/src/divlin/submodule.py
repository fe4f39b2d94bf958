"""Submodules of ``L(V, W)`` generated by finitely many maps.

Right submodules (closed under ``T -> T R``) are determined by the sum of the
generator images, left submodules (``T -> R T``) by the intersection of the
generator kernels. Membership is decided from that invariant; the witness is
a factorization from :mod:`divlin.factor`.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import cached_property

from . import bruteforce
from .duality import family_image, family_kernel, map_with_adjoint_image, perp
from .errors import SpaceMismatchError
from .factor import (
    NoFactor,
    factor_image_multi,
    factor_kernel_multi,
    factor_rank_multi,
    kernel_inclusion,
    replication_count,
)
from .linmap import LinMap, from_basis_values, identity, image, kernel, rank, zero_map
from .space import Space, Subspace, extend_basis


class Side(enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    TWO_SIDED = "two-sided"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SubmoduleGens:
    """A generator list for a right, left or two-sided submodule of ``L(V, W)``."""

    side: Side
    gens: tuple
    domain: Space
    codomain: Space

    @classmethod
    def of(cls, side, gens, domain: Space | None = None, codomain: Space | None = None) -> SubmoduleGens:
        side = Side(side.value if isinstance(side, Side) else side)
        gens = tuple(gens)
        if gens:
            domain = domain or gens[0].domain
            codomain = codomain or gens[0].codomain
        if domain is None or codomain is None:
            raise ValueError("an empty generator list needs explicit spaces")
        for g in gens:
            if g.domain != domain or g.codomain != codomain:
                raise SpaceMismatchError("generators must all map domain -> codomain")
        return cls(side, gens, domain, codomain)

    @cached_property
    def image_sum(self) -> Subspace:
        return family_image(self.gens, self.codomain)

    @cached_property
    def kernel_intersection(self) -> Subspace:
        return family_kernel(self.gens, self.domain)

    def _check(self, t: LinMap):
        if t.domain != self.domain or t.codomain != self.codomain:
            raise SpaceMismatchError("map does not live in the same L(V, W) as the generators")


@dataclass(frozen=True)
class NotMember(NoFactor):
    """Falsy answer to a membership query, with the certificate of :class:`NoFactor`."""


@dataclass(frozen=True)
class NotPrincipalHere:
    """Refusal: the dimension hypothesis needed for a single generator fails."""

    reason: str

    def __bool__(self):
        return False


def _not_member(nf: NoFactor) -> NotMember:
    return NotMember(nf.reason, vector=nf.vector, ranks=nf.ranks)


def _expect(gens: SubmoduleGens, side: Side):
    if gens.side is not side:
        raise ValueError(f"expected a {side} generator list, got {gens.side}")


def member_right(gens: SubmoduleGens, t: LinMap):
    """``t = T_1 P_1 + ... + T_n P_n`` or a vector of ``im t`` outside the image sum."""
    _expect(gens, Side.RIGHT)
    gens._check(t)
    fac = factor_image_multi(t, gens.gens)
    return fac if fac else _not_member(fac)


def member_left(gens: SubmoduleGens, t: LinMap):
    """``t = P_1 T_1 + ... + P_n T_n`` or a vector of the kernel intersection not killed by ``t``."""
    _expect(gens, Side.LEFT)
    gens._check(t)
    fac = factor_kernel_multi(gens.gens, t)
    return fac if fac else _not_member(fac)


def member_two_sided(gens: SubmoduleGens, t: LinMap):
    """``t = sum P_i T Q_i`` with a generator ``T`` of maximal rank repeated enough times."""
    _expect(gens, Side.TWO_SIDED)
    gens._check(t)
    ranks = [rank(g) for g in gens.gens]
    if not ranks:
        fac = factor_rank_multi(t, [])
        return fac if fac else _not_member(fac)
    top = max(range(len(ranks)), key=lambda k: ranks[k])
    if ranks[top] == 0:
        if t.is_zero():
            return factor_rank_multi(t, [gens.gens[top]])
        return NotMember("every generator is zero", ranks=(rank(t), 0))
    k = replication_count(rank(t), ranks[top])
    return factor_rank_multi(t, [gens.gens[top]] * k)


def member(gens: SubmoduleGens, t: LinMap):
    if gens.side is Side.RIGHT:
        return member_right(gens, t)
    if gens.side is Side.LEFT:
        return member_left(gens, t)
    return member_two_sided(gens, t)


def saturate(gens: SubmoduleGens):
    """The subspace that determines the generated submodule.

    Image sum in ``W`` for right submodules, kernel intersection in ``V`` for
    left ones. A two-sided submodule is either zero or all of ``L(V, W)``;
    it is described by the zero or the full subspace of ``W``.
    """
    if gens.side is Side.RIGHT:
        return gens.image_sum
    if gens.side is Side.LEFT:
        return gens.kernel_intersection
    return gens.image_sum if gens.image_sum.dim == 0 else family_image(
        [identity(gens.codomain)], gens.codomain)


def principal_generator(gens: SubmoduleGens):
    """A single map generating the same one-sided submodule.

    Right side: ``T0`` with ``im T0`` the image sum, available when
    ``dim V >= dim W``. Left side: ``T0`` with ``ker T0`` the kernel
    intersection, available when ``dim V <= dim W``.
    """
    V, W = gens.domain, gens.codomain
    if gens.side is Side.RIGHT:
        if V.dim < W.dim:
            return NotPrincipalHere(f"dim V = {V.dim} < dim W = {W.dim}")
        m = gens.image_sum.vectors()
        images = m + [W.zero()] * (V.dim - len(m))
        t0 = LinMap.from_images(V, W, images)
        assert image(t0) == gens.image_sum
        return t0
    if gens.side is Side.LEFT:
        if V.dim > W.dim:
            return NotPrincipalHere(f"dim V = {V.dim} > dim W = {W.dim}")
        t0 = map_with_adjoint_image(perp(gens.kernel_intersection), W)
        assert kernel(t0) == gens.kernel_intersection
        return t0
    if gens.image_sum.dim == 0:
        return zero_map(V, W)
    return max(gens.gens, key=rank)


def idempotent_generators(gens: SubmoduleGens) -> list[LinMap]:
    """One idempotent ``E`` generating the same submodule of ``L(V)``.

    Right side: the projection onto the image sum killing a greedy coordinate
    complement. Left side: the projection along the kernel intersection onto
    a greedy coordinate complement.
    """
    V = gens.domain
    if gens.codomain != V:
        raise SpaceMismatchError("idempotent generators need V = W")
    if gens.side is Side.RIGHT:
        keep = gens.image_sum.vectors()
        drop = extend_basis(keep, V)
    elif gens.side is Side.LEFT:
        drop = gens.kernel_intersection.vectors()
        keep = extend_basis(drop, V)
    else:
        return [identity(V) if gens.image_sum.dim else zero_map(V, V)]
    e = from_basis_values(V, V, keep + drop, keep + [V.zero()] * len(drop))
    assert e @ e == e
    return [e]


@dataclass
class ProbeReport:
    """Outcome of comparing closure membership with kernel inclusion."""

    agree: int = 0
    disagree: int = 0
    counterexamples: list = field(default_factory=list)

    def merge(self, other: ProbeReport) -> ProbeReport:
        return ProbeReport(self.agree + other.agree, self.disagree + other.disagree,
                           self.counterexamples + other.counterexamples)


def conjecture_probe(gens: SubmoduleGens, trials: int | None = None, rng=None) -> ProbeReport:
    """Compare ``T in closure(gens)`` with ``ker(gens) <= ker T`` over a small prime field.

    With ``trials`` unset every ``T`` in ``L(V, W)`` is examined, otherwise
    ``trials`` random ones. Disagreements are reported, never raised.
    """
    _expect(gens, Side.LEFT)
    V, W = gens.domain, gens.codomain
    members = bruteforce.closure(gens.gens, "left", V, W)
    keys = bruteforce.all_keys(V, W)
    if trials is not None:
        rng = rng or random.Random(0)
        keys = [rng.choice(keys) for _ in range(trials)]
    report = ProbeReport()
    for k in keys:
        t = bruteforce.from_key(k, V, W)
        if (k in members) == kernel_inclusion(gens.gens, t):
            report.agree += 1
        else:
            report.disagree += 1
            report.counterexamples.append(t)
    return report


def probe_all_single_generators(domain: Space, codomain: Space) -> ProbeReport:
    """:func:`conjecture_probe` for every one-generator left submodule of ``L(V, W)``."""
    report = ProbeReport()
    for g in bruteforce.all_maps(domain, codomain):
        report = report.merge(conjecture_probe(SubmoduleGens.of(Side.LEFT, [g])))
    return report

