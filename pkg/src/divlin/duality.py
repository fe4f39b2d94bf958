"""Annihilators, adjoint images and the quotient-dual isomorphism."""

from __future__ import annotations

from dataclasses import dataclass

from . import elim
from .errors import DimensionError, SpaceMismatchError
from .linmap import (
    LinMap,
    adjoint,
    evaluate,
    from_basis_values,
    image,
    kernel,
    rank_one,
    sum_maps,
)
from .space import RIGHT, Space, Subspace, Vec, extend_basis, full_subspace, intersect, span


def perp(s: Subspace) -> Subspace:
    """The annihilator ``{f in V' : f(s) = 0}``, a subspace of the dual space."""
    V = s.ambient
    dual = V.dual()
    # f(b) = sum f_i b_i (right V) or sum b_i f_i (left V): in both cases the
    # unknown f sits on the dual's side of the coefficients b.
    side = elim.RIGHT if dual.chirality is RIGHT else elim.LEFT
    basis = elim.nullspace(list(s.basis), V.dim, side, V.domain)
    return span([Vec(dual, b) for b in basis], dual)


def _family_spaces(family, domain, codomain):
    family = list(family)
    if family:
        domain, codomain = family[0].domain, family[0].codomain
        for t in family:
            if t.domain != domain or t.codomain != codomain:
                raise SpaceMismatchError("family members must share domain and codomain")
    elif domain is None or codomain is None:
        raise ValueError("an empty family needs explicit domain and codomain")
    return family, domain, codomain


def family_image(family, codomain: Space) -> Subspace:
    """``<union of T V>`` for a family of maps into ``codomain``."""
    return span([v for t in family for v in image(t).vectors()], codomain)


def family_kernel(family, domain: Space) -> Subspace:
    """``intersection of ker T`` for a family of maps on ``domain``."""
    common = full_subspace(domain)
    for t in family:
        common = intersect(common, kernel(t))
    return common


def check_image_perp(family, domain: Space | None = None, codomain: Space | None = None) -> bool:
    """Compare ``(im C)^perp`` with ``ker(C')`` as canonical subspaces of ``W'``."""
    family, V, W = _family_spaces(family, domain, codomain)
    lhs = perp(family_image(family, W))
    rhs = family_kernel([adjoint(t) for t in family], W.dual())
    return lhs == rhs


def check_kernel_perp(family, domain: Space | None = None, codomain: Space | None = None) -> bool:
    """Compare ``(ker C)^perp`` with ``im(C')`` as canonical subspaces of ``V'``."""
    family, V, W = _family_spaces(family, domain, codomain)
    lhs = perp(family_kernel(family, V))
    rhs = family_image([adjoint(t) for t in family], V.dual())
    return lhs == rhs


def minimal_kernel_subfamily(family, domain: Space | None = None, codomain: Space | None = None) -> list[int]:
    """Indices of members chosen greedily until their common kernel is ``ker C``.

    At most ``dim coim(C)`` members are taken, since every chosen member
    strictly lowers the dimension of the running intersection.
    """
    family, V, _ = _family_spaces(family, domain, codomain)
    target = family_kernel(family, V)
    running = full_subspace(V)
    chosen = []
    for i, t in enumerate(family):
        if running == target:
            break
        nxt = intersect(running, kernel(t))
        if nxt.dim < running.dim:
            chosen.append(i)
            running = nxt
    return chosen


@dataclass(frozen=True)
class QuotientDualIso:
    """The isomorphism ``(ker S)^perp -> (V / ker S)'`` and its inverse.

    ``V / ker S`` is modelled by the span of ``complement`` (greedy coordinate
    vectors completing a basis of ``ker S``); a quotient class is given by its
    coordinates on ``complement``. ``forward`` and ``inverse`` act on
    coordinates relative to the canonical basis of ``perp_space`` and to the
    dual basis of ``complement``.
    """

    kernel: Subspace
    complement: tuple
    perp_space: Subspace
    forward: LinMap
    inverse: LinMap

    def __iter__(self):
        return iter((self.forward, self.inverse))

    def to_quotient_dual(self, f: Vec) -> Vec:
        """``phi f``: the values of ``f`` on the complement vectors."""
        return Vec(self.forward.codomain, tuple(evaluate(f, c) for c in self.complement))

    def from_quotient_dual(self, h: Vec) -> Vec:
        """The functional on ``V`` vanishing on ``ker S`` and equal to ``h`` on the complement."""
        coeffs = self.inverse(h)
        dual = self.perp_space.ambient
        acc = dual.zero()
        for g, lam in zip(self.perp_space.vectors(), coeffs.coords):
            acc = acc + g.scale(lam)
        return acc


def quotient_dual_iso(family, domain: Space | None = None, codomain: Space | None = None) -> QuotientDualIso:
    family, V, _ = _family_spaces(family, domain, codomain)
    ker = family_kernel(family, V)
    comp = tuple(extend_basis(ker.vectors(), V))
    p = perp(ker)
    r = len(comp)
    coord_space = Space(V.domain, r, V.chirality.opposite)
    if p.dim != r:
        raise AssertionError("annihilator and quotient have different dimensions")
    phi_images = [coord_space.vector(evaluate(g, c) for c in comp) for g in p.vectors()]
    forward = LinMap.from_images(coord_space, coord_space, phi_images)
    inverse = from_basis_values(coord_space, coord_space, phi_images, coord_space.standard_basis())
    return QuotientDualIso(ker, comp, p, forward, inverse)


def map_with_adjoint_image(m: Subspace, w: Space) -> LinMap:
    """``T : V -> w`` with ``im(T') = m`` for a subspace ``m`` of ``V'``.

    ``T = y_1 (x) f_1 + ... + y_n (x) f_n`` with ``f_i`` the canonical basis of
    ``m`` and ``y_i`` the first ``n`` coordinate vectors of ``w``; the
    coordinate functionals of the ``y_i`` are then sent to the ``f_i`` by
    ``T'``.
    """
    V = m.ambient.dual()
    if w.domain != V.domain or w.chirality is not V.chirality:
        raise SpaceMismatchError("target space must match the scalars and chirality of V")
    if w.dim < m.dim:
        raise DimensionError(f"dim W = {w.dim} is smaller than dim M = {m.dim}")
    terms = [rank_one(w.unit(i), f) for i, f in enumerate(m.vectors())]
    t = sum_maps(terms, V, w)
    if image(adjoint(t)) != m:
        raise AssertionError("adjoint image does not match the prescribed subspace")
    return t
