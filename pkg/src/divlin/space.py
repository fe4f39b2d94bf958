"""Finite-dimensional right/left vector spaces and their subspaces.

Coordinates convention: a vector of a right space is a column on which
scalars act from the right (``x * lam``); a vector of a left space is a row on
which scalars act from the left (``lam * x``). Linear combinations, and hence
spans and echelon forms, respect that side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import elim
from .errors import DependentInputError, SpaceMismatchError
from .scalar import ScalarDomain


class Chirality(enum.Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def opposite(self) -> Chirality:
        return Chirality.LEFT if self is Chirality.RIGHT else Chirality.RIGHT

    def __str__(self):
        return self.value


RIGHT = Chirality.RIGHT
LEFT = Chirality.LEFT


@dataclass(frozen=True)
class Space:
    """The coordinate space ``D^dim`` with scalars acting on ``chirality``."""

    domain: ScalarDomain
    dim: int
    chirality: Chirality = RIGHT

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.dim}")

    def dual(self) -> Space:
        return Space(self.domain, self.dim, self.chirality.opposite)

    def power(self, n: int) -> Space:
        """The direct sum of ``n`` copies of this space."""
        return Space(self.domain, self.dim * n, self.chirality)

    def vector(self, values) -> Vec:
        coerce = self.domain
        return Vec(self, tuple(coerce(v) for v in values))

    def zero(self) -> Vec:
        return Vec(self, (self.domain.zero(),) * self.dim)

    def unit(self, i: int) -> Vec:
        z, o = self.domain.zero(), self.domain.one()
        return Vec(self, tuple(o if k == i else z for k in range(self.dim)))

    def standard_basis(self) -> list[Vec]:
        return [self.unit(i) for i in range(self.dim)]

    def __repr__(self):
        return f"Space({self.domain!r}^{self.dim}, {self.chirality})"


@dataclass(frozen=True)
class Vec:
    space: Space
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.space.dim:
            raise SpaceMismatchError(f"{len(self.coords)} coordinates given for {self.space!r}")

    def _check(self, other):
        if not isinstance(other, Vec) or other.space != self.space:
            raise SpaceMismatchError("vectors belong to different spaces")

    def __add__(self, other):
        self._check(other)
        return Vec(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Vec(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Vec(self.space, tuple(-a for a in self.coords))

    def scale(self, lam) -> Vec:
        """Multiply by ``lam`` on the side the space's scalars act on."""
        if self.space.chirality is RIGHT:
            return Vec(self.space, tuple(a * lam for a in self.coords))
        return Vec(self.space, tuple(lam * a for a in self.coords))

    def __mul__(self, lam):
        if self.space.chirality is not RIGHT:
            raise SpaceMismatchError("left-space vectors take scalars on the left")
        return self.scale(lam)

    def __rmul__(self, lam):
        if self.space.chirality is not LEFT:
            raise SpaceMismatchError("right-space vectors take scalars on the right")
        return self.scale(lam)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        body = ", ".join(self.space.domain.format(c) for c in self.coords)
        return f"Vec[{self.space.chirality}]({body})"


def _side(space: Space) -> str:
    return elim.RIGHT if space.chirality is RIGHT else elim.LEFT


@dataclass(frozen=True)
class Subspace:
    """A subspace held by its canonical (reduced echelon) basis.

    Two ``Subspace`` values compare equal exactly when they are the same set.
    """

    ambient: Space
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[Vec]:
        return [Vec(self.ambient, b) for b in self.basis]

    def reduce(self, v) -> tuple:
        """Residual of ``v`` after subtracting its component along the pivots."""
        coords = list(v.coords if isinstance(v, Vec) else v)
        right = self.ambient.chirality is RIGHT
        for b, p in zip(self.basis, self.pivots):
            lam = coords[p]
            if not lam:
                continue
            if right:
                coords = [x - y * lam for x, y in zip(coords, b)]
            else:
                coords = [x - lam * y for x, y in zip(coords, b)]
        return tuple(coords)

    def coordinates(self, v) -> tuple | None:
        """Coefficients of ``v`` on the canonical basis, or ``None`` if ``v`` is outside."""
        if any(self.reduce(v)):
            return None
        coords = v.coords if isinstance(v, Vec) else v
        return tuple(coords[p] for p in self.pivots)

    def __contains__(self, v) -> bool:
        if isinstance(v, Vec) and v.space != self.ambient:
            raise SpaceMismatchError("vector is not in the ambient space of the subspace")
        return not any(self.reduce(v))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient!r})"


def _coords_list(vectors, space):
    out = []
    for v in vectors:
        if isinstance(v, Vec):
            if v.space != space:
                raise SpaceMismatchError("vectors belong to different spaces")
            out.append(v.coords)
        else:
            out.append(tuple(v))
    return out


def span(vectors, space: Space | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors`` (combinations on the correct side)."""
    vectors = list(vectors)
    if space is None:
        if not vectors:
            raise ValueError("span of an empty list needs an explicit space")
        space = vectors[0].space
    rows = _coords_list(vectors, space)
    reduced, pivots = elim.rref(rows, space.dim, _side(space), space.domain)
    return Subspace(space, tuple(reduced), tuple(pivots))


def zero_subspace(space: Space) -> Subspace:
    return Subspace(space, (), ())


def full_subspace(space: Space) -> Subspace:
    return span(space.standard_basis(), space)


def contains(s: Subspace, v: Vec) -> bool:
    return v in s


def is_independent(vectors, space: Space | None = None) -> bool:
    vectors = list(vectors)
    return span(vectors, space).dim == len(vectors)


def extend_basis(independent, space: Space, within: Subspace | None = None) -> list[Vec]:
    """Vectors ``B2`` such that ``independent + B2`` is a basis.

    The basis is of the whole ``space``, or of ``within`` when given. Candidates
    are scanned greedily in order: the standard coordinate vectors, or the
    canonical basis of ``within``.
    """
    independent = list(independent)
    current = span(independent, space)
    if current.dim != len(independent):
        raise DependentInputError("extend_basis needs an independent input list")
    if within is None:
        candidates = space.standard_basis()
        target = space.dim
    else:
        if within.ambient != space:
            raise SpaceMismatchError("subspace is not in the given space")
        candidates = within.vectors()
        target = within.dim
        if any(v not in within for v in independent):
            raise SpaceMismatchError("input vectors are not contained in the target subspace")
    chosen = []
    for cand in candidates:
        if current.dim == target:
            break
        if cand not in current:
            chosen.append(cand)
            current = span(independent + chosen, space)
    return chosen


def _check_same(s1: Subspace, s2: Subspace):
    if s1.ambient != s2.ambient:
        raise SpaceMismatchError("subspaces live in different ambient spaces")


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _check_same(s1, s2)
    return span(s1.vectors() + s2.vectors(), s1.ambient)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection, from the homogeneous system ``sum b_i l_i = sum c_j m_j``."""
    _check_same(s1, s2)
    space = s1.ambient
    k1 = s1.dim
    if k1 == 0 or s2.dim == 0:
        return zero_subspace(space)
    neg2 = [tuple(-x for x in c) for c in s2.basis]
    gens = list(s1.basis) + neg2
    # Unknown coefficient vector (l, m) lives on the same side as the space.
    n = len(gens)
    equations = [tuple(g[i] for g in gens) for i in range(space.dim)]
    sols = elim.nullspace(equations, n, _side(space), space.domain)
    right = space.chirality is RIGHT
    vectors = []
    for sol in sols:
        acc = [space.domain.zero()] * space.dim
        for b, lam in zip(s1.basis, sol[:k1]):
            if right:
                acc = [a + x * lam for a, x in zip(acc, b)]
            else:
                acc = [a + lam * x for a, x in zip(acc, b)]
        vectors.append(tuple(acc))
    return span(vectors, space)


def subspace_leq(s1: Subspace, s2: Subspace) -> bool:
    _check_same(s1, s2)
    return all(not any(s2.reduce(b)) for b in s1.basis)


def subspace_eq(s1: Subspace, s2: Subspace) -> bool:
    _check_same(s1, s2)
    return s1 == s2
