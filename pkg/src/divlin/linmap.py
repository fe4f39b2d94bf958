"""Linear transformations between finite-dimensional spaces over D.

Matrix convention
-----------------
A map between *right* spaces stores a ``dim(codomain) x dim(domain)`` matrix
``M`` and acts by ``x -> M x`` on columns. A map between *left* spaces stores a
``dim(domain) x dim(codomain)`` matrix and acts by ``x -> x M`` on rows. In both
cases ``A(x lam) = A(x) lam`` (resp. ``A(lam x) = lam A(x)``) holds by
construction.

Functionals on a right space are vectors of the dual (left) space, and
``f(x) = sum_i f_i x_i``; on a left space ``f(x) = sum_i x_i f_i``. With these
conventions the adjoint ``T'`` of ``T`` is stored with *the same matrix* as
``T``, acting from the other side. Transposing entries would be wrong over a
noncommutative D.

The double dual ``V''`` has the chirality of ``V`` and is identified with
``V`` coordinatewise.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import elim
from .errors import SpaceMismatchError
from .space import LEFT, RIGHT, Chirality, Space, Subspace, Vec, span


@dataclass(frozen=True, eq=True)
class LinMap:
    domain: Space
    codomain: Space
    matrix: tuple

    def __post_init__(self):
        dom, cod = self.domain, self.codomain
        if dom.domain != cod.domain:
            raise SpaceMismatchError("domain and codomain have different scalar domains")
        if dom.chirality is not cod.chirality:
            raise SpaceMismatchError("domain and codomain have different chirality")
        nrows, ncols = self.shape
        if len(self.matrix) != nrows or any(len(row) != ncols for row in self.matrix):
            raise SpaceMismatchError(f"matrix does not have shape {nrows}x{ncols}")

    @property
    def chirality(self) -> Chirality:
        return self.domain.chirality

    @property
    def scalars(self):
        return self.domain.domain

    @property
    def shape(self) -> tuple[int, int]:
        if self.domain.chirality is RIGHT:
            return self.codomain.dim, self.domain.dim
        return self.domain.dim, self.codomain.dim

    @classmethod
    def from_rows(cls, domain, rows, chirality=RIGHT, shape=None) -> LinMap:
        """Build a map from a nested list of scalar-like values.

        ``shape`` is only needed when a dimension is zero.
        """
        rows = [[domain(x) for x in row] for row in rows]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        nrows, ncols = shape
        if chirality is RIGHT:
            dom, cod = Space(domain, ncols, RIGHT), Space(domain, nrows, RIGHT)
        else:
            dom, cod = Space(domain, nrows, LEFT), Space(domain, ncols, LEFT)
        return cls(dom, cod, tuple(tuple(r) for r in rows))

    @classmethod
    def from_images(cls, domain: Space, codomain: Space, images) -> LinMap:
        """The map sending the ``j``-th standard basis vector to ``images[j]``."""
        images = [v.coords if isinstance(v, Vec) else tuple(v) for v in images]
        if len(images) != domain.dim:
            raise SpaceMismatchError("need one image per domain basis vector")
        if domain.chirality is RIGHT:
            matrix = tuple(tuple(img[i] for img in images) for i in range(codomain.dim))
        else:
            matrix = tuple(images)
        return cls(domain, codomain, matrix)

    def images(self) -> list[tuple]:
        """Coordinates of the images of the standard basis vectors."""
        m = self.matrix
        if self.domain.chirality is RIGHT:
            return [tuple(row[j] for row in m) for j in range(self.domain.dim)]
        return [tuple(row) for row in m]

    def equations(self) -> list[tuple]:
        """One coefficient row per codomain coordinate, for solving ``A x = w``."""
        m = self.matrix
        if self.domain.chirality is RIGHT:
            return [tuple(row) for row in m]
        return [tuple(row[j] for row in m) for j in range(self.codomain.dim)]

    def __call__(self, x: Vec) -> Vec:
        return apply(self, x)

    def __matmul__(self, other: LinMap) -> LinMap:
        return compose(self, other)

    def __add__(self, other: LinMap) -> LinMap:
        _check_parallel(self, other)
        return LinMap(self.domain, self.codomain, tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)))

    def __sub__(self, other: LinMap) -> LinMap:
        _check_parallel(self, other)
        return LinMap(self.domain, self.codomain, tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)))

    def __neg__(self) -> LinMap:
        return LinMap(self.domain, self.codomain, tuple(tuple(-a for a in r) for r in self.matrix))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def __repr__(self):
        fmt = self.scalars.format
        body = "; ".join(" ".join(fmt(x) for x in row) for row in self.matrix)
        return f"LinMap[{self.chirality}]({self.domain.dim}->{self.codomain.dim}: [{body}])"


def _check_parallel(a: LinMap, b: LinMap):
    if a.domain != b.domain or a.codomain != b.codomain:
        raise SpaceMismatchError("maps have different domain or codomain")


def zero_map(domain: Space, codomain: Space) -> LinMap:
    z = domain.domain.zero()
    nrows, ncols = (codomain.dim, domain.dim) if domain.chirality is RIGHT else (domain.dim, codomain.dim)
    return LinMap(domain, codomain, tuple((z,) * ncols for _ in range(nrows)))


def identity(space: Space) -> LinMap:
    return LinMap.from_images(space, space, space.standard_basis())


def _matmul(a, b, inner, ncols, zero):
    return tuple(
        tuple(_dot(row, [b[k][j] for k in range(inner)], zero) for j in range(ncols))
        for row in a
    )


def _dot(xs, ys, zero):
    acc = zero
    for x, y in zip(xs, ys):
        if x and y:
            acc = acc + x * y
    return acc


def apply(t: LinMap, x: Vec) -> Vec:
    if x.space != t.domain:
        raise SpaceMismatchError(f"vector in {x.space!r} cannot be fed to a map on {t.domain!r}")
    zero = t.scalars.zero()
    if t.chirality is RIGHT:
        coords = tuple(_dot(row, x.coords, zero) for row in t.matrix)
    else:
        m = t.matrix
        coords = tuple(_dot(x.coords, [row[j] for row in m], zero) for j in range(t.codomain.dim))
    return Vec(t.codomain, coords)


def compose(a: LinMap, b: LinMap) -> LinMap:
    """The map ``a o b`` (first ``b``, then ``a``)."""
    if a.domain != b.codomain:
        raise SpaceMismatchError("cannot compose: domain of the outer map is not the codomain of the inner")
    zero = a.scalars.zero()
    if a.chirality is RIGHT:
        matrix = _matmul(a.matrix, b.matrix, b.codomain.dim, b.domain.dim, zero)
    else:
        matrix = _matmul(b.matrix, a.matrix, a.domain.dim, a.codomain.dim, zero)
    return LinMap(b.domain, a.codomain, matrix)


def compose_all(*maps: LinMap) -> LinMap:
    """``maps[0] o maps[1] o ... o maps[-1]``."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def sum_maps(maps, domain: Space | None = None, codomain: Space | None = None) -> LinMap:
    maps = list(maps)
    if not maps:
        if domain is None or codomain is None:
            raise ValueError("sum of no maps needs explicit spaces")
        return zero_map(domain, codomain)
    out = maps[0]
    for m in maps[1:]:
        out = out + m
    return out


def kernel(t: LinMap) -> Subspace:
    dom = t.domain
    side = elim.RIGHT if dom.chirality is RIGHT else elim.LEFT
    basis = elim.nullspace(t.equations(), dom.dim, side, dom.domain)
    return span([Vec(dom, b) for b in basis], dom)


def image(t: LinMap) -> Subspace:
    return span([Vec(t.codomain, c) for c in t.images()], t.codomain)


def rank(t: LinMap) -> int:
    side = elim.RIGHT if t.chirality is RIGHT else elim.LEFT
    return elim.rank(t.images(), t.codomain.dim, side, t.scalars)


def coimage_dim(t: LinMap) -> int:
    return t.domain.dim - kernel(t).dim


def cokernel_dim(t: LinMap) -> int:
    return t.codomain.dim - rank(t)


def is_injective(t: LinMap) -> bool:
    return rank(t) == t.domain.dim


def is_surjective(t: LinMap) -> bool:
    return rank(t) == t.codomain.dim


def is_invertible(t: LinMap) -> bool:
    return t.domain.dim == t.codomain.dim and is_surjective(t)


def preimage(t: LinMap, w: Vec) -> Vec | None:
    """Some ``x`` with ``t(x) = w`` (free coordinates zero), or ``None``."""
    return preimages(t, [w])[0]


def preimages(t: LinMap, ws) -> list:
    ws = list(ws)
    for w in ws:
        if w.space != t.codomain:
            raise SpaceMismatchError("target vector is not in the codomain")
    dom = t.domain
    side = elim.RIGHT if dom.chirality is RIGHT else elim.LEFT
    sols = elim.solve(t.equations(), [w.coords for w in ws], dom.dim, side, dom.domain)
    return [None if s is None else Vec(dom, s) for s in sols]


def from_basis_values(domain: Space, codomain: Space, basis, values) -> LinMap:
    """The unique map sending ``basis[i]`` to ``values[i]``; ``basis`` must be a basis."""
    basis, values = list(basis), list(values)
    n = domain.dim
    if len(basis) != n or len(values) != n:
        raise SpaceMismatchError("need exactly dim(domain) basis vectors and values")
    # Row i (right) / column i (left) of the matrix solves a system whose
    # coefficient rows are the basis vectors. Reducing [basis | values] with the
    # space's own row operations yields [I | solutions] exactly when the basis
    # is one.
    side = elim.RIGHT if domain.chirality is RIGHT else elim.LEFT
    aug = [tuple(b.coords) + tuple(v.coords) for b, v in zip(basis, values)]
    reduced, pivots = elim.rref(aug, n + codomain.dim, side, domain.domain)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise SpaceMismatchError("basis vectors are not a basis of the domain")
    if domain.chirality is RIGHT:
        matrix = tuple(tuple(reduced[k][n + i] for k in range(n)) for i in range(codomain.dim))
    else:
        matrix = tuple(tuple(row[n:]) for row in reduced)
    return LinMap(domain, codomain, matrix)


def evaluate(f: Vec, x: Vec):
    """``f(x)`` for a functional ``f`` on the space of ``x``."""
    if f.space != x.space.dual():
        raise SpaceMismatchError("functional does not act on this space")
    zero = x.space.domain.zero()
    if x.space.chirality is RIGHT:
        return _dot(f.coords, x.coords, zero)
    return _dot(x.coords, f.coords, zero)


def rank_one(x: Vec, f: Vec) -> LinMap:
    """``x (x) f``: ``y -> x f(y)`` on right spaces, ``y -> f(y) x`` on left spaces."""
    W = x.space
    V = f.space.dual()
    if W.chirality is not V.chirality or W.domain != V.domain:
        raise SpaceMismatchError("x and f live over incompatible spaces")
    if W.chirality is RIGHT:
        matrix = tuple(tuple(xi * fj for fj in f.coords) for xi in x.coords)
    else:
        matrix = tuple(tuple(fj * xk for xk in x.coords) for fj in f.coords)
    return LinMap(V, W, matrix)


def adjoint(t: LinMap) -> LinMap:
    """``T' : W' -> V'`` with ``(T' f)(v) = f(T v)``; same matrix, opposite side."""
    return LinMap(t.codomain.dual(), t.domain.dual(), t.matrix)


def natural_embed(x: Vec) -> Vec:
    """``x^`` in ``V''``, with ``x^(f) = f(x)``; the coordinate identity."""
    return Vec(x.space.dual().dual(), x.coords)


def decompose_rank_one(t: LinMap) -> list[tuple[Vec, Vec]]:
    """Pairs ``(x_i, f_i)`` with ``t = sum x_i (x) f_i`` and exactly ``rank(t)`` terms.

    The ``x_i`` are the canonical image basis; ``f_i = t'(e*_{p_i})`` picks the
    pivot coordinate of ``t(y)``.
    """
    im = image(t)
    t_adj = adjoint(t)
    dual_cod = t.codomain.dual()
    return [(x, apply(t_adj, dual_cod.unit(p))) for x, p in zip(im.vectors(), im.pivots)]


# Direct sums ---------------------------------------------------------------


def injection(space: Space, n: int, i: int) -> LinMap:
    """Inclusion of ``space`` as the ``i``-th summand of ``space^n``."""
    big = space.power(n)
    d = space.dim
    return LinMap.from_images(space, big, [big.unit(i * d + k) for k in range(d)])


def projection(space: Space, n: int, i: int) -> LinMap:
    """Projection of ``space^n`` onto its ``i``-th summand."""
    big = space.power(n)
    d = space.dim
    zero = space.zero()
    images = [space.unit(j - i * d) if i * d <= j < (i + 1) * d else zero for j in range(big.dim)]
    return LinMap.from_images(big, space, images)


def stack(maps, codomain: Space) -> LinMap:
    """``x -> (S_1 x, ..., S_n x)`` into ``codomain^n``."""
    n = len(maps)
    return sum_maps([compose(injection(codomain, n, i), m) for i, m in enumerate(maps)])


def juxtapose(maps, domain: Space) -> LinMap:
    """``(y_1, ..., y_n) -> T_1 y_1 + ... + T_n y_n`` from ``domain^n``."""
    n = len(maps)
    return sum_maps([compose(m, projection(domain, n, i)) for i, m in enumerate(maps)])


def block(p: LinMap, src: Space, n_src: int, dst: Space, n_dst: int, i: int, j: int) -> LinMap:
    """The ``(i, j)`` block ``P_ij : src -> dst`` of ``P : src^n_src -> dst^n_dst``."""
    return compose_all(projection(dst, n_dst, i), p, injection(src, n_src, j))
