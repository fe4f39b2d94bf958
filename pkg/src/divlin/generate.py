"""Random instances for tests, benchmarks and the acceptance run."""

from __future__ import annotations

import random

from .linmap import LinMap, compose
from .scalar import GF, HQ, QQ, ScalarDomain
from .space import LEFT, RIGHT, Space, Vec

DOMAINS = {
    "gf2": GF(2),
    "gf3": GF(3),
    "gf5": GF(5),
    "rat": QQ,
    "quat": HQ,
}


def scalar(domain: ScalarDomain, rng: random.Random, height: int = 3):
    return domain.random(rng, height)


def vector(space: Space, rng: random.Random, height: int = 3) -> Vec:
    return Vec(space, tuple(space.domain.random(rng, height) for _ in range(space.dim)))


def space(domain: ScalarDomain, rng: random.Random, max_dim: int = 4, chirality=None, min_dim: int = 0) -> Space:
    if chirality is None:
        chirality = rng.choice((RIGHT, LEFT))
    return Space(domain, rng.randint(min_dim, max_dim), chirality)


def linmap(domain: Space, codomain: Space, rng: random.Random, height: int = 3) -> LinMap:
    nrows, ncols = (codomain.dim, domain.dim) if domain.chirality is RIGHT else (domain.dim, codomain.dim)
    D = domain.domain
    return LinMap(domain, codomain, tuple(
        tuple(D.random(rng, height) for _ in range(ncols)) for _ in range(nrows)))


def low_rank(domain: Space, codomain: Space, r: int, rng: random.Random, height: int = 3) -> LinMap:
    """A map of rank at most ``r``: a product through ``D^r``."""
    mid = Space(domain.domain, r, domain.chirality)
    return compose(linmap(mid, codomain, rng, height), linmap(domain, mid, rng, height))


def sparse(domain: Space, codomain: Space, rng: random.Random, height: int = 3) -> LinMap:
    """A random map of random rank, so that degenerate cases come up often."""
    r = rng.randint(0, min(domain.dim, codomain.dim))
    return low_rank(domain, codomain, r, rng, height)
