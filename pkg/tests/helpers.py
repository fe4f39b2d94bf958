"""Random instance builders shared by the test modules.

Each builder returns a positive instance (built as a product, so a factor
exists) about half of the time and an unconstrained one otherwise.
"""

import random

from divlin import generate
from divlin.factor import (
    factor_image_equal,
    factor_image_multi,
    factor_image_subset,
    factor_kernel_equal,
    factor_kernel_multi,
    factor_kernel_subset,
    factor_rank,
    factor_rank_multi,
    image_inclusion,
    kernel_inclusion,
)
from divlin.linmap import compose, image, kernel, rank, sum_maps
from divlin.space import LEFT, RIGHT, Space

MAX_DIM = 4


def spaces(domain, rng, count, max_dim=MAX_DIM, chirality=None):
    chirality = chirality or rng.choice((RIGHT, LEFT))
    return [Space(domain, rng.randint(0, max_dim), chirality) for _ in range(count)]


def rand_map(V, W, rng, height=3):
    return generate.sparse(V, W, rng, height)


def kernel_pair(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, Z = spaces(domain, rng, 3, max_dim)
    s = rand_map(V, W, rng, height)
    if rng.random() < 0.5:
        return s, compose(rand_map(W, Z, rng, height), s)
    return s, rand_map(V, Z, rng, height)


def kernel_equal_pair(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, Z = spaces(domain, rng, 3, max_dim)
    s = rand_map(V, W, rng, height)
    p = generate.linmap(W, Z, rng, height)
    return s, compose(p, s)


def kernel_family(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, Z = spaces(domain, rng, 3, max_dim)
    gens = [rand_map(V, W, rng, height) for _ in range(rng.randint(1, 3))]
    if rng.random() < 0.5:
        t = sum_maps([compose(rand_map(W, Z, rng, height), g) for g in gens], V, Z)
    else:
        t = rand_map(V, Z, rng, height)
    return gens, t


def image_pair(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, Z = spaces(domain, rng, 3, max_dim)
    t = rand_map(Z, W, rng, height)
    if rng.random() < 0.5:
        return compose(t, rand_map(V, Z, rng, height)), t
    return rand_map(V, W, rng, height), t


def image_equal_pair(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, Z = spaces(domain, rng, 3, max_dim)
    t = rand_map(Z, W, rng, height)
    return compose(t, generate.linmap(V, Z, rng, height)), t


def image_family(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, Z = spaces(domain, rng, 3, max_dim)
    gens = [rand_map(Z, W, rng, height) for _ in range(rng.randint(1, 3))]
    if rng.random() < 0.5:
        s = sum_maps([compose(g, rand_map(V, Z, rng, height)) for g in gens], V, W)
    else:
        s = rand_map(V, W, rng, height)
    return s, gens


def rank_pair(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, X, Y = spaces(domain, rng, 4, max_dim)
    return rand_map(V, W, rng, height), rand_map(X, Y, rng, height)


def rank_family(domain, rng, height=3, max_dim=MAX_DIM):
    V, W, X, Y = spaces(domain, rng, 4, max_dim)
    gens = [rand_map(X, Y, rng, height) for _ in range(rng.randint(1, 3))]
    return rand_map(V, W, rng, height), gens


def _kernels_equal(s, t):
    return kernel(s) == kernel(t)


# (name, builder, solver, predicate): the predicate decides existence independently
# of the witness construction.
OPERATIONS = [
    ("factor_kernel_subset", kernel_pair, lambda a: factor_kernel_subset(*a),
     lambda a: kernel_inclusion([a[0]], a[1])),
    ("factor_kernel_equal", kernel_equal_pair, lambda a: factor_kernel_equal(*a),
     lambda a: _kernels_equal(*a)),
    ("factor_kernel_multi", kernel_family, lambda a: factor_kernel_multi(*a),
     lambda a: kernel_inclusion(*a)),
    ("factor_image_subset", image_pair, lambda a: factor_image_subset(*a),
     lambda a: image_inclusion(a[0], [a[1]])),
    ("factor_image_equal", image_equal_pair, lambda a: factor_image_equal(*a),
     lambda a: image(a[0]) == image(a[1])),
    ("factor_image_multi", image_family, lambda a: factor_image_multi(*a),
     lambda a: image_inclusion(*a)),
    ("factor_rank", rank_pair, lambda a: factor_rank(*a),
     lambda a: rank(a[0]) <= rank(a[1])),
    ("factor_rank_multi", rank_family, lambda a: factor_rank_multi(*a),
     lambda a: rank(a[0]) <= sum(rank(g) for g in a[1])),
]


def soundness_run(domain, count, seed, height=3, max_dim=MAX_DIM):
    """Failures of ``count`` instances per operation: ``[(op, detail), ...]``.

    A returned witness must re-substitute exactly and satisfy its claim; a
    refusal must agree with the independent existence predicate.
    """
    failures = []
    for name, build, solve, exists in OPERATIONS:
        rng = random.Random(f"{seed}-{name}")
        for _ in range(count):
            args = build(domain, rng, height, max_dim)
            res = solve(args)
            if res:
                if not res.verify():
                    failures.append((name, "witness does not re-substitute"))
            elif exists(args):
                failures.append((name, f"refused a solvable instance: {res.reason}"))
    return failures
