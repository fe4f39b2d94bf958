"""Exact linear algebra over division rings: GF(p), Q and the rational quaternions.

Maps between finite-dimensional right or left vector spaces, their kernels,
images and adjoints, witness-producing factorizations, and membership in
submodules of ``L(V, W)``.
"""

from .duality import check_image_perp, check_kernel_perp, map_with_adjoint_image, perp, quotient_dual_iso
from .elim import COMPILED
from .errors import (
    DependentInputError,
    DimensionError,
    DivlinError,
    DomainMismatchError,
    ParseError,
    SpaceMismatchError,
)
from .factor import (
    Factorization,
    NoFactor,
    factor_image_equal,
    factor_image_multi,
    factor_image_subset,
    factor_kernel_equal,
    factor_kernel_multi,
    factor_kernel_subset,
    factor_rank,
    factor_rank_multi,
)
from .linmap import (
    LinMap,
    adjoint,
    apply,
    compose,
    evaluate,
    identity,
    image,
    kernel,
    natural_embed,
    rank,
    rank_one,
    zero_map,
)
from .scalar import GF, HQ, QQ, I, J, K, GFElement, PrimeField, Quaternion
from .space import LEFT, RIGHT, Chirality, Space, Subspace, Vec, extend_basis, intersect, span
from .submodule import (
    NotMember,
    NotPrincipalHere,
    Side,
    SubmoduleGens,
    conjecture_probe,
    idempotent_generators,
    member,
    member_left,
    member_right,
    member_two_sided,
    principal_generator,
    saturate,
)
from .textio import format_matrix, parse_document, parse_matrix

__version__ = "0.1.0"
