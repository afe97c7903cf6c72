from .hom import HomBasis, hom_basis, hom_dim
from .ops import (
    cokernel,
    direct_sum,
    dual,
    generated_submodule,
    image,
    injective,
    is_projective,
    kernel,
    projective,
    quotient,
    radical,
    regular_module,
    simple,
    socle,
    submodule,
    top,
    truncated_projective,
)
from .representation import Morphism, Representation, identity, validate_rep

__all__ = [
    "HomBasis", "Morphism", "Representation", "cokernel", "direct_sum", "dual",
    "generated_submodule", "hom_basis", "hom_dim", "identity", "image", "injective",
    "is_projective", "kernel", "projective", "quotient", "radical", "regular_module",
    "simple", "socle", "submodule", "top", "truncated_projective", "validate_rep",
]
