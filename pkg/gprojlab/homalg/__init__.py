from .decompose import Decomposition, Summand, certify_indecomposable, decompose, is_local
from .dimension import inj_dim, proj_dim, reverify
from .ext import ext1_cocycle_oracle, ext_dim
from .iso import IsoResult, is_isomorphic, uniserial_signature
from .resolution import ProjectiveCover, ResolutionSegment, projective_cover, resolve, syzygy, syzygy_with_inclusion

__all__ = [
    "Decomposition",
    "IsoResult",
    "ProjectiveCover",
    "ResolutionSegment",
    "Summand",
    "certify_indecomposable",
    "decompose",
    "ext1_cocycle_oracle",
    "ext_dim",
    "inj_dim",
    "is_isomorphic",
    "is_local",
    "proj_dim",
    "projective_cover",
    "resolve",
    "reverify",
    "syzygy",
    "syzygy_with_inclusion",
    "uniserial_signature",
]
