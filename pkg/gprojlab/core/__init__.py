from .algebra import BoundAlgebra, build_algebra, is_admissible, make_ideal, make_quiver, opposite_algebra
from .constructors import nakayama_cyclic, nakayama_linear, single_vertex
from .field import BaseField
from .gluing import Component, Embedding, GluedAlgebra, connect_by_arrow, glue_at_vertex
from .paths import Path

__all__ = [
    "BaseField", "BoundAlgebra", "Component", "Embedding", "GluedAlgebra", "Path",
    "build_algebra", "connect_by_arrow", "glue_at_vertex", "is_admissible", "make_ideal",
    "make_quiver", "nakayama_cyclic", "nakayama_linear", "opposite_algebra", "single_vertex",
]
