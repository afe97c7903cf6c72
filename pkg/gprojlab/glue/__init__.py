from .functors import ArrowRecollement, TripleModule, VertexGluingFunctors, extension_into, node_extension

__all__ = ["ArrowRecollement", "TripleModule", "VertexGluingFunctors", "extension_into", "node_extension"]
