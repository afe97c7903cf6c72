from __future__ import annotations

from typing import List

from ..core import linalg as la
from ..core.algebra import BoundAlgebra
from ..rep.representation import Representation


def algebra_to_text(algebra: BoundAlgebra, name: str = "A") -> str:
    """Canonical raw document; ``parse_algebra`` of the result rebuilds the same algebra."""
    lines = [f"algebra {name};", f"vertices: {' '.join(algebra.vertices)};"]
    if algebra.arrows:
        arrows = ", ".join(f"{a.label}: {a.source} -> {a.target}" for a in algebra.arrows)
        lines.append(f"arrows: {arrows};")
    if algebra.ideal.generators:
        lines.append(f"relations: {', '.join('.'.join(g) for g in algebra.ideal.generators)};")
    if algebra.field.kind == "prime":
        lines.append(f"field: p={algebra.field.p};")
    return "\n".join(lines) + "\n"


def _matrix_text(m: Representation, label: str) -> str:
    fmt = m.algebra.field.format
    rows: List[str] = ["[" + ", ".join(fmt(x) for x in row) + "]" for row in la.rows(m.maps[label])]
    return "[" + ", ".join(rows) + "]"


def module_to_text(m: Representation, name: str = "M") -> str:
    lines = [f"module {name};"]
    dims = " ".join(f"{v}={m.dims[v]}" for v in m.algebra.vertices)
    lines.append(f"dims: {dims};")
    for a in m.algebra.arrows:
        if m.dims[a.source] and m.dims[a.target]:
            lines.append(f"map {a.label} = {_matrix_text(m, a.label)};")
    return "\n".join(lines) + "\n"
