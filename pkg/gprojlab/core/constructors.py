from __future__ import annotations

from typing import Optional, Sequence, Tuple

from ..errors import QuiverError
from .algebra import BoundAlgebra, build_algebra, make_ideal, make_quiver
from .field import BaseField


def _linear_path(start: int, length: int) -> Tuple[str, ...]:
    # arrow a{i} : i+1 -> i, so walking down from ``start`` uses a{start-1}, a{start-2}, ...
    return tuple(f"a{start - 1 - k}" for k in range(length))


def nakayama_linear(
    n: int,
    relations: Sequence[Tuple[int, int]] = (),
    *,
    uniform_length: Optional[int] = None,
    field: Optional[BaseField] = None,
) -> BoundAlgebra:
    """Linear quiver 1 <- 2 <- ... <- n.

    ``relations`` lists zero paths as (start vertex, length); ``uniform_length``
    kills every path of that length.
    """
    if n < 1:
        raise QuiverError("linear Nakayama quiver needs n >= 1")
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i + 1), str(i)) for i in range(1, n)]
    zero_paths = []
    for start, length in relations:
        if length < 2:
            raise QuiverError(f"relation at {start} has length {length} < 2")
        if not (1 <= start <= n) or start - length < 1:
            raise QuiverError(f"relation of length {length} from vertex {start} leaves the quiver")
        zero_paths.append(_linear_path(start, length))
    if uniform_length is not None:
        if uniform_length < 2:
            raise QuiverError("uniform relation length must be >= 2")
        for start in range(uniform_length + 1, n + 1):
            zero_paths.append(_linear_path(start, uniform_length))
    return build_algebra(make_quiver(vertices, arrows), make_ideal(zero_paths), field)


def nakayama_cyclic(n: int, uniform_length: int, *, field: Optional[BaseField] = None) -> BoundAlgebra:
    """Oriented cycle with arrows a{i}: i+1 -> i and a{n}: 1 -> n, all length-l paths zero."""
    if n < 1:
        raise QuiverError("cyclic Nakayama quiver needs n >= 1")
    if uniform_length < 2:
        raise QuiverError("cyclic Nakayama relations need length >= 2 for admissibility")
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i + 1), str(i)) for i in range(1, n)]
    arrows.append((f"a{n}", "1", str(n)))

    def arrow_from(v: int) -> str:
        return f"a{v - 1}" if v > 1 else f"a{n}"

    def next_vertex(v: int) -> int:
        return v - 1 if v > 1 else n

    zero_paths = []
    for start in range(1, n + 1):
        v, path = start, []
        for _ in range(uniform_length):
            path.append(arrow_from(v))
            v = next_vertex(v)
        zero_paths.append(tuple(path))
    return build_algebra(make_quiver(vertices, arrows), make_ideal(zero_paths), field)


def single_vertex(field: Optional[BaseField] = None, label: str = "1") -> BoundAlgebra:
    return build_algebra(make_quiver([label], []), make_ideal([]), field)
