from __future__ import annotations

from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..core import linalg as la
from ..core.algebra import BoundAlgebra
from ..core.paths import Path
from ..errors import RelationViolation, ShapeMismatch
from ..core.linalg import Matrix


class Representation:
    """One vector space per vertex and one matrix per arrow.

    The matrix of an arrow a: s -> t has shape (dim t, dim s). Treated as
    immutable once built.
    """

    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra: BoundAlgebra, dims: Mapping[str, int], maps: Optional[Mapping[str, Matrix]] = None) -> None:
        K = algebra.domain
        self.algebra = algebra
        self.dims: Dict[str, int] = {}
        for v in algebra.vertices:
            d = int(dims.get(v, 0))
            if d < 0:
                raise ShapeMismatch(f"negative dimension at vertex {v}")
            self.dims[v] = d
        unknown = set(dims) - set(algebra.vertices)
        if unknown:
            raise ShapeMismatch(f"unknown vertices {sorted(unknown)}")
        maps = dict(maps or {})
        unknown_arrows = set(maps) - {a.label for a in algebra.arrows}
        if unknown_arrows:
            raise ShapeMismatch(f"unknown arrows {sorted(unknown_arrows)}")
        self.maps: Dict[str, Matrix] = {}
        for a in algebra.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.get(a.label)
            if m is None:
                m = la.zeros(shape[0], shape[1], K)
            if tuple(m.shape) != shape:
                raise ShapeMismatch(f"arrow {a.label} needs a {shape[0]}x{shape[1]} matrix, got {m.shape[0]}x{m.shape[1]}")
            self.maps[a.label] = m

    def __repr__(self) -> str:
        return f"Representation(dims={self.dimension_vector()})"

    @property
    def domain(self):
        return self.algebra.domain

    def dim(self, v: str) -> int:
        return self.dims[v]

    def dimension_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def action(self, label: str) -> Matrix:
        return self.maps[label]

    def path_action(self, path: Path) -> Matrix:
        out = la.eye(self.dims[path.source], self.domain)
        for label in path.arrows:
            out = la.mul(self.maps[label], out)
        return out

    def word_action(self, arrows: Tuple[str, ...]) -> Matrix:
        first = self.algebra.arrow(arrows[0])
        out = la.eye(self.dims[first.source], self.domain)
        for label in arrows:
            out = la.mul(self.maps[label], out)
        return out

    def same_as(self, other: "Representation") -> bool:
        if self.algebra != other.algebra or self.dims != other.dims:
            return False
        return all(la.equal(self.maps[a], other.maps[a]) for a in self.maps)

    def to_dict(self) -> Dict[str, Any]:
        f = self.algebra.field
        return {
            "dims": dict(self.dims),
            "maps": {a: [[f.format(x) for x in r] for r in la.rows(m)] for a, m in self.maps.items()},
        }


def validate_rep(r: Representation) -> Optional[Tuple[str, ...]]:
    """First ideal generator acting nonzero on ``r``, or None when ``r`` is a module."""
    for g in r.algebra.ideal.generators:
        if not la.is_zero(r.word_action(g)):
            return g
    return None


def ensure_valid(r: Representation) -> Representation:
    bad = validate_rep(r)
    if bad is not None:
        raise RelationViolation(bad)
    return r


class Morphism:
    __slots__ = ("source", "target", "maps")

    def __init__(self, source: Representation, target: Representation, maps: Mapping[str, Matrix]) -> None:
        if source.algebra != target.algebra:
            raise ShapeMismatch("morphism between modules over different algebras")
        self.source = source
        self.target = target
        K = source.domain
        self.maps: Dict[str, Matrix] = {}
        for v in source.algebra.vertices:
            shape = (target.dims[v], source.dims[v])
            m = maps.get(v)
            if m is None:
                m = la.zeros(shape[0], shape[1], K)
            if tuple(m.shape) != shape:
                raise ShapeMismatch(f"vertex {v} needs a {shape[0]}x{shape[1]} matrix")
            self.maps[v] = m

    def __repr__(self) -> str:
        return f"Morphism({self.source.dimension_vector()} -> {self.target.dimension_vector()})"

    @property
    def algebra(self) -> BoundAlgebra:
        return self.source.algebra

    def commutes(self) -> bool:
        for a in self.algebra.arrows:
            left = la.mul(self.target.maps[a.label], self.maps[a.source])
            right = la.mul(self.maps[a.target], self.source.maps[a.label])
            if not la.equal(left, right):
                return False
        return True

    def failing_square(self) -> Optional[str]:
        for a in self.algebra.arrows:
            left = la.mul(self.target.maps[a.label], self.maps[a.source])
            right = la.mul(self.maps[a.target], self.source.maps[a.label])
            if not la.equal(left, right):
                return a.label
        return None

    def then(self, other: "Morphism") -> "Morphism":
        """``other ∘ self``."""
        return Morphism(self.source, other.target, {v: la.mul(other.maps[v], self.maps[v]) for v in self.maps})

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, {v: la.add(self.maps[v], other.maps[v]) for v in self.maps})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, {v: la.sub(self.maps[v], other.maps[v]) for v in self.maps})

    def scaled(self, c: Any) -> "Morphism":
        return Morphism(self.source, self.target, {v: la.scale(m, c) for v, m in self.maps.items()})

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.maps.values())

    def is_injective(self) -> bool:
        return all(la.rank(m) == m.shape[1] for m in self.maps.values())

    def is_surjective(self) -> bool:
        return all(la.rank(m) == m.shape[0] for m in self.maps.values())

    def is_iso(self) -> bool:
        return all(la.is_invertible(m) for m in self.maps.values())

    def inverse(self) -> "Morphism":
        return Morphism(self.target, self.source, {v: la.inverse(m) for v, m in self.maps.items()})

    def vector(self) -> List[Any]:
        out: List[Any] = []
        for v in self.algebra.vertices:
            out.extend(la.flatten(self.maps[v]))
        return out

    def to_dict(self) -> Dict[str, Any]:
        f = self.algebra.field
        return {v: [[f.format(x) for x in r] for r in la.rows(m)] for v, m in self.maps.items()}


def identity(m: Representation) -> Morphism:
    return Morphism(m, m, {v: la.eye(d, m.domain) for v, d in m.dims.items()})


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(m, n, {})


def morphism_from_vector(m: Representation, n: Representation, values: List[Any]) -> Morphism:
    K = m.domain
    maps: Dict[str, Matrix] = {}
    pos = 0
    for v in m.algebra.vertices:
        r, c = n.dims[v], m.dims[v]
        maps[v] = la.reshape(values[pos:pos + r * c], r, c, K)
        pos += r * c
    return Morphism(m, n, maps)
