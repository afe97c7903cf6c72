from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..core import linalg as la
from ..core.paths import Path
from ..rep.ops import direct_sum, kernel, projective, projective_basis, radical
from ..rep.representation import Morphism, Representation


@dataclass(frozen=True)
class ProjectiveCover:
    module: Representation
    epi: Morphism
    # summand vertices, in the order of the direct sum
    tops: Tuple[str, ...]
    # basis of module at each vertex as (summand index, path from that summand's top)
    labels: Dict[str, List[Tuple[int, Path]]]

    def generator_index(self, summand: int) -> int:
        v = self.tops[summand]
        return self.labels[v].index((summand, Path(v, v, ())))


def projective_cover(m: Representation) -> ProjectiveCover:
    algebra = m.algebra
    _, rad_inclusion = radical(m)
    tops: List[str] = []
    generators: List = []
    for v in algebra.vertices:
        complement = la.extend_to_basis(rad_inclusion.maps[v])
        for col in la.columns(complement):
            tops.append(v)
            generators.append(la.from_columns([col], m.dims[v], m.domain))
    summands = [projective(algebra, v) for v in tops]
    cover = direct_sum(summands, algebra).module
    labels: Dict[str, List[Tuple[int, Path]]] = {u: [] for u in algebra.vertices}
    for i, v in enumerate(tops):
        for u, paths in projective_basis(algebra, v).items():
            labels[u].extend((i, p) for p in paths)
    K = m.domain
    maps = {}
    for u in algebra.vertices:
        cols = [la.mul(m.path_action(p), generators[i]) for i, p in labels[u]]
        maps[u] = la.hstack(cols, m.dims[u], K) if cols else la.zeros(m.dims[u], 0, K)
    return ProjectiveCover(cover, Morphism(cover, m, maps), tuple(tops), labels)


def syzygy(m: Representation) -> Representation:
    return syzygy_with_inclusion(m)[0]


def syzygy_with_inclusion(m: Representation) -> Tuple[Representation, Morphism, ProjectiveCover]:
    cover = projective_cover(m)
    omega, inclusion = kernel(cover.epi)
    return omega, inclusion, cover


@dataclass
class ResolutionSegment:
    """P_n -> ... -> P_1 -> P_0 -> module, built lazily up to a requested length."""

    module: Representation
    covers: List[ProjectiveCover] = field(default_factory=list)
    syzygies: List[Representation] = field(default_factory=list)
    inclusions: List[Morphism] = field(default_factory=list)
    minimal: bool = True

    def __post_init__(self) -> None:
        if not self.syzygies:
            self.syzygies.append(self.module)

    @property
    def terminated(self) -> bool:
        return self.syzygies[-1].is_zero()

    def extend_to(self, length: int) -> "ResolutionSegment":
        """Make sure P_0 .. P_length are available."""
        while len(self.covers) <= length:
            current = self.syzygies[len(self.covers)]
            omega, inclusion, cover = syzygy_with_inclusion(current)
            self.covers.append(cover)
            self.syzygies.append(omega)
            self.inclusions.append(inclusion)
        return self

    def projective(self, k: int) -> ProjectiveCover:
        self.extend_to(k)
        return self.covers[k]

    def differential(self, k: int) -> Morphism:
        """d_k : P_k -> P_{k-1} for k >= 1."""
        self.extend_to(k)
        return self.covers[k].epi.then(self.inclusions[k - 1])

    def check_exact(self, upto: int) -> bool:
        self.extend_to(upto)
        for k in range(1, upto + 1):
            if not self.differential(k).then(self.covers[k - 1].epi).is_zero():
                return False
            if k >= 2 and not self.differential(k).then(self.differential(k - 1)).is_zero():
                return False
        return True


def resolve(m: Representation, length: int) -> ResolutionSegment:
    return ResolutionSegment(m).extend_to(length)
