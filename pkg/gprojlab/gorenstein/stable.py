from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from ..core import linalg as la
from ..errors import ShapeMismatch, UnmatchedSyzygy
from ..homalg.iso import is_isomorphic
from ..homalg.resolution import projective_cover, syzygy
from ..rep.hom import hom_basis, hom_dim
from ..rep.representation import Representation
from ..schemas.reports import OrbitPartition, StableHomTable


def projective_factoring_dim(m: Representation, n: Representation) -> int:
    """dim of the maps m -> n factoring through a projective.

    Every such map factors through the projective cover P(n) -> n, so this is
    the rank of Hom(m, P(n)) -> Hom(m, n).
    """
    cover = projective_cover(n)
    through = hom_basis(m, cover.module)
    if through.dim == 0:
        return 0
    composed = [f.then(cover.epi).vector() for f in through.morphisms]
    length = len(composed[0])
    if length == 0:
        return 0
    return la.rank(la.from_columns(composed, length, m.domain))


def stable_hom_dim(m: Representation, n: Representation) -> int:
    if m.algebra != n.algebra:
        raise ShapeMismatch("stable Hom between modules over different algebras")
    return hom_dim(m, n) - projective_factoring_dim(m, n)


def stable_table(modules: Sequence[Representation], labels: Optional[Sequence[str]] = None) -> StableHomTable:
    names = list(labels) if labels is not None else [f"M{i}" for i in range(len(modules))]
    matrix = [[stable_hom_dim(m, n) for n in modules] for m in modules]
    return StableHomTable(labels=names, matrix=matrix)


def omega_stable_orbits(modules: Sequence[Representation], seed: int = 0,
                        labels: Optional[Sequence[str]] = None) -> OrbitPartition:
    """Orbits of Ω on a list of nonprojective indecomposable Gorenstein projectives.

    ``sigma`` records the inverse step (the suspension on the list).
    """
    omega: Dict[int, int] = {}
    for i, m in enumerate(modules):
        om = syzygy(m)
        hit = next((j for j, n in enumerate(modules) if is_isomorphic(om, n, seed).yes), None)
        if hit is None:
            raise UnmatchedSyzygy(i, labels[i] if labels is not None else "")
        omega[i] = hit
    sigma = {j: i for i, j in omega.items()}
    orbits: List[List[int]] = []
    seen = set()
    for start in range(len(modules)):
        if start in seen:
            continue
        orbit = []
        i = start
        while i not in seen:
            seen.add(i)
            orbit.append(i)
            i = omega[i]
        orbits.append(orbit)
    return OrbitPartition(orbits=orbits, omega=omega, sigma=sigma)
