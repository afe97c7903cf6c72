from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from ..core import linalg as la
from ..errors import ShapeMismatch
from .representation import Morphism, Representation, morphism_from_vector


@dataclass(frozen=True)
class HomBasis:
    source: Representation
    target: Representation
    morphisms: Tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.morphisms)

    def combination(self, coefficients: Sequence[Any]) -> Morphism:
        K = self.source.domain
        values = [K.zero] * _unknowns(self.source, self.target)
        for c, f in zip(coefficients, self.morphisms):
            if K.is_zero(c):
                continue
            for i, x in enumerate(f.vector()):
                values[i] += c * x
        return morphism_from_vector(self.source, self.target, values)

    def matrix(self) -> la.Matrix:
        """Columns are the flattened basis morphisms."""
        n = _unknowns(self.source, self.target)
        return la.from_columns([f.vector() for f in self.morphisms], n, self.source.domain)

    def coordinates(self, f: Morphism) -> List[Any]:
        n = _unknowns(self.source, self.target)
        K = self.source.domain
        x = la.solve(self.matrix(), la.from_columns([f.vector()], n, K))
        return la.column(x, 0) if self.dim else []


def _unknowns(m: Representation, n: Representation) -> int:
    return sum(n.dims[v] * m.dims[v] for v in m.algebra.vertices)


def commuting_system(m: Representation, n: Representation) -> la.Matrix:
    """Linear system whose kernel is Hom(m, n).

    Unknowns are the entries of each f_v, row-major, vertices in algebra order.
    For every arrow a: s -> t the equations read N_a f_s - f_t M_a = 0.
    """
    algebra = m.algebra
    K = m.domain
    offset: Dict[str, int] = {}
    pos = 0
    for v in algebra.vertices:
        offset[v] = pos
        pos += n.dims[v] * m.dims[v]
    total = pos
    equations: List[List[Any]] = []
    for a in algebra.arrows:
        s, t = a.source, a.target
        Na, Ma = la.rows(n.maps[a.label]), la.rows(m.maps[a.label])
        ns, ms, nt, mt = n.dims[s], m.dims[s], n.dims[t], m.dims[t]
        for i in range(nt):
            for j in range(ms):
                row = [K.zero] * total
                # (N_a f_s)[i, j] = sum_k N_a[i, k] f_s[k, j]
                for k in range(ns):
                    c = Na[i][k]
                    if not K.is_zero(c):
                        row[offset[s] + k * ms + j] += c
                # (f_t M_a)[i, j] = sum_k f_t[i, k] M_a[k, j]
                for k in range(mt):
                    c = Ma[k][j]
                    if not K.is_zero(c):
                        row[offset[t] + i * mt + k] -= c
                equations.append(row)
    return la.from_rows(equations, len(equations), total, K)


def hom_basis(m: Representation, n: Representation) -> HomBasis:
    if m.algebra != n.algebra:
        raise ShapeMismatch("Hom between modules over different algebras")
    system = commuting_system(m, n)
    kernel = la.nullspace(system)
    morphisms = tuple(morphism_from_vector(m, n, col) for col in la.columns(kernel))
    return HomBasis(m, n, morphisms)


def hom_dim(m: Representation, n: Representation) -> int:
    system = commuting_system(m, n)
    return system.shape[1] - la.rank(system)
