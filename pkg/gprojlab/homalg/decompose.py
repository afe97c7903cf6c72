"""Krull-Schmidt decomposition over the rationals.

Indecomposability is certified by the trace form of End(M): its radical is
the Jacobson radical in characteristic 0, so End/rad of dimension one means a
local endomorphism ring. Splitting uses Fitting decompositions of
endomorphisms whose characteristic polynomial has two coprime factors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, List, Literal, Optional, Tuple

from sympy import Poly, symbols

from ..core import linalg as la
from ..errors import SplitFailure
from ..rep.hom import HomBasis, hom_basis
from ..rep.ops import direct_sum, radical, socle_vector, submodule, top_vector
from ..rep.representation import Morphism, Representation, identity
from .iso import is_isomorphic

_t = symbols("t")
RANDOM_CANDIDATES = 24


@dataclass(frozen=True)
class Summand:
    module: Representation
    multiplicity: int


@dataclass
class Decomposition:
    module: Representation
    status: Literal["complete", "inconclusive"]
    pieces: List[Representation] = field(default_factory=list)
    inclusions: List[Morphism] = field(default_factory=list)
    summands: List[Summand] = field(default_factory=list)
    reason: str = ""

    def multiplicities(self) -> List[Tuple[Tuple[int, ...], int]]:
        return [(s.module.dimension_vector(), s.multiplicity) for s in self.summands]


def _structure_radical_dim(basis: HomBasis) -> int:
    """dim of the radical of T(x, y) = tr(L_x L_y) on End(M)."""
    r = basis.dim
    K = basis.source.domain
    E = basis.matrix()
    products = []
    for i in range(r):
        for j in range(r):
            products.append(basis.morphisms[j].then(basis.morphisms[i]).vector())
    n = E.shape[0]
    coords = la.rows(la.solve(E, la.from_columns(products, n, K)))
    # c[i][j][k]: coefficient of e_k in e_i e_j
    def c(i: int, j: int, k: int):
        return coords[k][i * r + j]
    traces = [sum((c(k, j, j) for j in range(r)), K.zero) for k in range(r)]
    gram = [[sum((c(i, j, k) * traces[k] for k in range(r)), K.zero) for j in range(r)] for i in range(r)]
    return r - la.rank(la.from_rows(gram, r, r, K))


def _charpoly_product(f: Morphism) -> Poly:
    K = f.source.domain
    total = Poly(1, _t, domain=K)
    for v, m in f.maps.items():
        if m.shape[0] == 0:
            continue
        coeffs = [K.to_sympy(c) for c in m.charpoly()]
        total = total * Poly(coeffs, _t, domain=K)
    return total


def _evaluate(poly: Poly, m: la.Matrix) -> la.Matrix:
    K = m.domain
    n = m.shape[0]
    out = la.zeros(n, n, K)
    ident = la.eye(n, K)
    for c in poly.all_coeffs():
        out = la.add(la.mul(out, m), la.scale(ident, K.from_sympy(c)))
    return out


def _fitting_split(f: Morphism) -> Optional[List[Tuple[Representation, Morphism]]]:
    _, factors = _charpoly_product(f).factor_list()
    if len(factors) < 2:
        return None
    m = f.source
    pieces = []
    for poly, _mult in factors:
        spaces = {}
        for v, x in f.maps.items():
            d = x.shape[0]
            if d == 0:
                spaces[v] = la.zeros(0, 0, m.domain)
                continue
            spaces[v] = la.nullspace(la.power(_evaluate(poly, x), d))
        piece, inclusion = submodule(m, spaces)
        if not piece.is_zero():
            pieces.append((piece, inclusion))
    return pieces if len(pieces) >= 2 else None


def _candidates(basis: HomBasis, rng: random.Random):
    K = basis.source.domain
    for f in basis.morphisms:
        yield f
    for i in range(basis.dim - 1):
        yield basis.morphisms[i] + basis.morphisms[i + 1]
    for _ in range(RANDOM_CANDIDATES):
        yield basis.combination([K.convert(rng.randint(-3, 3)) for _ in range(basis.dim)])


def is_local(m: Representation) -> bool:
    """One-dimensional top or socle: the module is local or colocal, hence indecomposable."""
    return sum(top_vector(m)) == 1 or sum(socle_vector(m)) == 1


def certify_indecomposable(m: Representation) -> Optional[bool]:
    """True when certified indecomposable, False when End/rad is bigger, None if undecided."""
    if m.is_zero():
        return False
    if is_local(m):
        return True
    if m.algebra.field.characteristic != 0:
        return None
    basis = hom_basis(m, m)
    if basis.dim == 1:
        return True
    return basis.dim - _structure_radical_dim(basis) == 1


class _Undecided(Exception):
    pass


def _split(m: Representation, rng: random.Random) -> List[Tuple[Representation, Morphism]]:
    """Indecomposable pieces with inclusions into m; raises _Undecided when undecidable here."""
    if m.is_zero():
        return []
    rad, _ = radical(m)
    if rad.is_zero():
        # semisimple: one simple per basis vector
        out = []
        for v in m.algebra.vertices:
            for i in range(m.dims[v]):
                spaces = {u: la.zeros(m.dims[u], 0, m.domain) for u in m.algebra.vertices}
                spaces[v] = la.unit_column(m.dims[v], i, m.domain)
                out.append(submodule(m, spaces))
        return out
    verdict = certify_indecomposable(m)
    if verdict is True:
        return [(m, identity(m))]
    if verdict is None:
        raise _Undecided("trace-form radical needs characteristic 0")
    basis = hom_basis(m, m)
    for f in _candidates(basis, rng):
        split = _fitting_split(f)
        if split is None:
            continue
        out = []
        for piece, inclusion in split:
            sub = _split(piece, rng)
            out.extend((p, i.then(inclusion)) for p, i in sub)
        return out
    # End/rad may be a division algebra of dimension > 1 over the field
    raise _Undecided(f"End/rad has dimension > 1 but none of the candidate endomorphisms of {m!r} splits it")


def decompose(m: Representation, seed: int = 0) -> Decomposition:
    rng = random.Random(seed)
    try:
        split = _split(m, rng)
    except _Undecided as exc:
        return Decomposition(m, "inconclusive", reason=str(exc))
    pieces = [p for p, _ in split]
    inclusions = [i for _, i in split]
    if pieces:
        assembled = direct_sum(pieces).module
        reassembly = Morphism(assembled, m, {
            v: la.hstack([i.maps[v] for i in inclusions], m.dims[v], m.domain) for v in m.algebra.vertices
        })
        if not (reassembly.commutes() and reassembly.is_iso()):
            raise SplitFailure("pieces do not reassemble to the module", reassembly)
    summands: List[Summand] = []
    for piece in pieces:
        for idx, s in enumerate(summands):
            if is_isomorphic(s.module, piece, seed).yes:
                summands[idx] = Summand(s.module, s.multiplicity + 1)
                break
        else:
            summands.append(Summand(piece, 1))
    return Decomposition(m, "complete", pieces, inclusions, summands)
