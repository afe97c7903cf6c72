"""Constructions in the category of representations.

Every construction returns the new module together with its canonical map so
callers can compose them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..core import linalg as la
from ..core.algebra import BoundAlgebra
from ..core.linalg import Matrix
from ..core.paths import Path
from .representation import Morphism, Representation


@dataclass(frozen=True)
class DirectSum:
    module: Representation
    injections: Tuple[Morphism, ...]
    projections: Tuple[Morphism, ...]


def submodule(m: Representation, spaces: Mapping[str, Matrix]) -> Tuple[Representation, Morphism]:
    """Submodule spanned per vertex by the (independent) columns of ``spaces``."""
    K = m.domain
    bases = {v: spaces.get(v, la.zeros(m.dims[v], 0, K)) for v in m.algebra.vertices}
    dims = {v: b.shape[1] for v, b in bases.items()}
    maps = {}
    for a in m.algebra.arrows:
        image = la.mul(m.maps[a.label], bases[a.source])
        maps[a.label] = la.solve(bases[a.target], image)
    sub = Representation(m.algebra, dims, maps)
    return sub, Morphism(sub, m, bases)


def span_submodule(m: Representation, spaces: Mapping[str, Matrix]) -> Tuple[Representation, Morphism]:
    """Like ``submodule`` but the spanning columns may be dependent."""
    return submodule(m, {v: la.image_basis(s) for v, s in spaces.items()})


def generated_submodule(m: Representation, generators: Sequence[Tuple[str, Matrix]]) -> Tuple[Representation, Morphism]:
    """Smallest submodule containing the given (vertex, column vector) elements."""
    K = m.domain
    cols: Dict[str, List[Matrix]] = {v: [] for v in m.algebra.vertices}
    for v, x in generators:
        for p in m.algebra.paths_from(v):
            cols[p.target].append(la.mul(m.path_action(p), x))
    spaces = {v: la.hstack(cs, m.dims[v], K) if cs else la.zeros(m.dims[v], 0, K) for v, cs in cols.items()}
    return span_submodule(m, spaces)


def quotient(m: Representation, spaces: Mapping[str, Matrix]) -> Tuple[Representation, Morphism]:
    """Quotient by the submodule spanned by independent columns of ``spaces``."""
    K = m.domain
    sections: Dict[str, Matrix] = {}
    projections: Dict[str, Matrix] = {}
    for v in m.algebra.vertices:
        d = m.dims[v]
        b = spaces.get(v, la.zeros(d, 0, K))
        complement = la.extend_to_basis(b)
        full_inverse = la.inverse(la.hstack([b, complement], d, K))
        r = b.shape[1]
        projections[v] = la.select_rows(full_inverse, range(r, d))
        sections[v] = complement
    dims = {v: sections[v].shape[1] for v in m.algebra.vertices}
    maps = {
        a.label: la.chain(projections[a.target], m.maps[a.label], sections[a.source])
        for a in m.algebra.arrows
    }
    q = Representation(m.algebra, dims, maps)
    return q, Morphism(m, q, projections)


def kernel(f: Morphism) -> Tuple[Representation, Morphism]:
    return submodule(f.source, {v: la.nullspace(f.maps[v]) for v in f.algebra.vertices})


def image(f: Morphism) -> Tuple[Representation, Morphism, Morphism]:
    """Image with its inclusion into the target and the corestriction from the source."""
    spaces = {v: la.image_basis(f.maps[v]) for v in f.algebra.vertices}
    im, inclusion = submodule(f.target, spaces)
    corestriction = Morphism(f.source, im, {v: la.solve(spaces[v], f.maps[v]) for v in f.algebra.vertices})
    return im, inclusion, corestriction


def cokernel(f: Morphism) -> Tuple[Representation, Morphism]:
    return quotient(f.target, {v: la.image_basis(f.maps[v]) for v in f.algebra.vertices})


def induced_on_quotients(p_source: Morphism, f: Morphism, p_target: Morphism) -> Morphism:
    """Map between quotients induced by f, given the two quotient projections."""
    maps = {}
    for v in f.algebra.vertices:
        section = la.right_inverse(p_source.maps[v])
        maps[v] = la.chain(p_target.maps[v], f.maps[v], section)
    return Morphism(p_source.target, p_target.target, maps)


def restricted_to_submodules(i_source: Morphism, f: Morphism, i_target: Morphism) -> Morphism:
    """Map between submodules induced by f, given the two inclusions."""
    maps = {v: la.solve(i_target.maps[v], la.mul(f.maps[v], i_source.maps[v])) for v in f.algebra.vertices}
    return Morphism(i_source.source, i_target.source, maps)


def direct_sum(modules: Sequence[Representation], algebra: Optional[BoundAlgebra] = None) -> DirectSum:
    if not modules:
        if algebra is None:
            raise ValueError("empty direct sum needs the algebra")
        z = zero_module(algebra)
        return DirectSum(z, (), ())
    algebra = modules[0].algebra
    K = algebra.domain
    dims = {v: sum(m.dims[v] for m in modules) for v in algebra.vertices}
    maps = {a.label: la.block_diag([m.maps[a.label] for m in modules], K) for a in algebra.arrows}
    total = Representation(algebra, dims, maps)
    injections, projections = [], []
    offsets = {v: 0 for v in algebra.vertices}
    for m in modules:
        inj, proj = {}, {}
        for v in algebra.vertices:
            d, o = m.dims[v], offsets[v]
            rows = la.rows(la.eye(dims[v], K))
            proj[v] = la.from_rows(rows[o:o + d], d, dims[v], K)
            inj[v] = la.transpose(proj[v])
            offsets[v] = o + d
        injections.append(Morphism(m, total, inj))
        projections.append(Morphism(total, m, proj))
    return DirectSum(total, tuple(injections), tuple(projections))


def power(m: Representation, k: int) -> Representation:
    return direct_sum([m] * k, m.algebra).module


def zero_module(algebra: BoundAlgebra) -> Representation:
    return Representation(algebra, {})


def radical(m: Representation) -> Tuple[Representation, Morphism]:
    K = m.domain
    spaces = {}
    for v in m.algebra.vertices:
        incoming = [m.maps[a.label] for a in m.algebra.quiver.in_arrows(v)]
        stacked = la.hstack(incoming, m.dims[v], K) if incoming else la.zeros(m.dims[v], 0, K)
        spaces[v] = la.image_basis(stacked)
    return submodule(m, spaces)


def top(m: Representation) -> Tuple[Representation, Morphism]:
    _, inclusion = radical(m)
    return quotient(m, inclusion.maps)


def socle(m: Representation) -> Tuple[Representation, Morphism]:
    K = m.domain
    spaces = {}
    for v in m.algebra.vertices:
        outgoing = [m.maps[a.label] for a in m.algebra.quiver.out_arrows(v)]
        if outgoing:
            spaces[v] = la.nullspace(la.vstack(outgoing, m.dims[v], K))
        else:
            spaces[v] = la.eye(m.dims[v], K)
    return submodule(m, spaces)


def top_vector(m: Representation) -> Tuple[int, ...]:
    return top(m)[0].dimension_vector()


def socle_vector(m: Representation) -> Tuple[int, ...]:
    return socle(m)[0].dimension_vector()


def radical_layers(m: Representation) -> List[Tuple[int, ...]]:
    """Dimension vectors of rad^i m / rad^{i+1} m until the radical vanishes."""
    layers = []
    current = m
    while not current.is_zero():
        rad, _ = radical(current)
        layers.append(tuple(a - b for a, b in zip(current.dimension_vector(), rad.dimension_vector())))
        current = rad
    return layers


def is_uniserial(m: Representation) -> bool:
    return all(sum(layer) == 1 for layer in radical_layers(m))


def dual(m: Representation, over: Optional[BoundAlgebra] = None) -> Representation:
    """D = Hom_k(-, k): a module over the opposite algebra."""
    target = over or m.algebra.opposite()
    return Representation(target, dict(m.dims), {a: la.transpose(x) for a, x in m.maps.items()})


def dual_morphism(f: Morphism) -> Morphism:
    return Morphism(dual(f.target), dual(f.source), {v: la.transpose(x) for v, x in f.maps.items()})


def simple(algebra: BoundAlgebra, v: str) -> Representation:
    return Representation(algebra, {v: 1})


def projective_basis(algebra: BoundAlgebra, v: str) -> Dict[str, List[Path]]:
    """Basis of P(v) at each vertex: the nonzero paths from v ending there."""
    out: Dict[str, List[Path]] = {u: [] for u in algebra.vertices}
    for p in algebra.paths_from(v):
        out[p.target].append(p)
    return out


def projective(algebra: BoundAlgebra, v: str) -> Representation:
    K = algebra.domain
    basis = projective_basis(algebra, v)
    pos = {u: {p: i for i, p in enumerate(ps)} for u, ps in basis.items()}
    maps = {}
    for a in algebra.arrows:
        rows_n, cols_n = len(basis[a.target]), len(basis[a.source])
        entries = [[K.zero] * cols_n for _ in range(rows_n)]
        for j, p in enumerate(basis[a.source]):
            q = algebra.extend(p, a.label)
            if q is not None:
                entries[pos[a.target][q]][j] = K.one
        maps[a.label] = la.from_rows(entries, rows_n, cols_n, K)
    return Representation(algebra, {u: len(ps) for u, ps in basis.items()}, maps)


def injective(algebra: BoundAlgebra, v: str) -> Representation:
    return dual(projective(algebra.opposite(), v), over=algebra)


def regular_module(algebra: BoundAlgebra) -> Representation:
    return direct_sum([projective(algebra, v) for v in algebra.vertices]).module


def is_projective(m: Representation) -> bool:
    """A module is projective iff its dimension equals that of its projective cover."""
    t = top_vector(m)
    cover_dim = sum(k * len(m.algebra.paths_from(v)) for v, k in zip(m.algebra.vertices, t))
    return cover_dim == m.total_dim


def is_injective(m: Representation) -> bool:
    return is_projective(dual(m))


def restrict_module(m: Representation, algebra: BoundAlgebra, vertex_map: Mapping[str, str],
                    arrow_map: Mapping[str, str]) -> Representation:
    """Pull back along an embedding of ``algebra``'s quiver into m's quiver."""
    dims = {u: m.dims[vertex_map[u]] for u in algebra.vertices}
    maps = {a.label: m.maps[arrow_map[a.label]] for a in algebra.arrows}
    return Representation(algebra, dims, maps)


def restrict_morphism(f: Morphism, source: Representation, target: Representation,
                      vertex_map: Mapping[str, str]) -> Morphism:
    return Morphism(source, target, {u: f.maps[vertex_map[u]] for u in source.algebra.vertices})


def truncated_projective(algebra: BoundAlgebra, v: str, length: int) -> Representation:
    """P(v) / rad^length P(v); over a Nakayama algebra the uniserial module of that length with top S_v."""
    p = projective(algebra, v)
    basis = projective_basis(algebra, v)
    K = algebra.domain
    spaces = {}
    for u, paths in basis.items():
        cols = [la.unit_column(len(paths), i, K) for i, q in enumerate(paths) if q.length >= length]
        spaces[u] = la.hstack(cols, len(paths), K) if cols else la.zeros(len(paths), 0, K)
    return quotient(p, spaces)[0]
