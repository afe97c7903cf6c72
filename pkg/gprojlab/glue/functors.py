"""Functors attached to a gluing node.

Arrow nodes (``connect_by_arrow``, new arrow c: w -> v with w in B, v in A)
give the triangular algebra Λ = [[A, M], [0, B]] and its recollement

    mod A  --i_*-->  mod Λ  --j^*-->  mod B

with i^* ⊣ i_* ⊣ i^! and j_! ⊣ j^* ⊣ j_*. A Λ-module is a triple (X, Y, φ)
where φ: M ⊗_B Y -> X and M ⊗_B Y = P_A(v) ⊗ Y_w, because every nonzero path
through c is q.c.p with p nonzero in B and q nonzero in A.

Vertex nodes (``glue_at_vertex``) give the restriction functors to either
part and their left/right adjoints, the extension functors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Literal, Tuple

from ..core import linalg as la
from ..core.algebra import BoundAlgebra
from ..core.gluing import Embedding, GluedAlgebra
from ..core.paths import Path
from ..errors import GluingError
from ..rep.ops import cokernel, dual, dual_morphism, induced_on_quotients, restrict_module, restrict_morphism
from ..rep.representation import Morphism, Representation

Side = Literal["a", "b"]


def _path_tensor(algebra: BoundAlgebra, v: str, space: int, *, positive: bool = False) -> Tuple[Representation, Dict[str, List[Path]]]:
    """P(v) ⊗ k^space, basis (path, i) path-major; ``positive`` drops e_v."""
    K = algebra.domain
    paths: Dict[str, List[Path]] = {u: [] for u in algebra.vertices}
    for p in algebra.paths_from(v):
        if positive and p.is_stationary:
            continue
        paths[p.target].append(p)
    pos = {u: {p: i for i, p in enumerate(ps)} for u, ps in paths.items()}
    maps = {}
    for a in algebra.arrows:
        rows_n, cols_n = len(paths[a.target]) * space, len(paths[a.source]) * space
        entries = [[K.zero] * cols_n for _ in range(rows_n)]
        for j, p in enumerate(paths[a.source]):
            q = algebra.extend(p, a.label)
            if q is None or q not in pos[a.target]:
                continue
            i = pos[a.target][q]
            for k in range(space):
                entries[i * space + k][j * space + k] = K.one
        maps[a.label] = la.from_rows(entries, rows_n, cols_n, K)
    dims = {u: len(ps) * space for u, ps in paths.items()}
    return Representation(algebra, dims, maps), paths


def _tensor_map(paths: Dict[str, List[Path]], h: la.Matrix, K) -> Dict[str, la.Matrix]:
    return {u: la.block_diag([h] * len(ps), K) if ps else la.zeros(0, 0, K) for u, ps in paths.items()}


def _assemble(glued: GluedAlgebra, x: Representation, y: Representation,
              extra: Dict[str, la.Matrix]) -> Representation:
    """Push modules over the two parts into the glued algebra (shared vertex taken from x)."""
    ea, eb = glued.a_embedding, glued.b_embedding
    dims: Dict[str, int] = {}
    maps: Dict[str, la.Matrix] = {}
    for u in y.algebra.vertices:
        dims[eb.vertex(u)] = y.dims[u]
    for u in x.algebra.vertices:
        dims[ea.vertex(u)] = x.dims[u]
    for a in y.algebra.arrows:
        maps[eb.arrow(a.label)] = y.maps[a.label]
    for a in x.algebra.arrows:
        maps[ea.arrow(a.label)] = x.maps[a.label]
    maps.update(extra)
    return Representation(glued.algebra, dims, maps)


def _part(glued: GluedAlgebra, side: Side) -> Tuple[BoundAlgebra, Embedding]:
    if side == "a":
        return glued.a_part.algebra, glued.a_embedding
    return glued.b_part.algebra, glued.b_embedding


@dataclass(frozen=True)
class TripleModule:
    """(X, Y, φ) with φ stored as the action of the connecting arrow, Y_w -> X_v."""

    x: Representation
    y: Representation
    phi: la.Matrix


class ArrowRecollement:
    """The six functors of the recollement of an arrow-connected algebra."""

    def __init__(self, glued: GluedAlgebra) -> None:
        if glued.kind != "arrow" or glued.connecting_arrow is None:
            raise GluingError("the recollement functors need an arrow-connected algebra")
        self.glued = glued
        self.algebra = glued.algebra
        self.a_algebra, self.a_embedding = _part(glued, "a")
        self.b_algebra, self.b_embedding = _part(glued, "b")
        self.label = glued.connecting_arrow[0]
        self.v = glued.part_vertex("a")
        self.w = glued.part_vertex("b")
        self.orientation = f"{glued.connecting_arrow[1]} -> {glued.connecting_arrow[2]}"

    # triples

    def split_triple(self, t: Representation) -> TripleModule:
        x = restrict_module(t, self.a_algebra, self.a_embedding.vertex_map, self.a_embedding.arrow_map)
        y = restrict_module(t, self.b_algebra, self.b_embedding.vertex_map, self.b_embedding.arrow_map)
        return TripleModule(x, y, t.maps[self.label])

    def assemble_triple(self, triple: TripleModule) -> Representation:
        return _assemble(self.glued, triple.x, triple.y, {self.label: triple.phi})

    def tensor(self, y: Representation) -> Tuple[Representation, Dict[str, List[Path]]]:
        """G(Y) = M ⊗_B Y as an A-module, with its path basis."""
        return _path_tensor(self.a_algebra, self.v, y.dims[self.w])

    def structure_map(self, triple: TripleModule) -> Morphism:
        """φ: G(Y) -> X, q ⊗ y ↦ X_q φ(y)."""
        g, paths = self.tensor(triple.y)
        K = self.algebra.domain
        maps = {}
        for u, ps in paths.items():
            blocks = [la.mul(triple.x.path_action(q), triple.phi) for q in ps]
            maps[u] = la.hstack(blocks, triple.x.dims[u], K) if blocks else la.zeros(triple.x.dims[u], 0, K)
        return Morphism(g, triple.x, maps)

    def _lift(self, f_a: Dict[str, la.Matrix], f_b: Dict[str, la.Matrix]) -> Dict[str, la.Matrix]:
        out = {self.a_embedding.vertex(u): m for u, m in f_a.items()}
        out.update({self.b_embedding.vertex(u): m for u, m in f_b.items()})
        return out

    def _zero_on(self, algebra: BoundAlgebra, source: Representation, target: Representation,
                 embedding: Embedding) -> Dict[str, la.Matrix]:
        K = self.algebra.domain
        return {u: la.zeros(target.dims[embedding.vertex(u)], source.dims[embedding.vertex(u)], K)
                for u in algebra.vertices}

    # the six functors on objects

    def i_upper_star(self, t: Representation) -> Representation:
        return cokernel(self.structure_map(self.split_triple(t)))[0]

    def i_star(self, x: Representation) -> Representation:
        K = self.algebra.domain
        y = Representation(self.b_algebra, {})
        return self.assemble_triple(TripleModule(x, y, la.zeros(x.dims[self.v], 0, K)))

    def i_shriek(self, t: Representation) -> Representation:
        return self.split_triple(t).x

    def j_lower_shriek(self, y: Representation) -> Representation:
        g, paths = self.tensor(y)
        K = self.algebra.domain
        d = y.dims[self.w]
        start = paths[self.v].index(Path(self.v, self.v, ()))
        rows = [[K.one if r == start * d + c else K.zero for c in range(d)] for r in range(g.dims[self.v])]
        phi = la.from_rows(rows, g.dims[self.v], d, K)
        return self.assemble_triple(TripleModule(g, y, phi))

    def j_star(self, t: Representation) -> Representation:
        return self.split_triple(t).y

    def j_lower_star(self, y: Representation) -> Representation:
        K = self.algebra.domain
        x = Representation(self.a_algebra, {})
        return self.assemble_triple(TripleModule(x, y, la.zeros(0, y.dims[self.w], K)))

    # the six functors on morphisms

    def i_upper_star_map(self, g: Morphism) -> Morphism:
        src, tgt = self.split_triple(g.source), self.split_triple(g.target)
        _, p_src = cokernel(self.structure_map(src))
        _, p_tgt = cokernel(self.structure_map(tgt))
        g_a = restrict_morphism(g, src.x, tgt.x, self.a_embedding.vertex_map)
        return induced_on_quotients(p_src, g_a, p_tgt)

    def i_star_map(self, f: Morphism) -> Morphism:
        source, target = self.i_star(f.source), self.i_star(f.target)
        zero = self._zero_on(self.b_algebra, source, target, self.b_embedding)
        return Morphism(source, target, self._lift(f.maps, zero))

    def i_shriek_map(self, g: Morphism) -> Morphism:
        src, tgt = self.split_triple(g.source), self.split_triple(g.target)
        return restrict_morphism(g, src.x, tgt.x, self.a_embedding.vertex_map)

    def j_lower_shriek_map(self, h: Morphism) -> Morphism:
        source, target = self.j_lower_shriek(h.source), self.j_lower_shriek(h.target)
        _, paths = self.tensor(h.source)
        K = self.algebra.domain
        return Morphism(source, target, self._lift(_tensor_map(paths, h.maps[self.w], K), h.maps))

    def j_star_map(self, g: Morphism) -> Morphism:
        src, tgt = self.split_triple(g.source), self.split_triple(g.target)
        return restrict_morphism(g, src.y, tgt.y, self.b_embedding.vertex_map)

    def j_lower_star_map(self, h: Morphism) -> Morphism:
        source, target = self.j_lower_star(h.source), self.j_lower_star(h.target)
        zero = self._zero_on(self.a_algebra, source, target, self.a_embedding)
        return Morphism(source, target, self._lift(zero, h.maps))

    # adjunction maps

    def counit_shriek(self, t: Representation) -> Morphism:
        """j_! j^* T -> T: identity on B, the structure map on A."""
        triple = self.split_triple(t)
        phi = self.structure_map(triple)
        source = self.j_lower_shriek(triple.y)
        K = self.algebra.domain
        ident = {u: la.eye(triple.y.dims[u], K) for u in self.b_algebra.vertices}
        return Morphism(source, t, self._lift(phi.maps, ident))

    def unit_upper(self, t: Representation) -> Morphism:
        """T -> i_* i^* T: the cokernel projection on A, zero on B."""
        triple = self.split_triple(t)
        q, projection = cokernel(self.structure_map(triple))
        target = self.i_star(q)
        zero = self._zero_on(self.b_algebra, t, target, self.b_embedding)
        return Morphism(t, target, self._lift(projection.maps, zero))


class VertexGluingFunctors:
    """Restriction to either part of a vertex gluing and its two adjoints.

    j is restriction to B and i restriction to A. The left adjoint j_λ places
    (nonzero paths of positive length from the glued vertex inside A) ⊗ Y_v on
    the A side; j_ρ is D ∘ j_λ ∘ D over the opposite gluing. i_λ, i_ρ swap
    the roles of the parts.
    """

    def __init__(self, glued: GluedAlgebra) -> None:
        if glued.kind != "vertex" or glued.glued_vertex is None:
            raise GluingError("restriction functors need a vertex gluing")
        self.glued = glued
        self.algebra = glued.algebra

    def _restrict(self, m: Representation, side: Side) -> Representation:
        algebra, emb = _part(self.glued, side)
        return restrict_module(m, algebra, emb.vertex_map, emb.arrow_map)

    def _check_extendable(self, other: Side) -> None:
        algebra, _ = _part(self.glued, other)
        v = self.glued.part_vertex(other)
        loops = [p for p in algebra.paths_between(v, v) if not p.is_stationary]
        if loops:
            raise GluingError(f"nonzero path {loops[0]} returns to the glued vertex; extension functor undefined")

    def _extend(self, m: Representation, side: Side) -> Representation:
        """Left adjoint of restriction to ``side``."""
        other: Side = "b" if side == "a" else "a"
        self._check_extendable(other)
        other_algebra, other_emb = _part(self.glued, other)
        _, own_emb = _part(self.glued, side)
        v_own = self.glued.part_vertex(side)
        v_other = self.glued.part_vertex(other)
        tail, _ = _path_tensor(other_algebra, v_other, m.dims[v_own], positive=True)
        K = self.algebra.domain
        dims = {own_emb.vertex(u): m.dims[u] for u in m.algebra.vertices}
        maps = {own_emb.arrow(a.label): m.maps[a.label] for a in m.algebra.arrows}
        for u in other_algebra.vertices:
            if u != v_other:
                dims[other_emb.vertex(u)] = tail.dims[u]
        for a in other_algebra.arrows:
            if a.source == v_other:
                # e_v ⊗ y ↦ a ⊗ y
                d = m.dims[v_own]
                rows_n = tail.dims[a.target]
                entries = [[K.zero] * d for _ in range(rows_n)]
                if a.target != v_other:
                    paths = [p for p in other_algebra.paths_from(v_other) if p.target == a.target and not p.is_stationary]
                    single = Path(v_other, a.target, (a.label,))
                    if single in paths:
                        i = paths.index(single)
                        for k in range(d):
                            entries[i * d + k][k] = K.one
                maps[other_emb.arrow(a.label)] = la.from_rows(entries, rows_n, d, K)
            elif a.target == v_other:
                maps[other_emb.arrow(a.label)] = la.zeros(m.dims[v_own], tail.dims[a.source], K)
            else:
                maps[other_emb.arrow(a.label)] = tail.maps[a.label]
        return Representation(self.algebra, dims, maps)

    def _extend_map(self, h: Morphism, side: Side) -> Morphism:
        other: Side = "b" if side == "a" else "a"
        other_algebra, other_emb = _part(self.glued, other)
        _, own_emb = _part(self.glued, side)
        v_own = self.glued.part_vertex(side)
        v_other = self.glued.part_vertex(other)
        source, target = self._extend(h.source, side), self._extend(h.target, side)
        _, paths = _path_tensor(other_algebra, v_other, h.source.dims[v_own], positive=True)
        K = self.algebra.domain
        tails = _tensor_map(paths, h.maps[v_own], K)
        maps = {own_emb.vertex(u): x for u, x in h.maps.items()}
        for u in other_algebra.vertices:
            if u != v_other:
                maps[other_emb.vertex(u)] = tails[u]
        return Morphism(source, target, maps)

    def _coextend(self, m: Representation, side: Side) -> Representation:
        """Right adjoint of restriction, through duality over the opposite gluing."""
        op = VertexGluingFunctors(self.glued.opposite())
        return dual(op._extend(dual(m), side), over=self.algebra)

    def _coextend_map(self, h: Morphism, side: Side) -> Morphism:
        op = VertexGluingFunctors(self.glued.opposite())
        lifted = op._extend_map(dual_morphism(h), side)
        source = dual(lifted.target, over=self.algebra)
        target = dual(lifted.source, over=self.algebra)
        return Morphism(source, target, {v: la.transpose(x) for v, x in lifted.maps.items()})

    def j_restrict(self, m: Representation) -> Representation:
        return self._restrict(m, "b")

    def i_restrict(self, m: Representation) -> Representation:
        return self._restrict(m, "a")

    def j_restrict_map(self, f: Morphism) -> Morphism:
        _, emb = _part(self.glued, "b")
        return restrict_morphism(f, self.j_restrict(f.source), self.j_restrict(f.target), emb.vertex_map)

    def i_restrict_map(self, f: Morphism) -> Morphism:
        _, emb = _part(self.glued, "a")
        return restrict_morphism(f, self.i_restrict(f.source), self.i_restrict(f.target), emb.vertex_map)

    def j_lambda(self, y: Representation) -> Representation:
        return self._extend(y, "b")

    def j_rho(self, y: Representation) -> Representation:
        return self._coextend(y, "b")

    def i_lambda(self, x: Representation) -> Representation:
        return self._extend(x, "a")

    def i_rho(self, x: Representation) -> Representation:
        return self._coextend(x, "a")

    def j_lambda_map(self, h: Morphism) -> Morphism:
        return self._extend_map(h, "b")

    def i_lambda_map(self, h: Morphism) -> Morphism:
        return self._extend_map(h, "a")

    def j_rho_map(self, h: Morphism) -> Morphism:
        return self._coextend_map(h, "b")

    def i_rho_map(self, h: Morphism) -> Morphism:
        return self._coextend_map(h, "a")


def node_extension(node: GluedAlgebra, side: Side) -> Callable[[Representation], Representation]:
    """The functor carrying modules over one part of ``node`` into the node's algebra."""
    if node.kind == "vertex":
        functors = VertexGluingFunctors(node)
        return functors.i_lambda if side == "a" else functors.j_lambda
    recollement = ArrowRecollement(node)
    return recollement.i_star if side == "a" else recollement.j_lower_shriek


def extension_into(glued: GluedAlgebra, leaf_name: str) -> Callable[[Representation], Representation]:
    """Compose node extensions from a leaf component up to the root of the gluing tree."""
    steps: List[Tuple[GluedAlgebra, Side]] = []
    node = glued
    while isinstance(node, GluedAlgebra):
        if leaf_name in {c.name for c in node.a_part.leaves()}:
            steps.append((node, "a"))
            node = node.a_part
        elif leaf_name in {c.name for c in node.b_part.leaves()}:
            steps.append((node, "b"))
            node = node.b_part
        else:
            raise KeyError(leaf_name)
    functors = [node_extension(n, side) for n, side in reversed(steps)]

    def apply(m: Representation) -> Representation:
        for f in functors:
            m = f(m)
        return m

    return apply
