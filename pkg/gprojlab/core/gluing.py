"""Gluing constructors: vertex identification and arrow connection.

A glued algebra remembers how it was built as a binary tree whose leaves are
named components. Each node records the ``A`` part and the ``B`` part:

* vertex node: A is the first argument, B the second, one vertex shared;
* arrow node: A holds the target ``v`` of the new arrow, B holds its source ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Literal, Optional, Tuple, Union

from ..errors import GluingError
from .algebra import BoundAlgebra, build_algebra, make_ideal, make_quiver


def qualify(name: Optional[str], label: str) -> str:
    return f"{name}_{label}" if name else label


@dataclass(frozen=True)
class Embedding:
    vertex_map: Dict[str, str]
    arrow_map: Dict[str, str]

    def vertex(self, v: str) -> str:
        return self.vertex_map[v]

    def arrow(self, a: str) -> str:
        return self.arrow_map[a]


@dataclass(frozen=True)
class Component:
    name: str
    algebra: BoundAlgebra

    def leaves(self) -> Iterator["Component"]:
        yield self

    def opposite(self) -> "Component":
        return Component(self.name, self.algebra.opposite())


Part = Union[Component, "GluedAlgebra"]


@dataclass(frozen=True)
class GluedAlgebra:
    algebra: BoundAlgebra
    kind: Literal["vertex", "arrow"]
    a_part: Part
    b_part: Part
    a_embedding: Embedding
    b_embedding: Embedding
    glued_vertex: Optional[str] = None
    # arrow nodes: (label, source w in B, target v in A), labels as in the glued quiver
    connecting_arrow: Optional[Tuple[str, str, str]] = None
    name: str = field(default="")

    def leaves(self) -> Iterator[Component]:
        yield from self.a_part.leaves()
        yield from self.b_part.leaves()

    def components(self) -> List[Component]:
        return list(self.leaves())

    def nodes(self) -> Iterator["GluedAlgebra"]:
        for part in (self.a_part, self.b_part):
            if isinstance(part, GluedAlgebra):
                yield from part.nodes()
        yield self

    def part_vertex(self, side: Literal["a", "b"]) -> str:
        """The pivot vertex inside the chosen part (glued vertex, or v/w for arrows)."""
        emb = self.a_embedding if side == "a" else self.b_embedding
        if self.kind == "vertex":
            target = self.glued_vertex
        else:
            assert self.connecting_arrow is not None
            target = self.connecting_arrow[2] if side == "a" else self.connecting_arrow[1]
        for u, image in emb.vertex_map.items():
            if image == target:
                return u
        raise GluingError(f"pivot {target} missing from part {side}")

    def cross_paths(self) -> List[str]:
        """Nonzero basis paths using arrows from more than one component."""
        owner: Dict[str, str] = {}
        for leaf, emb in _leaf_embeddings(self):
            for a in leaf.algebra.arrows:
                owner[emb.arrow_map[a.label]] = leaf.name
        out = []
        for p in self.algebra.basis:
            names = {owner.get(x, "*") for x in p.arrows}
            if len(names) > 1:
                out.append(str(p))
        return out

    def opposite(self) -> "GluedAlgebra":
        a_op = self.a_part.opposite()
        b_op = self.b_part.opposite()
        if self.kind == "vertex":
            return GluedAlgebra(self.algebra.opposite(), "vertex", a_op, b_op, self.a_embedding,
                                self.b_embedding, glued_vertex=self.glued_vertex, name=self.name)
        assert self.connecting_arrow is not None
        label, w, v = self.connecting_arrow
        # reversing the arrow swaps which part holds its target
        return GluedAlgebra(self.algebra.opposite(), "arrow", b_op, a_op, self.b_embedding,
                            self.a_embedding, connecting_arrow=(label, v, w), name=self.name)

    def describe(self) -> Dict[str, object]:
        out: Dict[str, object] = {"kind": self.kind, "components": [c.name for c in self.leaves()]}
        if self.kind == "vertex":
            out["glued_vertex"] = self.glued_vertex
        else:
            assert self.connecting_arrow is not None
            label, w, v = self.connecting_arrow
            out["connecting_arrow"] = {"label": label, "source": w, "target": v}
            out["orientation"] = "B -> A"
        out["cross_paths"] = self.cross_paths()
        return out


def _leaf_embeddings(node: Part, outer: Optional[Embedding] = None) -> Iterator[Tuple[Component, Embedding]]:
    if isinstance(node, Component):
        yield node, outer or Embedding({v: v for v in node.algebra.vertices},
                                       {a.label: a.label for a in node.algebra.arrows})
        return
    for part, emb in ((node.a_part, node.a_embedding), (node.b_part, node.b_embedding)):
        composed_outer = emb if outer is None else Embedding(
            {u: outer.vertex_map[x] for u, x in emb.vertex_map.items()},
            {a: outer.arrow_map[x] for a, x in emb.arrow_map.items()},
        )
        yield from _leaf_embeddings(part, composed_outer)


def leaf_embedding(glued: GluedAlgebra, name: str) -> Embedding:
    for leaf, emb in _leaf_embeddings(glued):
        if leaf.name == name:
            return emb
    raise KeyError(name)


def _as_part(x: Union[BoundAlgebra, Part], default_name: str) -> Part:
    if isinstance(x, BoundAlgebra):
        return Component(default_name, x)
    return x


def _relabel(algebra: BoundAlgebra, name: Optional[str], fixed: Dict[str, str]) -> Embedding:
    vmap = {v: fixed.get(v, qualify(name, v)) for v in algebra.vertices}
    amap = {a.label: qualify(name, a.label) for a in algebra.arrows}
    return Embedding(vmap, amap)


def _assemble(a: BoundAlgebra, ea: Embedding, b: BoundAlgebra, eb: Embedding,
              shared: Tuple[str, ...], extra_arrows=()) -> BoundAlgebra:
    if a.field != b.field:
        raise GluingError("components live over different fields")
    a_vertices = [ea.vertex_map[v] for v in a.vertices]
    b_vertices = [eb.vertex_map[v] for v in b.vertices]
    clash = (set(a_vertices) & set(b_vertices)) - set(shared)
    if clash:
        raise GluingError(f"vertex labels collide: {sorted(clash)}; give the components names")
    arrows = [(ea.arrow_map[x.label], ea.vertex_map[x.source], ea.vertex_map[x.target]) for x in a.arrows]
    arrows += [(eb.arrow_map[x.label], eb.vertex_map[x.source], eb.vertex_map[x.target]) for x in b.arrows]
    arrows += list(extra_arrows)
    labels = [t[0] for t in arrows]
    if len(set(labels)) != len(labels):
        raise GluingError("arrow labels collide; give the components names")
    vertices = a_vertices + [v for v in b_vertices if v not in shared]
    relations = [tuple(ea.arrow_map[x] for x in g) for g in a.ideal.generators]
    relations += [tuple(eb.arrow_map[x] for x in g) for g in b.ideal.generators]
    return build_algebra(make_quiver(vertices, arrows), make_ideal(relations), a.field)


def glue_at_vertex(
    a1: Union[BoundAlgebra, Part],
    v1: str,
    a2: Union[BoundAlgebra, Part],
    v2: str,
    *,
    names: Tuple[Optional[str], Optional[str]] = ("A", "B"),
) -> GluedAlgebra:
    """Identify v1 of the first algebra with v2 of the second; the ideal is the union."""
    first, second = _as_part(a1, names[0] or "A"), _as_part(a2, names[1] or "B")
    alg1, alg2 = first.algebra, second.algebra
    if v1 not in alg1.vertices or v2 not in alg2.vertices:
        raise GluingError(f"unknown gluing vertex {v1!r} or {v2!r}")
    e1 = _relabel(alg1, names[0], {})
    glued = e1.vertex_map[v1]
    e2 = _relabel(alg2, names[1], {v2: glued})
    algebra = _assemble(alg1, e1, alg2, e2, (glued,))
    return GluedAlgebra(algebra, "vertex", first, second, e1, e2, glued_vertex=glued)


def connect_by_arrow(
    a_src: Union[BoundAlgebra, Part],
    w: str,
    a_tgt: Union[BoundAlgebra, Part],
    v: str,
    *,
    names: Tuple[Optional[str], Optional[str]] = ("B", "A"),
    label: str = "c",
) -> GluedAlgebra:
    """Disjoint union plus one new arrow w -> v; A is the target side, B the source side."""
    source, target = _as_part(a_src, names[0] or "B"), _as_part(a_tgt, names[1] or "A")
    alg_b, alg_a = source.algebra, target.algebra
    if w not in alg_b.vertices or v not in alg_a.vertices:
        raise GluingError(f"unknown connecting vertex {w!r} or {v!r}")
    eb = _relabel(alg_b, names[0], {})
    ea = _relabel(alg_a, names[1], {})
    w_new, v_new = eb.vertex_map[w], ea.vertex_map[v]
    algebra = _assemble(alg_a, ea, alg_b, eb, (), extra_arrows=[(label, w_new, v_new)])
    return GluedAlgebra(algebra, "arrow", target, source, ea, eb, connecting_arrow=(label, w_new, v_new))
