from __future__ import annotations

import pytest

from gprojlab.core import (
    BaseField,
    build_algebra,
    connect_by_arrow,
    glue_at_vertex,
    is_admissible,
    make_ideal,
    make_quiver,
    nakayama_cyclic,
    nakayama_linear,
    single_vertex,
)
from gprojlab.errors import GluingError, NotAdmissible, QuiverError


def test_path_counts(s3, a2, two_loop):
    assert s3.dimension == 6
    assert a2.dimension == 3
    assert two_loop.dimension == 3
    assert single_vertex().dimension == 1
    # 1 <- 2 <- 3 with no relations: 3 stationary, 2 arrows, 1 long path
    assert nakayama_linear(3).dimension == 6
    assert nakayama_linear(3, uniform_length=2).dimension == 5


def test_paths_use_application_order(a2):
    (p,) = [p for p in a2.basis if p.length == 1]
    assert (p.source, p.target) == ("2", "1")
    assert [str(q) for q in a2.paths_from("2")] == ["e_2", "a1"]
    assert [str(q) for q in a2.paths_to("1")] == ["e_1", "a1"]
    assert a2.paths_between("1", "2") == []


def test_kupisch_series(s3, a2):
    assert s3.is_nakayama()
    assert s3.kupisch_series() == {"1": 2, "2": 2, "3": 2}
    assert a2.kupisch_series() == {"1": 1, "2": 2}


def test_loop_without_relations_is_not_admissible():
    quiver = make_quiver(["1"], [("x", "1", "1")])
    verdict = is_admissible(quiver, make_ideal([]))
    assert verdict.admissible is False
    assert verdict.witness
    with pytest.raises(NotAdmissible):
        build_algebra(quiver, make_ideal([]))


def test_relation_must_be_a_path():
    quiver = make_quiver(["1", "2", "3"], [("a", "2", "1"), ("b", "3", "2")])
    with pytest.raises(QuiverError):
        build_algebra(quiver, make_ideal([("a", "b")]))
    algebra = build_algebra(quiver, make_ideal([("b", "a")]))
    assert algebra.dimension == 5


def test_long_generator_window():
    # cycle of length 2 with a relation of length 3; nothing longer survives
    quiver = make_quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    algebra = build_algebra(quiver, make_ideal([("a", "b", "a"), ("b", "a", "b")]))
    assert algebra.max_path_length() == 2
    assert algebra.dimension == 6


def test_nakayama_constructor_errors():
    with pytest.raises(QuiverError):
        nakayama_cyclic(3, 1)
    with pytest.raises(QuiverError):
        nakayama_linear(3, [(2, 3)])
    with pytest.raises(NotAdmissible):
        build_algebra(make_quiver(["1"], [("x", "1", "1")]), make_ideal([]))


def test_opposite_is_involutive(a2):
    op = a2.opposite()
    assert op.arrows[0].source == "1" and op.arrows[0].target == "2"
    assert op.opposite() is a2
    assert op.dimension == a2.dimension


def test_prime_field_is_part_of_identity():
    rat = nakayama_cyclic(3, 2)
    mod7 = nakayama_cyclic(3, 2, field=BaseField.prime(7))
    assert rat != mod7
    assert mod7.field.label() == "p=7"
    with pytest.raises(ValueError):
        BaseField.prime(8)


def test_vertex_gluing_of_triangles(glued_s3):
    algebra = glued_s3.algebra
    assert algebra.vertices == ("X_1", "X_2", "X_3", "Y_2", "Y_3")
    assert glued_s3.glued_vertex == "X_1"
    # 6 + 6 - 1 shared idempotent, plus two paths through the glued vertex
    assert algebra.dimension == 13
    assert sorted(glued_s3.cross_paths()) == ["X_a1.Y_a3", "Y_a1.X_a3"]
    assert [c.name for c in glued_s3.leaves()] == ["X", "Y"]
    assert glued_s3.part_vertex("a") == "1"
    assert glued_s3.part_vertex("b") == "1"


def test_arrow_connection(arrow_s3):
    algebra = arrow_s3.algebra
    assert arrow_s3.kind == "arrow"
    assert arrow_s3.connecting_arrow == ("c", "B_1", "A_2")
    assert arrow_s3.part_vertex("a") == "2"
    assert arrow_s3.part_vertex("b") == "1"
    assert algebra.dimension == 13
    described = arrow_s3.describe()
    assert described["connecting_arrow"] == {"label": "c", "source": "B_1", "target": "A_2"}
    assert described["components"] == ["A", "B"]


def test_gluing_tree_post_order(s3, a2):
    inner = glue_at_vertex(s3, "1", a2, "1", names=("X", "L"))
    outer = glue_at_vertex(inner, "L_2", s3, "1", names=(None, "Y"))
    kinds = [node.kind for node in outer.nodes()]
    assert kinds == ["vertex", "vertex"]
    assert list(outer.nodes())[-1] is outer
    assert [c.name for c in outer.leaves()] == ["X", "L", "Y"]


def test_gluing_rejects_bad_input(s3):
    with pytest.raises(GluingError):
        glue_at_vertex(s3, "9", s3, "1", names=("X", "Y"))
    with pytest.raises(GluingError):
        glue_at_vertex(s3, "1", s3, "1", names=(None, None))
    with pytest.raises(GluingError):
        connect_by_arrow(s3, "1", nakayama_cyclic(3, 2, field=BaseField.prime(5)), "1")


def test_opposite_of_arrow_node_swaps_parts(arrow_s3):
    op = arrow_s3.opposite()
    assert op.connecting_arrow == ("c", "A_2", "B_1")
    assert [c.name for c in op.leaves()] == ["B", "A"]
    assert op.algebra.dimension == arrow_s3.algebra.dimension


PROPERTY_ALGEBRAS = [
    nakayama_cyclic(3, 2),
    nakayama_cyclic(4, 3),
    nakayama_linear(4, uniform_length=2),
    glue_at_vertex(nakayama_cyclic(3, 2), "1", nakayama_cyclic(2, 2), "1", names=("X", "Y")).algebra,
    connect_by_arrow(nakayama_cyclic(2, 2), "1", nakayama_linear(3), "2", names=("B", "A")).algebra,
]


@pytest.mark.parametrize("algebra", PROPERTY_ALGEBRAS, ids=lambda a: repr(a))
def test_multiplication_is_associative(algebra):
    n = algebra.dimension

    def times(i, j):
        return None if i is None or j is None else algebra.product(i, j)

    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert times(times(i, j), k) == times(i, times(j, k)), (i, j, k)


@pytest.mark.parametrize("algebra", PROPERTY_ALGEBRAS, ids=lambda a: repr(a))
def test_peirce_pieces_add_up_to_the_basis(algebra):
    total = sum(len(algebra.paths_between(v, w)) for v in algebra.vertices for w in algebra.vertices)
    assert total == algebra.dimension


def _renamed(algebra, rename):
    arrows = {(a.label, rename.get(a.source, a.source), rename.get(a.target, a.target)) for a in algebra.arrows}
    vertices = {rename.get(v, v) for v in algebra.vertices}
    return vertices, arrows, set(algebra.ideal.generators)


@pytest.mark.parametrize("first,second", [
    (nakayama_cyclic(3, 2), nakayama_cyclic(2, 2)),
    (nakayama_cyclic(4, 2), nakayama_linear(3)),
    (nakayama_linear(3, uniform_length=2), nakayama_cyclic(3, 3)),
])
def test_vertex_gluing_is_symmetric_up_to_the_glued_label(first, second):
    ab = glue_at_vertex(first, "1", second, "1", names=("X", "Y"))
    ba = glue_at_vertex(second, "1", first, "1", names=("Y", "X"))
    assert (ab.glued_vertex, ba.glued_vertex) == ("X_1", "Y_1")
    assert ab.algebra.dimension == ba.algebra.dimension
    assert sorted(p.length for p in ab.algebra.basis) == sorted(p.length for p in ba.algebra.basis)
    assert _renamed(ab.algebra, {}) == _renamed(ba.algebra, {"Y_1": "X_1"})


@pytest.mark.parametrize("algebra", PROPERTY_ALGEBRAS, ids=lambda a: repr(a))
def test_opposite_keeps_path_lengths(algebra):
    op = algebra.opposite()
    assert sorted(p.length for p in op.basis) == sorted(p.length for p in algebra.basis)
    assert sum(len(op.paths_between(w, v)) for v in algebra.vertices for w in algebra.vertices) == op.dimension
    for v in algebra.vertices:
        for w in algebra.vertices:
            assert len(op.paths_between(w, v)) == len(algebra.paths_between(v, w))
    assert op.opposite() is algebra
