from __future__ import annotations

import pytest

from gprojlab.core import connect_by_arrow, glue_at_vertex, nakayama_cyclic, nakayama_linear, single_vertex
from gprojlab.errors import GluingError, NotGorenstein, VerificationFailure
from gprojlab.glue import ArrowRecollement, VertexGluingFunctors, extension_into
from gprojlab.glue.verify import (
    check_defect_hypothesis,
    gd_bound_check,
    verify_gproj_decomposition,
    verify_recollement,
)
from gprojlab.homalg import is_isomorphic
from gprojlab.rep import Representation, is_projective, projective, simple
from gprojlab.rep.sampling import sample_modules

GD2 = nakayama_linear(3, uniform_length=2)


def test_triples_round_trip(arrow_s3):
    r = ArrowRecollement(arrow_s3)
    assert r.v == "2" and r.w == "1"
    assert r.orientation == "B_1 -> A_2"
    for t in sample_modules(r.algebra, 6, seed=1, max_dim=8):
        assert r.assemble_triple(r.split_triple(t)).same_as(t)


def test_recollement_identities_on_objects(arrow_s3):
    r = ArrowRecollement(arrow_s3)
    for x in sample_modules(r.a_algebra, 4, seed=2, max_dim=5):
        assert r.j_star(r.i_star(x)).is_zero()
        assert r.i_shriek(r.i_star(x)).same_as(x)
    for y in sample_modules(r.b_algebra, 4, seed=3, max_dim=5):
        assert r.i_upper_star(r.j_lower_shriek(y)).is_zero()
        assert r.j_star(r.j_lower_shriek(y)).same_as(y)
        assert r.j_star(r.j_lower_star(y)).same_as(y)


def test_j_shriek_sends_projectives_to_projectives(arrow_s3):
    r = ArrowRecollement(arrow_s3)
    for w in r.b_algebra.vertices:
        image = r.j_lower_shriek(projective(r.b_algebra, w))
        assert is_projective(image)
        assert is_isomorphic(image, projective(r.algebra, r.b_embedding.vertex(w))).yes


def test_functors_check_node_kind(arrow_s3, glued_s3):
    with pytest.raises(GluingError):
        ArrowRecollement(glued_s3)
    with pytest.raises(GluingError):
        VertexGluingFunctors(arrow_s3)


def test_verify_arrow_recollement(arrow_s3):
    logged = []
    witness = verify_recollement(arrow_s3, sample=6, seed=1, max_dim=6,
                                 log=lambda message, data=None: logged.append(message))
    assert witness.passed
    assert witness.kind == "arrow"
    names = {r.name for r in witness.records}
    assert {"triple round trip", "adjunction j_! -| j^*", "j^* exact"} <= names
    assert logged[-1] == "recollement checks passed"


def test_verify_arrow_recollement_over_two_loops(two_loop):
    glued = connect_by_arrow(two_loop, "1", single_vertex(), "1", names=("B", "A"))
    assert verify_recollement(glued, sample=5, seed=2, max_dim=5).passed


def test_verify_vertex_functors(glued_s3):
    witness = verify_recollement(glued_s3, sample=6, seed=1, max_dim=6)
    assert witness.passed
    assert witness.kind == "vertex"
    names = {r.name for r in witness.records}
    assert "adjunction j_lambda -| j" in names
    assert "i_rho preserves injectives" in names


def test_corrupted_functor_is_caught(arrow_s3):
    class DroppingShriek(ArrowRecollement):
        def i_shriek(self, t: Representation) -> Representation:
            return Representation(self.a_algebra, {})

    with pytest.raises(VerificationFailure) as info:
        verify_recollement(arrow_s3, sample=4, seed=0, max_dim=5, recollement=DroppingShriek(arrow_s3))
    assert info.value.check == "i^! i_* = id"
    assert "x" in info.value.counterexample


def test_extension_into_leaf(glued_s3):
    extend = extension_into(glued_s3, "Y")
    image = extend(simple(glued_s3.b_part.algebra, "2"))
    assert image.dims["Y_2"] == 1
    assert image.total_dim == 1
    with pytest.raises(KeyError):
        extension_into(glued_s3, "Z")


def test_defect_hypothesis_holds_for_selfinjective_source(arrow_s3):
    result = check_defect_hypothesis(arrow_s3)
    assert result["copies"] == 1
    assert result["b_selfinjective"] is True
    assert result["hypothesis_holds"] is True
    assert result["certificate"].value == 0


def test_defect_hypothesis_fails_for_two_loops(two_loop):
    glued = connect_by_arrow(two_loop, "1", single_vertex(), "1", names=("B", "A"))
    result = check_defect_hypothesis(glued)
    assert result["hypothesis_holds"] is False
    assert result["certificate"].infinite
    assert result["b_selfinjective"] is False


@pytest.mark.parametrize("source,w,target,v,expected", [
    (nakayama_cyclic(3, 2), "1", nakayama_linear(2), "2", 1),
    (nakayama_linear(2), "2", nakayama_cyclic(3, 2), "1", 1),
    (single_vertex(), "1", GD2, "3", 2),
    (nakayama_linear(2), "1", GD2, "1", 2),
    (GD2, "3", nakayama_cyclic(3, 2), "2", 2),
])
def test_arrow_gd_is_max_when_parts_differ(source, w, target, v, expected):
    glued = connect_by_arrow(source, w, target, v, names=("B", "A"))
    verdict = gd_bound_check(glued)
    assert verdict.passed
    (node,) = verdict.evidence["nodes"]
    assert node["rule"] == "Gd = max(Gd A, Gd B)"
    assert node["gd"] == expected


def test_arrow_gd_bounds_for_equal_parts(s3):
    glued = connect_by_arrow(s3, "1", s3, "1", names=("B", "A"))
    verdict = gd_bound_check(glued)
    assert verdict.passed
    (node,) = verdict.evidence["nodes"]
    assert node["gd"] in (0, 1)


def test_vertex_gd_bound(glued_s3):
    verdict = gd_bound_check(glued_s3)
    assert verdict.passed
    assert verdict.evidence["nodes"][0]["rule"] == "Gd <= max(1, Gd A, Gd B)"


def test_vertex_gd_bound_over_a_tree(s3, a2):
    inner = glue_at_vertex(s3, "1", a2, "1", names=("X", "L"))
    outer = glue_at_vertex(inner, "L_2", GD2, "1", names=(None, "Y"))
    verdict = gd_bound_check(outer)
    assert verdict.passed
    assert len(verdict.evidence["nodes"]) == 2


def test_gd_bounds_need_gorenstein_parts(two_loop, s3):
    glued = connect_by_arrow(two_loop, "1", s3, "1", names=("B", "A"))
    with pytest.raises(NotGorenstein):
        gd_bound_check(glued)


def test_gproj_decomposition_of_glued_triangles(glued_s3):
    verdict = verify_gproj_decomposition(glued_s3)
    assert verdict.passed
    assert verdict.evidence["objects"] == 6
    assert [c["count"] for c in verdict.evidence["components"]] == [3, 3]
    assert verdict.evidence["closure_added"] == 0


def test_gproj_decomposition_through_a_linear_piece(s3, a2):
    inner = glue_at_vertex(s3, "1", a2, "1", names=("X", "L"))
    outer = glue_at_vertex(inner, "L_2", s3, "1", names=(None, "Y"))
    verdict = verify_gproj_decomposition(outer)
    assert verdict.passed
    assert [c["count"] for c in verdict.evidence["components"]] == [3, 0, 3]


@pytest.mark.parametrize("first,second", [
    ((3, 2), (4, 2)),
    ((2, 2), (3, 2)),
    ((4, 2), (4, 2)),
    ((2, 2), (2, 2)),
    ((3, 3), (2, 2)),
])
def test_vertex_gluings_of_selfinjectives_have_gd_at_most_one(first, second):
    glued = glue_at_vertex(nakayama_cyclic(*first), "1", nakayama_cyclic(*second), "1", names=("X", "Y"))
    verdict = gd_bound_check(glued)
    assert verdict.passed
    (node,) = verdict.evidence["nodes"]
    assert node["rule"] == "Gd <= max(1, Gd A, Gd B)"
    assert node["gd"] <= 1


def test_gproj_decomposition_of_three_triangles_at_one_vertex(glued_s3, s3):
    three = glue_at_vertex(glued_s3, "X_1", s3, "1", names=(None, "Z"))
    assert [c.name for c in three.leaves()] == ["X", "Y", "Z"]
    verdict = verify_gproj_decomposition(three)
    assert verdict.passed
    assert verdict.evidence["objects"] == 9
    assert [c["count"] for c in verdict.evidence["components"]] == [3, 3, 3]
    assert verdict.evidence["closure_added"] == 0


def test_gproj_decomposition_across_an_arrow(s3):
    glued = connect_by_arrow(s3, "1", s3, "1", names=("B", "A"))
    verdict = verify_gproj_decomposition(glued)
    assert verdict.passed
    assert verdict.evidence["objects"] == 6
    assert sorted(c["count"] for c in verdict.evidence["components"]) == [3, 3]
    assert verdict.evidence["closure_added"] == 0
