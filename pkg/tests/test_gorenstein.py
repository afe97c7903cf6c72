from __future__ import annotations

import pytest

from gprojlab.core import nakayama_cyclic, nakayama_linear
from gprojlab.errors import NotGorenstein, UnmatchedSyzygy
from gprojlab.gorenstein import (
    gorenstein_report,
    gproj_indecomposables,
    is_gproj,
    omega_stable_orbits,
    projective_factoring_dim,
    stable_hom_dim,
    stable_table,
)
from gprojlab.homalg import syzygy
from gprojlab.rep import direct_sum, projective, simple
from gprojlab.rep.sampling import sample_pairs


def test_selfinjective_triangle(s3):
    report = gorenstein_report(s3)
    assert report.gorenstein is True
    assert report.gd == 0
    assert report.selfinjective is True
    assert report.consistent is True
    assert report.certified
    assert report.status == "certified"
    # simples are periodic, so no finite global dimension
    assert report.global_dimension is None


@pytest.mark.parametrize("algebra,gd", [
    (nakayama_linear(2), 1),
    (nakayama_linear(3), 1),
    (nakayama_linear(3, uniform_length=2), 2),
    (nakayama_linear(4, uniform_length=2), 3),
])
def test_finite_global_dimension_gives_gd(algebra, gd):
    report = gorenstein_report(algebra)
    assert report.gorenstein is True
    assert report.gd == gd
    assert report.global_dimension == gd
    assert report.selfinjective is False


def test_cyclic_nakayama_with_longer_relations():
    report = gorenstein_report(nakayama_cyclic(2, 3))
    assert report.gorenstein is True
    assert report.gd == 0


def test_two_loops_are_not_gorenstein(two_loop):
    report = gorenstein_report(two_loop)
    assert report.gorenstein is False
    assert report.gd is None
    assert report.status == "not gorenstein"
    assert report.id_projectives["1"].infinite


def test_small_bound_leaves_verdict_open(two_loop):
    report = gorenstein_report(two_loop, bound=1)
    assert report.gorenstein is None
    assert report.status == "unknown at bound 1"
    assert not report.certified


def test_is_gproj_over_hereditary(a2):
    report = gorenstein_report(a2)
    verdict = is_gproj(simple(a2, "2"), report)
    assert verdict.gproj is False
    assert verdict.failing_degree == 1
    assert verdict.mode == "certified"
    assert is_gproj(projective(a2, "2"), report).gproj is True


def test_is_gproj_needs_certificate_or_heuristic(two_loop):
    report = gorenstein_report(two_loop)
    with pytest.raises(NotGorenstein):
        is_gproj(simple(two_loop, "1"), report)
    verdict = is_gproj(simple(two_loop, "1"), report, heuristic=True)
    assert verdict.mode == "heuristic"
    assert verdict.certified is False
    assert verdict.gproj is False


def test_triangle_gproj_list(s3):
    report = gorenstein_report(s3, with_simples=False)
    found = gproj_indecomposables(s3, report)
    assert found.strategy == "nakayama"
    assert found.complete is True
    assert len(found) == 3
    assert sorted(found.labels) == ["U(1,1)", "U(2,1)", "U(3,1)"]
    assert sorted(found.dimension_vectors) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_triangle_stable_table_and_orbit(s3):
    report = gorenstein_report(s3, with_simples=False)
    found = gproj_indecomposables(s3, report)
    table = stable_table(found.modules, found.labels)
    assert table.matrix == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    orbits = omega_stable_orbits(found.modules, labels=found.labels)
    assert len(orbits.orbits) == 1
    assert sorted(orbits.orbits[0]) == [0, 1, 2]
    assert all(orbits.sigma[orbits.omega[i]] == i for i in range(3))


def test_hereditary_has_no_gproj(a2):
    report = gorenstein_report(a2, with_simples=False)
    found = gproj_indecomposables(a2, report)
    assert len(found) == 0
    assert found.complete is True


def test_gd2_linear_nakayama_has_no_gproj():
    algebra = nakayama_linear(3, uniform_length=2)
    found = gproj_indecomposables(algebra, gorenstein_report(algebra, with_simples=False))
    assert len(found) == 0


def test_enumeration_refuses_non_gorenstein(two_loop):
    report = gorenstein_report(two_loop, with_simples=False)
    with pytest.raises(NotGorenstein):
        gproj_indecomposables(two_loop, report)
    with pytest.raises(NotGorenstein):
        gproj_indecomposables(two_loop, report, heuristic=True)


def test_stable_hom_kills_projective_factorizations(s3):
    p1, s1 = projective(s3, "1"), simple(s3, "1")
    assert projective_factoring_dim(p1, s1) == 1
    assert stable_hom_dim(p1, s1) == 0
    assert stable_hom_dim(s1, s1) == 1
    assert stable_hom_dim(s1, simple(s3, "2")) == 0


def test_unmatched_syzygy(s3):
    with pytest.raises(UnmatchedSyzygy):
        omega_stable_orbits([simple(s3, "1")])


def test_glued_triangles_gproj(glued_s3):
    report = gorenstein_report(glued_s3.algebra, with_simples=False)
    assert report.certified
    assert report.gd is not None and report.gd <= 1
    found = gproj_indecomposables(glued_s3.algebra, report, glued=glued_s3)
    assert found.strategy == "gluing"
    assert found.complete is True
    assert len(found) == 6
    assert sorted({label.split(":")[0] for label in found.labels}) == ["X", "Y"]
    orbits = omega_stable_orbits(found.modules, labels=found.labels)
    assert sorted(len(o) for o in orbits.orbits) == [3, 3]


def test_enumeration_is_deterministic(glued_s3):
    report = gorenstein_report(glued_s3.algebra, with_simples=False)
    first = gproj_indecomposables(glued_s3.algebra, report, glued=glued_s3, seed=4)
    second = gproj_indecomposables(glued_s3.algebra, report, glued=glued_s3, seed=4)
    assert first.model_dump() == second.model_dump()


def test_syzygy_preserves_stable_hom(glued_s3, s3):
    report = gorenstein_report(glued_s3.algebra, with_simples=False)
    found = gproj_indecomposables(glued_s3.algebra, report, glued=glued_s3)
    omegas = [syzygy(m) for m in found.modules]
    for m, om in zip(found.modules, omegas):
        for n, on in zip(found.modules, omegas):
            assert stable_hom_dim(om, on) == stable_hom_dim(m, n)
    # over a selfinjective algebra every module is Gorenstein projective
    for m, n in sample_pairs(s3, 15, seed=19, max_dim=5):
        assert stable_hom_dim(syzygy(m), syzygy(n)) == stable_hom_dim(m, n)


@pytest.mark.parametrize("name", ["a2", "gd2", "glued"])
def test_gproj_of_direct_sum_needs_both_summands(name, a2, glued_s3):
    algebra = {"a2": a2, "gd2": nakayama_linear(3, uniform_length=2), "glued": glued_s3.algebra}[name]
    report = gorenstein_report(algebra, with_simples=False)
    assert report.certified
    pairs = sample_pairs(algebra, 10, seed=23, max_dim=5)
    if name == "glued":
        found = gproj_indecomposables(algebra, report, glued=glued_s3)
        pairs += [(found.modules[0], found.modules[1]), (found.modules[0], simple(algebra, "X_2"))]
    for m, n in pairs:
        both = is_gproj(m, report).gproj and is_gproj(n, report).gproj
        assert is_gproj(direct_sum([m, n]).module, report).gproj == both
