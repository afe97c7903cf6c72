from __future__ import annotations

import random

import pytest

from gprojlab.core import linalg as la
from gprojlab.errors import RelationViolation, ShapeMismatch
from gprojlab.rep import (
    Representation,
    direct_sum,
    dual,
    hom_basis,
    hom_dim,
    injective,
    is_projective,
    kernel,
    projective,
    simple,
    truncated_projective,
    validate_rep,
)
from gprojlab.rep.ops import is_injective
from gprojlab.rep.representation import ensure_valid
from gprojlab.rep.sampling import random_short_exact, sample_modules


def _one(algebra):
    K = algebra.domain
    return la.from_rows([[K.one]], 1, 1, K)


def test_indecomposable_projectives(s3, a2):
    assert projective(s3, "1").dimension_vector() == (1, 0, 1)
    assert projective(s3, "2").dimension_vector() == (1, 1, 0)
    assert projective(a2, "2").dimension_vector() == (1, 1)
    assert injective(a2, "1").dimension_vector() == (1, 1)
    assert injective(a2, "2").dimension_vector() == (0, 1)


def test_dims_one_one_with_identity_arrow_is_projective(s3):
    # dims (1,1,0) with a1 = [1]: the projective at the source of a1
    m = ensure_valid(Representation(s3, {"1": 1, "2": 1}, {"a1": _one(s3)}))
    assert is_projective(m)
    assert m.same_as(projective(s3, "2"))


def test_projective_injective_over_selfinjective(s3):
    for v in s3.vertices:
        assert is_projective(projective(s3, v))
        assert is_injective(projective(s3, v))
        assert not is_projective(simple(s3, v))


def test_relation_violation_is_reported(s3):
    one = _one(s3)
    m = Representation(s3, {"1": 1, "2": 1, "3": 1}, {"a1": one, "a2": one, "a3": one})
    assert validate_rep(m) is not None
    with pytest.raises(RelationViolation):
        ensure_valid(m)


def test_wrong_matrix_shape(a2):
    K = a2.domain
    with pytest.raises(ShapeMismatch):
        Representation(a2, {"1": 1, "2": 1}, {"a1": la.zeros(2, 1, K)})
    with pytest.raises(ShapeMismatch):
        Representation(a2, {"3": 1})


def test_hom_dimensions(a2, s3):
    p2, s1, s2 = projective(a2, "2"), simple(a2, "1"), simple(a2, "2")
    assert hom_dim(p2, s2) == 1
    assert hom_dim(p2, s1) == 0
    assert hom_dim(s1, p2) == 1
    for v in s3.vertices:
        m = direct_sum([projective(s3, u) for u in s3.vertices]).module
        assert hom_dim(projective(s3, v), m) == m.dims[v]


def test_hom_basis_morphisms_commute(s3):
    modules = sample_modules(s3, 4, seed=3, max_dim=6)
    for m in modules:
        for n in modules:
            basis = hom_basis(m, n)
            assert basis.dim == len(basis.morphisms)
            assert all(f.commutes() for f in basis.morphisms)


def test_duality_is_involutive(s3):
    for m in sample_modules(s3, 5, seed=11, max_dim=6):
        d = dual(m)
        assert d.algebra == s3.opposite()
        assert dual(d).same_as(m)


def test_uniserials_over_triangle(s3):
    u = truncated_projective(s3, "1", 1)
    assert u.same_as(simple(s3, "1"))
    assert truncated_projective(s3, "1", 2).dimension_vector() == (1, 0, 1)


def test_sampling_is_seeded(s3):
    first = sample_modules(s3, 6, seed=5, max_dim=7)
    second = sample_modules(s3, 6, seed=5, max_dim=7)
    assert all(x.same_as(y) for x, y in zip(first, second))
    assert all(m.total_dim <= 7 for m in first)
    assert all(validate_rep(m) is None for m in first)


def test_random_short_exact_is_exact(a2):
    rng = random.Random(2)
    for _ in range(5):
        s = random_short_exact(a2, rng, max_dim=6)
        assert s.inclusion.is_injective()
        assert s.projection.is_surjective()
        assert s.inclusion.then(s.projection).is_zero()
        assert s.sub.total_dim + s.quot.total_dim == s.middle.total_dim


def test_kernel_inclusion(a2):
    p2 = projective(a2, "2")
    (f,) = hom_basis(p2, simple(a2, "2")).morphisms
    sub, inclusion = kernel(f)
    assert sub.dimension_vector() == (1, 0)
    assert inclusion.is_injective()


def _conjugate(m, rng):
    """An isomorphic copy of m: base change at each vertex by a random unitriangular matrix."""
    K = m.domain
    change, back = {}, {}
    for v, d in m.dims.items():
        g = la.from_rows([[1 if i == j else (rng.randint(-2, 2) if j > i else 0) for j in range(d)] for i in range(d)], d, d, K)
        change[v] = g
        back[v] = la.inverse(g)
    maps = {}
    for a in m.algebra.arrows:
        maps[a.label] = la.chain(change[a.target], m.maps[a.label], back[a.source])
    return Representation(m.algebra, m.dims, maps)


@pytest.mark.parametrize("name", ["s3", "a2", "two_loop"])
def test_hom_dim_is_invariant_under_isomorphism(name, request):
    algebra = request.getfixturevalue(name)
    rng = random.Random(31)
    modules = sample_modules(algebra, 8, seed=17, max_dim=6)
    for m in modules:
        m2 = _conjugate(m, rng)
        assert validate_rep(m2) is None
        for n in modules[:4]:
            n2 = _conjugate(n, rng)
            assert hom_dim(m2, n2) == hom_dim(m, n)
            assert hom_dim(n2, m2) == hom_dim(n, m)
