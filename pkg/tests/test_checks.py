from __future__ import annotations

import pytest

from gprojlab.checks import CheckContext, check_names, get_check_class, list_check_specs, run_check
from gprojlab.engine.logging import RunLog
from gprojlab.errors import GluingError, VerificationFailure
from gprojlab.qspec import parse_algebra


def _ctx(log=None) -> CheckContext:
    return CheckContext(bound=None, seed=0, sample=4, max_dim=5, logger=log or RunLog())


def test_std_checks_registered():
    assert check_names() == ["ct-a", "decomposition", "defect-hypothesis", "gd-bounds", "recollement"]
    assert get_check_class("nope") is None


def test_check_specs_list_settings():
    specs = {s["type"]: s for s in list_check_specs()}
    assert specs["recollement"]["advanced_fields"] == ["node"]
    assert specs["recollement"]["required_fields"] is None
    assert specs["ct-a"]["advanced_fields"] == ["triangles"]
    assert specs["gd-bounds"]["settings_schema"] is None
    assert "passed" in specs["gd-bounds"]["output_schema"]["properties"]


def test_unknown_check():
    with pytest.raises(KeyError):
        run_check("nope", parse_algebra("nakayama cyclic n=3 len=2"), {}, _ctx())


def test_glue_checks_need_a_gluing(fixture_text):
    parsed = parse_algebra(fixture_text("s3.quiv"))
    for name in ("recollement", "decomposition", "gd-bounds", "defect-hypothesis"):
        with pytest.raises(GluingError):
            run_check(name, parsed, {}, _ctx())


def test_recollement_check_on_one_node(fixture_text):
    log = RunLog()
    parsed = parse_algebra(fixture_text("arrow_s3.quiv"))
    verdict = run_check("recollement", parsed, {"node": 0}, _ctx(log))
    assert verdict.passed
    assert verdict.evidence["nodes"][0]["kind"] == "arrow"
    assert any(entry.get("step") == "node 0" for entry in log.entries)
    with pytest.raises(ValueError):
        run_check("recollement", parsed, {"node": 5}, _ctx())


def test_gd_bounds_check(fixture_text):
    verdict = run_check("gd-bounds", parse_algebra(fixture_text("figure_chain.quiv")), {}, _ctx())
    assert verdict.passed
    assert [n["kind"] for n in verdict.evidence["nodes"]] == ["vertex", "vertex"]


def test_decomposition_check(fixture_text):
    verdict = run_check("decomposition", parse_algebra(fixture_text("glued_s3.quiv")), {}, _ctx())
    assert verdict.passed
    assert verdict.evidence["objects"] == 6


def test_defect_hypothesis_check(fixture_text):
    verdict = run_check("defect-hypothesis", parse_algebra(fixture_text("arrow_s3.quiv")), {}, _ctx())
    assert verdict.passed
    assert verdict.evidence["arrows"][0]["pd"] == "0"


def test_defect_hypothesis_negative_control(fixture_text):
    parsed = parse_algebra(fixture_text("defect_negative.quiv"))
    with pytest.raises(VerificationFailure) as info:
        run_check("defect-hypothesis", parsed, {}, _ctx())
    assert info.value.counterexample["pd"] == "inf"
    assert info.value.counterexample["vertex_w"] == "1"


def test_defect_hypothesis_needs_an_arrow(fixture_text):
    with pytest.raises(GluingError):
        run_check("defect-hypothesis", parse_algebra(fixture_text("glued_s3.quiv")), {}, _ctx())


@pytest.mark.parametrize("name,t", [("ct_a_1.quiv", 1), ("glued_s3.quiv", 2), ("figure_chain.quiv", 2), ("ct_a_3.quiv", 3)])
def test_ct_a_counts(fixture_text, name, t):
    verdict = run_check("ct-a", parse_algebra(fixture_text(name)), {}, _ctx())
    assert verdict.passed
    assert verdict.evidence["objects"] == 3 * t
    assert len(verdict.evidence["blocks"]) == t
    assert verdict.evidence["gd"] <= 1


def test_ct_a_declared_count_must_match(fixture_text):
    parsed = parse_algebra(fixture_text("glued_s3.quiv"))
    with pytest.raises(VerificationFailure) as info:
        run_check("ct-a", parsed, {"triangles": 3}, _ctx())
    assert info.value.counterexample["declared"] == 3


def test_ct_a_needs_a_count(fixture_text):
    parsed = parse_algebra(fixture_text("s3.quiv"))
    with pytest.raises(ValueError):
        run_check("ct-a", parsed, {}, _ctx())
    assert run_check("ct-a", parsed, {"triangles": 1}, _ctx()).passed
