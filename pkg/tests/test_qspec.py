from __future__ import annotations

import json
import random

import pytest

from gprojlab.core import BaseField, nakayama_cyclic
from gprojlab.errors import NotAdmissible, RelationViolation, ShapeMismatch, SpecSyntaxError
from gprojlab.qspec import algebra_to_text, emit_report, module_to_text, parse_algebra, parse_module
from gprojlab.qspec.lexer import tokenize
from gprojlab.rep import projective


def test_tokens_carry_positions():
    tokens = tokenize("algebra A;\n  arrows: a: 2 -> 1, b: 3/4;")
    kinds = [t.kind for t in tokens]
    assert kinds[:3] == ["NAME", "NAME", ";"]
    arrow = next(t for t in tokens if t.kind == "ARROW")
    assert (arrow.line, arrow.column) == (2, 16)
    assert any(t.kind == "NUMBER" and t.text == "3/4" for t in tokens)
    assert kinds[-1] == "EOF"


def test_nakayama_document(fixture_text):
    parsed = parse_algebra(fixture_text("s3.quiv"))
    assert parsed.kind == "nakayama"
    assert parsed.algebra == nakayama_cyclic(3, 2)
    assert parsed.glued is None


def test_raw_document(fixture_text, a2):
    parsed = parse_algebra(fixture_text("a2.quiv"))
    assert parsed.name == "A2"
    assert parsed.kind == "raw"
    assert parsed.algebra.dimension == a2.dimension
    assert list(parsed.components) == ["A2"]


def test_linear_nakayama_with_zero_relations():
    parsed = parse_algebra("nakayama linear n=4 zero=4:2, 3:2")
    assert parsed.algebra.ideal.generators == (("a2", "a1"), ("a3", "a2"))
    assert parsed.algebra.dimension == 4 + 3
    with pytest.raises(ValueError):
        parse_algebra("nakayama linear n=4 zero=3:3")


def test_glue_document(fixture_text):
    parsed = parse_algebra(fixture_text("glued_s3.quiv"))
    assert parsed.kind == "glue"
    assert parsed.triangles == 2
    assert sorted(parsed.components) == ["X", "Y"]
    assert parsed.glued is not None and parsed.glued.kind == "vertex"
    assert parsed.algebra.dimension == 13


def test_connect_document(fixture_text):
    parsed = parse_algebra(fixture_text("arrow_s3.quiv"))
    glued = parsed.glued
    assert glued is not None and glued.kind == "arrow"
    assert glued.connecting_arrow == ("c", "B_1", "A_2")
    assert parsed.algebra.dimension == 13


def test_chained_glue_document(fixture_text):
    parsed = parse_algebra(fixture_text("ct_a_3.quiv"))
    assert parsed.triangles == 3
    assert [c.name for c in parsed.glued.leaves()] == ["X", "L", "Y", "Z"]
    assert len(list(parsed.glued.nodes())) == 3


def test_syntax_error_position(fixture_text):
    with pytest.raises(SpecSyntaxError) as info:
        parse_algebra(fixture_text("bad_syntax.quiv"))
    assert (info.value.line, info.value.column) == (3, 15)
    assert info.value.to_dict()["line"] == 3


@pytest.mark.parametrize("text,line", [
    ("algebra A;\nvertices: 1;\narrows: a: 1 -> 2;", 2),
    ("algebra A;\nvertices: 1 2;\narrows: a: 2 -> 1;\nrelations: b.a;", 2),
    ("algebra A;\nvertices: 1;\nvertices: 2;", 3),
    ("algebra A;\nvertices: 1;\nfield: p=4;", 3),
    ("nakayama cyclic n=3", 1),
    ("glue G {\n comp X = nakayama cyclic n=3 len=2;\n identify X.1 = X.2;\n}", 3),
    ("glue G {\n comp X = nakayama cyclic n=3 len=2;\n comp Y = nakayama cyclic n=3 len=2;\n}", 4),
    ("glue G {\n comp X = nakayama cyclic n=3 len=2;\n identify X.1 = Q.1;\n}", 3),
    ("algebra A;\nvertices: 1;\nextra", 3),
])
def test_document_errors(text, line):
    with pytest.raises(SpecSyntaxError) as info:
        parse_algebra(text)
    assert info.value.line == line


def test_semantic_errors_keep_their_type(fixture_text):
    with pytest.raises(NotAdmissible):
        parse_algebra(fixture_text("not_admissible.quiv"))


def test_invalid_utf8_is_a_syntax_error():
    with pytest.raises(SpecSyntaxError):
        parse_algebra(b"algebra A;\nvertices: \xff;")


def test_field_clause_and_override():
    text = "algebra A;\nvertices: 1 2;\narrows: a: 2 -> 1;\nfield: p=5;"
    assert parse_algebra(text).algebra.field.label() == "p=5"
    assert parse_algebra(text, BaseField.prime(7)).algebra.field.label() == "p=7"
    assert parse_algebra("nakayama cyclic n=3 len=2", BaseField.prime(3)).algebra.field.label() == "p=3"


def test_algebra_text_reparses(fixture_text):
    original = parse_algebra(fixture_text("glued_s3.quiv")).algebra
    text = algebra_to_text(original, name="G")
    assert parse_algebra(text).algebra == original
    prime = nakayama_cyclic(3, 2, field=BaseField.prime(7))
    assert "field: p=7;" in algebra_to_text(prime)
    assert parse_algebra(algebra_to_text(prime)).algebra == prime


def test_module_documents(a2, s3):
    m = parse_module("module M;\ndims: 1=1 2=1;\nmap a1 = [[1]];", a2)
    assert m.same_as(projective(a2, "2"))
    assert parse_module(module_to_text(m), a2).same_as(m)
    half = parse_module("module H; dims: 1=1 2=1; map a1 = [[1/2]];", a2)
    assert half.to_dict()["maps"]["a1"] == [["1/2"]]


def test_module_errors(a2, s3):
    with pytest.raises(ShapeMismatch) as info:
        parse_module("module M;\ndims: 1=1 2=1;\nmap a1 = [[1, 0]];", a2)
    assert "line 3" in str(info.value)
    with pytest.raises(RelationViolation):
        parse_module("module M; dims: 1=1 2=1 3=1; map a1 = [[1]]; map a2 = [[1]]; map a3 = [[1]];", s3)
    with pytest.raises(SpecSyntaxError):
        parse_module("module M; dims: 9=1;", a2)
    with pytest.raises(SpecSyntaxError):
        parse_module("module M; dims: 1=1; map b = [[1]];", a2)


def test_emit_report_is_deterministic():
    report = {"schema": 1, "status": "pass", "command": "analyze", "source": "x", "b": [1, 2]}
    first = emit_report(report, "json")
    assert first == emit_report(dict(reversed(list(report.items()))), "json")
    assert list(json.loads(first)) == sorted(report)
    assert emit_report([], "md") == "[]\n"
    md = emit_report({"command": "analyze", "source": "x.quiv", "status": "pass", "exit_code": 0}, "md")
    assert md.startswith("# analyze: x.quiv")
    assert "Status: **pass** (exit 0)" in md


PUNCTUATION = ";:=,.{}[]->/#"


def _mutations(text: str, rng: random.Random, count: int):
    for _ in range(count):
        chars = list(text)
        for _ in range(rng.randint(1, 3)):
            i = rng.randrange(len(chars) + 1)
            if chars and rng.random() < 0.5:
                del chars[min(i, len(chars) - 1)]
            else:
                chars.insert(i, rng.choice(PUNCTUATION))
        yield "".join(chars)


def _parses_or_rejects(parse, source) -> None:
    try:
        parse(source)
    except ValueError:
        pass


def test_parser_is_total_on_random_bytes(a2):
    rng = random.Random(41)
    for _ in range(300):
        blob = bytes(rng.randrange(256) for _ in range(rng.randint(0, 64)))
        _parses_or_rejects(parse_algebra, blob)
        _parses_or_rejects(lambda b: parse_module(b, a2), blob)


@pytest.mark.parametrize("name", ["s3.quiv", "a2.quiv", "two_loop.quiv", "glued_s3.quiv", "arrow_s3.quiv"])
def test_parser_is_total_on_mutated_documents(name, fixture_text):
    rng = random.Random(43)
    for text in _mutations(fixture_text(name), rng, 60):
        _parses_or_rejects(parse_algebra, text)
        _parses_or_rejects(parse_algebra, text.encode("utf-8"))


def test_module_parser_is_total_on_mutated_documents(a2):
    rng = random.Random(47)
    for text in _mutations("module M;\ndims: 1=1 2=1;\nmap a1 = [[1/2]];", rng, 80):
        _parses_or_rejects(lambda t: parse_module(t, a2), text)
