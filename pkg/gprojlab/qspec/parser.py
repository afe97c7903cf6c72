"""Recursive-descent parser for ``.quiv`` algebra and module documents.

Algebra documents come in three shapes::

    algebra A;
    vertices: 1 2 3;
    arrows: a: 2 -> 1, b: 3 -> 2;
    relations: b.a;

    nakayama cyclic n=3 len=2

    glue G {
      comp X = nakayama cyclic n=3 len=2;
      comp L = { vertices: 1 2; arrows: a: 2 -> 1; };
      identify X.1 = L.1;
      connect L.2 -> X.3 as c;
      triangles 1;
    }

Module documents::

    module M;
    dims: 1=1 2=1;
    map a1 = [[1]];

Relation paths are written in application order: ``a.b`` is a, then b.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from ..core.algebra import BoundAlgebra, build_algebra, make_ideal, make_quiver
from ..core.constructors import nakayama_cyclic, nakayama_linear
from ..core.field import BaseField
from ..core.gluing import Component, GluedAlgebra, Part, connect_by_arrow, glue_at_vertex
from ..errors import GluingError, ShapeMismatch, SpecSyntaxError
from ..rep.representation import Representation, ensure_valid
from ..core import linalg as la
from .lexer import Token, tokenize

Source = Union[str, bytes]


@dataclass
class ParsedAlgebra:
    name: str
    kind: str
    algebra: BoundAlgebra
    glued: Optional[GluedAlgebra] = None
    triangles: Optional[int] = None
    components: Dict[str, BoundAlgebra] = field(default_factory=dict)


@dataclass
class _Tree:
    part: Part
    members: List[str]


def _decode(text: Source) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecSyntaxError(1, exc.start + 1, "input is not valid UTF-8") from exc
    return text


class _Parser:
    def __init__(self, text: Source, field: Optional[BaseField]) -> None:
        self.tokens = tokenize(_decode(text))
        self.pos = 0
        self.field = field

    # token helpers
    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, reason: str, token: Optional[Token] = None) -> SpecSyntaxError:
        tok = token or self.current
        return SpecSyntaxError(tok.line, tok.column, reason)

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        tok = self.current
        if tok.kind == kind and (text is None or tok.text == text):
            return self.advance()
        return None

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self.accept(kind, text)
        if tok is None:
            wanted = text or kind
            found = self.current.text or "end of input"
            raise self.error(f"expected {wanted!r}, found {found!r}")
        return tok

    def keyword(self, word: str) -> Token:
        return self.expect("NAME", word)

    def name(self) -> Token:
        """A label: identifier or unsigned integer."""
        tok = self.current
        if tok.kind == "NAME" or (tok.kind == "NUMBER" and tok.text.isdigit()):
            return self.advance()
        raise self.error(f"expected a name, found {tok.text or 'end of input'!r}")

    def integer(self) -> int:
        tok = self.current
        if tok.kind == "NUMBER" and tok.text.lstrip("-").isdigit():
            self.advance()
            return int(tok.text)
        raise self.error(f"expected an integer, found {tok.text or 'end of input'!r}")

    def scalar(self, fld: BaseField):
        tok = self.expect("NUMBER")
        num, _, den = tok.text.partition("/")
        try:
            return fld.scalar(int(num), int(den) if den else 1)
        except ValueError as exc:
            raise self.error(str(exc), tok) from exc

    def at_end(self) -> None:
        if self.current.kind != "EOF":
            raise self.error(f"unexpected {self.current.text!r} after the document")

    # algebra documents
    def document(self) -> ParsedAlgebra:
        tok = self.current
        if tok.kind == "NAME" and tok.text == "algebra":
            self.advance()
            name = self.name().text
            self.expect(";")
            algebra = self.raw_body(closing="EOF")
            return ParsedAlgebra(name=name, kind="raw", algebra=algebra, components={name: algebra})
        if tok.kind == "NAME" and tok.text == "nakayama":
            algebra = self.nakayama()
            self.accept(";")
            return ParsedAlgebra(name="nakayama", kind="nakayama", algebra=algebra, components={"nakayama": algebra})
        if tok.kind == "NAME" and tok.text == "glue":
            parsed = self.glue()
            self.accept(";")
            return parsed
        raise self.error("expected 'algebra', 'nakayama' or 'glue'")

    def raw_body(self, closing: str) -> BoundAlgebra:
        start = self.current
        vertices: Optional[List[str]] = None
        arrows: List[Tuple[str, str, str]] = []
        relations: List[Tuple[str, ...]] = []
        fld: Optional[BaseField] = None
        seen = set()
        while self.current.kind != closing:
            clause = self.name()
            if clause.text in seen:
                raise self.error(f"clause {clause.text!r} given twice", clause)
            seen.add(clause.text)
            self.expect(":")
            if clause.text == "vertices":
                vertices = []
                while self.current.kind != ";":
                    vertices.append(self.name().text)
                    self.accept(",")
                if not vertices:
                    raise self.error("an algebra needs at least one vertex", clause)
                if len(set(vertices)) != len(vertices):
                    raise self.error("duplicate vertex label", clause)
            elif clause.text == "arrows":
                while self.current.kind != ";":
                    label = self.name()
                    self.expect(":")
                    src = self.name()
                    self.expect("ARROW")
                    tgt = self.name()
                    arrows.append((label.text, src.text, tgt.text))
                    if self.current.kind != ";":
                        self.expect(",")
            elif clause.text == "relations":
                while self.current.kind != ";":
                    path = [self.name().text]
                    while self.accept("."):
                        path.append(self.name().text)
                    relations.append(tuple(path))
                    if self.current.kind != ";":
                        self.expect(",")
            elif clause.text == "field":
                fld = self.field_clause()
            else:
                raise self.error(f"unknown clause {clause.text!r}", clause)
            self.expect(";")
        if vertices is None:
            raise self.error("missing 'vertices:' clause", start)
        declared = set(vertices)
        labels = set()
        for label, src, tgt in arrows:
            if label in labels:
                raise self.error(f"duplicate arrow label {label!r}", start)
            labels.add(label)
            for v in (src, tgt):
                if v not in declared:
                    raise self.error(f"arrow {label} uses unknown vertex {v!r}", start)
        ends = {label: (src, tgt) for label, src, tgt in arrows}
        for path in relations:
            for x in path:
                if x not in ends:
                    raise self.error(f"relation {'.'.join(path)} uses unknown arrow {x!r}", start)
            for x, y in zip(path, path[1:]):
                if ends[x][1] != ends[y][0]:
                    raise self.error(f"relation {'.'.join(path)} is not a path: {x} does not end where {y} starts", start)
            if len(path) < 2:
                raise self.error(f"relation {'.'.join(path)} has length < 2", start)
        return build_algebra(make_quiver(vertices, arrows), make_ideal(relations), self.field or fld)

    def field_clause(self) -> BaseField:
        tok = self.name()
        if tok.text == "rat":
            return BaseField.rational()
        if tok.text == "p":
            self.expect("=")
            p_tok = self.current
            p = self.integer()
            try:
                return BaseField.prime(p)
            except ValueError as exc:
                raise self.error(f"{p} is not a prime", p_tok) from exc
        raise self.error(f"unknown field {tok.text!r}; use 'rat' or 'p=<prime>'", tok)

    def nakayama(self) -> BoundAlgebra:
        self.keyword("nakayama")
        shape = self.name()
        if shape.text not in ("linear", "cyclic"):
            raise self.error("nakayama shape must be 'linear' or 'cyclic'", shape)
        params: Dict[str, object] = {}
        while self.current.kind == "NAME" and self.current.text in ("n", "len", "zero"):
            key = self.advance()
            if key.text in params:
                raise self.error(f"parameter {key.text!r} given twice", key)
            self.expect("=")
            if key.text == "zero":
                zeros = []
                while True:
                    start = self.integer()
                    self.expect(":")
                    zeros.append((start, self.integer()))
                    if not self.accept(","):
                        break
                params["zero"] = zeros
            else:
                params[key.text] = self.integer()
        if "n" not in params:
            raise self.error("nakayama needs n=<vertices>", shape)
        n = int(params["n"])  # type: ignore[arg-type]
        if shape.text == "cyclic":
            if "len" not in params:
                raise self.error("cyclic nakayama needs len=<relation length>", shape)
            if "zero" in params:
                raise self.error("zero= applies to linear nakayama only", shape)
            return nakayama_cyclic(n, int(params["len"]), field=self.field)  # type: ignore[arg-type]
        length = params.get("len")
        return nakayama_linear(n, params.get("zero", ()),  # type: ignore[arg-type]
                               uniform_length=int(length) if length is not None else None, field=self.field)  # type: ignore[arg-type]

    def glue(self) -> ParsedAlgebra:
        self.keyword("glue")
        name = self.name().text
        self.expect("{")
        trees: Dict[int, _Tree] = {}
        owner: Dict[str, int] = {}
        # comp name -> its vertices' current labels in the tree that holds it
        labels: Dict[str, Dict[str, str]] = {}
        leaves: Dict[str, BoundAlgebra] = {}
        triangles: Optional[int] = None
        next_id = 0
        while not self.accept("}"):
            stmt = self.name()
            if stmt.text == "comp":
                comp = self.name()
                if comp.text in owner:
                    raise self.error(f"component {comp.text!r} declared twice", comp)
                self.expect("=")
                part = self.component(comp.text)
                for leaf in part.leaves():
                    if leaf.name in leaves:
                        raise self.error(f"component name {leaf.name!r} used twice", comp)
                    leaves[leaf.name] = leaf.algebra
                trees[next_id] = _Tree(part, [comp.text])
                owner[comp.text] = next_id
                labels[comp.text] = {v: v for v in part.algebra.vertices}
                next_id += 1
            elif stmt.text in ("identify", "connect"):
                first, v1 = self.vertex_ref(owner, labels)
                if stmt.text == "identify":
                    self.expect("=")
                else:
                    self.expect("ARROW")
                second, v2 = self.vertex_ref(owner, labels)
                arrow_label = "c"
                if stmt.text == "connect" and self.accept("NAME", "as"):
                    arrow_label = self.name().text
                if owner[first] == owner[second]:
                    raise self.error(f"{first} and {second} already lie in one part; each step must join two parts", stmt)
                t1, t2 = trees.pop(owner[first]), trees.pop(owner[second])
                n1 = t1.part.name if isinstance(t1.part, Component) else None
                n2 = t2.part.name if isinstance(t2.part, Component) else None
                try:
                    if stmt.text == "identify":
                        node = glue_at_vertex(t1.part, labels[first][v1], t2.part, labels[second][v2], names=(n1, n2))
                        first_emb, second_emb = node.a_embedding, node.b_embedding
                    else:
                        node = connect_by_arrow(t1.part, labels[first][v1], t2.part, labels[second][v2],
                                                names=(n1, n2), label=arrow_label)
                        # the arrow's target side is the A part
                        first_emb, second_emb = node.b_embedding, node.a_embedding
                except GluingError as exc:
                    raise self.error(str(exc), stmt) from exc
                for members, emb in ((t1.members, first_emb), (t2.members, second_emb)):
                    for c in members:
                        labels[c] = {u: emb.vertex(cur) for u, cur in labels[c].items()}
                        owner[c] = next_id
                trees[next_id] = _Tree(node, t1.members + t2.members)
                next_id += 1
            elif stmt.text == "triangles":
                if triangles is not None:
                    raise self.error("'triangles' given twice", stmt)
                triangles = self.integer()
                if triangles < 0:
                    raise self.error("triangle count must be >= 0", stmt)
            else:
                raise self.error(f"unknown statement {stmt.text!r} in glue block", stmt)
            self.expect(";")
        if not trees:
            raise self.error(f"glue block {name!r} declares no components")
        if len(trees) > 1:
            parts = sorted(", ".join(t.members) for t in trees.values())
            raise self.error(f"glue block {name!r} leaves disconnected parts: {'; '.join(parts)}")
        part = next(iter(trees.values())).part
        glued = part if isinstance(part, GluedAlgebra) else None
        return ParsedAlgebra(name=name, kind="glue", algebra=part.algebra, glued=glued,
                             triangles=triangles, components=leaves)

    def component(self, name: str) -> Part:
        tok = self.current
        if self.accept("{"):
            return Component(name, self.raw_body_then("}"))
        if tok.kind == "NAME" and tok.text == "nakayama":
            return Component(name, self.nakayama())
        if tok.kind == "NAME" and tok.text == "glue":
            inner = self.glue()
            return inner.glued if inner.glued is not None else Component(name, inner.algebra)
        raise self.error("a component is 'nakayama ...', a nested 'glue' block or '{ vertices: ...; }'")

    def raw_body_then(self, closing: str) -> BoundAlgebra:
        algebra = self.raw_body(closing=closing)
        self.expect(closing)
        return algebra

    def vertex_ref(self, owner: Dict[str, int], labels: Dict[str, Dict[str, str]]) -> Tuple[str, str]:
        comp = self.name()
        if comp.text not in owner:
            raise self.error(f"unknown component {comp.text!r}", comp)
        self.expect(".")
        vertex = self.name()
        if vertex.text not in labels[comp.text]:
            raise self.error(f"component {comp.text} has no vertex {vertex.text!r}", vertex)
        return comp.text, vertex.text

    # module documents
    def module(self, algebra: BoundAlgebra) -> Representation:
        self.keyword("module")
        self.name()
        self.expect(";")
        dims: Dict[str, int] = {}
        matrices: Dict[str, List[List[object]]] = {}
        where: Dict[str, Token] = {}
        while self.current.kind != "EOF":
            clause = self.name()
            if clause.text == "dims":
                self.expect(":")
                while self.current.kind != ";":
                    v = self.name()
                    if v.text not in algebra.vertices:
                        raise self.error(f"unknown vertex {v.text!r}", v)
                    if v.text in dims:
                        raise self.error(f"dimension of {v.text} given twice", v)
                    self.expect("=")
                    d_tok = self.current
                    dims[v.text] = self.integer()
                    if dims[v.text] < 0:
                        raise self.error("dimensions are nonnegative", d_tok)
                    self.accept(",")
            elif clause.text == "map":
                label = self.name()
                if label.text not in {a.label for a in algebra.arrows}:
                    raise self.error(f"unknown arrow {label.text!r}", label)
                if label.text in matrices:
                    raise self.error(f"matrix of {label.text} given twice", label)
                self.expect("=")
                where[label.text] = label
                matrices[label.text] = self.matrix(algebra.field)
            else:
                raise self.error(f"unknown clause {clause.text!r}; use 'dims:' or 'map'", clause)
            self.expect(";")
        K = algebra.domain
        maps = {}
        for label, entries in matrices.items():
            arrow = algebra.arrow(label)
            rows_n, cols_n = dims.get(arrow.target, 0), dims.get(arrow.source, 0)
            if len(entries) != rows_n or any(len(r) != cols_n for r in entries):
                got_cols = len(entries[0]) if entries else 0
                tok = where[label]
                raise ShapeMismatch(f"line {tok.line}, column {tok.column}: arrow {label} needs a "
                                    f"{rows_n}x{cols_n} matrix, got {len(entries)}x{got_cols}")
            maps[label] = la.from_rows(entries, rows_n, cols_n, K)
        return ensure_valid(Representation(algebra, dims, maps))

    def matrix(self, fld: BaseField) -> List[List[object]]:
        self.expect("[")
        rows: List[List[object]] = []
        while not self.accept("]"):
            self.expect("[")
            row: List[object] = []
            while not self.accept("]"):
                row.append(self.scalar(fld))
                if self.current.kind != "]":
                    self.expect(",")
            rows.append(row)
            if self.current.kind != "]":
                self.expect(",")
        return rows


def parse_algebra(text: Source, field: Optional[BaseField] = None) -> ParsedAlgebra:
    """Parse one algebra document.

    ``field`` overrides any ``field:`` clause in the text. Syntax and name errors
    raise ``SpecSyntaxError`` with a line and column; semantic errors from the
    algebra layer (``NotAdmissible``, ``QuiverError``) keep their own type.
    """
    parser = _Parser(text, field)
    parsed = parser.document()
    parser.at_end()
    return parsed


def parse_module(text: Source, algebra: BoundAlgebra) -> Representation:
    parser = _Parser(text, algebra.field)
    module = parser.module(algebra)
    parser.at_end()
    return module
