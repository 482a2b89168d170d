"""Readers and writers for the input formats.

Ideal documents use a small text language::

    # optional header
    format 1;
    ring x y z;
    ideal y^2*z, z^3, y^2*x;

Graph documents are JSON objects::

    {"format": 1, "vertices": ["a", "b"], "edges": [["a", "b"]],
     "directed": false, "weights": {"b": 2}}

With ``"directed": true`` each edge ``[a, b]`` is oriented from ``a`` to ``b``
and the document describes a weighted oriented graph.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Iterator

from .errors import ParseError
from .monomial import Monomial, MonomialIdeal, Ring

FORMAT_VERSION = 1

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>\#[^\n]*)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[0-9]+)|(?P<op>[*^,;\-])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            yield Token(kind if kind != "op" else m.group(), m.group(), line, col)
        pos = m.end()
    yield Token("eof", "", line, pos - line_start + 1)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def expect(self, kind: str, what: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {what or kind!r}, found {found}", t.line, t.column)
        return self.advance()

    def keyword(self, word: str) -> Token:
        t = self.tok
        if t.kind != "ident" or t.text != word:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected '{word}', found {found}", t.line, t.column)
        return self.advance()

    def monomial(self, ring: Ring) -> Monomial:
        exps = [0] * ring.n
        while True:
            t = self.tok
            if t.kind == "int" and t.text == "1":
                self.advance()
            elif t.kind == "ident":
                self.advance()
                if t.text not in ring.variables:
                    raise ParseError(f"unknown variable {t.text}", t.line, t.column)
                e = 1
                if self.tok.kind == "^":
                    self.advance()
                    et = self.tok
                    if et.kind == "-":
                        raise ParseError("exponent must be positive", et.line, et.column)
                    self.expect("int", "exponent")
                    e = int(et.text)
                    if e <= 0:
                        raise ParseError("exponent must be positive", et.line, et.column)
                exps[ring.index(t.text)] += e
            else:
                found = "end of input" if t.kind == "eof" else repr(t.text)
                raise ParseError(f"expected a variable, found {found}", t.line, t.column)
            if self.tok.kind != "*":
                return Monomial(ring, tuple(exps))
            self.advance()


def parse_ideal(text: str) -> tuple[Ring, MonomialIdeal]:
    """Parse ``[format 1;] ring <vars>; ideal <mono>, ...;``."""
    p = _Parser(text)
    if p.tok.kind == "ident" and p.tok.text == "format":
        p.advance()
        v = p.expect("int", "format version")
        if int(v.text) != FORMAT_VERSION:
            raise ParseError(f"unsupported format version {v.text}", v.line, v.column)
        p.expect(";")
    p.keyword("ring")
    names = []
    while p.tok.kind == "ident":
        t = p.advance()
        if t.text in names:
            raise ParseError(f"duplicate variable {t.text}", t.line, t.column)
        names.append(t.text)
    if not names:
        raise ParseError("ring declares no variables", p.tok.line, p.tok.column)
    p.expect(";")
    ring = Ring(names)
    kw = p.keyword("ideal")
    if p.tok.kind == ";":
        raise ParseError("empty generator list", kw.line, kw.column)
    gens = [p.monomial(ring)]
    while p.tok.kind == ",":
        p.advance()
        gens.append(p.monomial(ring))
    p.expect(";")
    p.expect("eof", "end of input")
    return ring, MonomialIdeal(ring, gens)


def parse_monomial(ring: Ring, text: str) -> Monomial:
    p = _Parser(text)
    m = p.monomial(ring)
    p.expect("eof", "end of input")
    return m


def emit_ideal(I: MonomialIdeal) -> str:
    """Inverse of :func:`parse_ideal` for nonzero ideals."""
    if I.is_zero:
        raise ValueError("the zero ideal has no generator list")
    gens = ", ".join(str(g) for g in I.generators)
    return f"format {FORMAT_VERSION};\nring {' '.join(I.ring.variables)};\nideal {gens};\n"


def parse_graph(document: str | dict[str, Any]):
    """Validate a graph document; returns a Graph or a WeightedOrientedGraph."""
    from .graphs import Graph, WeightedOrientedGraph

    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(document, dict):
        raise ParseError("graph document must be a JSON object")
    version = document.get("format", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {version}")
    vertices = document.get("vertices")
    edges = document.get("edges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of names")
    if len(set(vertices)) != len(vertices):
        raise ParseError("duplicate vertex name")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of pairs")
    known = set(vertices)
    seen = set()
    pairs = []
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
            raise ParseError(f"edge #{k} is not a pair of names")
        a, b = e
        for v in (a, b):
            if v not in known:
                raise ParseError(f"edge #{k}: unknown endpoint {v}")
        if a == b:
            raise ParseError(f"edge #{k}: loop at {a}")
        key = frozenset((a, b))
        if key in seen:
            raise ParseError(f"edge #{k}: duplicate edge {a}-{b}")
        seen.add(key)
        pairs.append((a, b))
    weights = document.get("weights", {})
    if not isinstance(weights, dict):
        raise ParseError("'weights' must be an object")
    for v, w in weights.items():
        if v not in known:
            raise ParseError(f"weight for unknown vertex {v}")
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise ParseError(f"weight of {v} must be an integer >= 1")
    graph = Graph(vertices, [tuple(sorted(p, key=vertices.index)) for p in pairs])
    if document.get("directed", False):
        full = {v: int(weights.get(v, 1)) for v in vertices}
        return WeightedOrientedGraph(graph, pairs, full)
    if weights:
        raise ParseError("'weights' requires \"directed\": true")
    return graph


def emit_graph(graph) -> str:
    from .graphs import WeightedOrientedGraph

    doc: dict[str, Any] = {"format": FORMAT_VERSION}
    if isinstance(graph, WeightedOrientedGraph):
        doc["vertices"] = list(graph.underlying.vertices)
        doc["edges"] = [list(e) for e in graph.directed_edges]
        doc["directed"] = True
        doc["weights"] = dict(graph.weights)
    else:
        doc["vertices"] = list(graph.vertices)
        doc["edges"] = [list(e) for e in graph.edges]
    return json.dumps(doc, indent=2)
