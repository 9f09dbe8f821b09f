"""Input documents: parsing of graph / clutter / matrix / ideal files.

Two formats are accepted.  The bespoke grammar is explicit about its kind:

    graph   { a-b b-c c-d d-a }
    clutter { {a,b,d} {b,c,e} }
    matrix  { 1 1 0 ; 0 1 1 }          # rows, ';' separated
    ideal   { [1 1 0] [0 1 1] }        # exponent vectors

The plain format is line-based (one edge, one vector, or one edge's vertex
set per line, depending on the kind the command expects) and is also the
cone/polyhedron debugging format: one vector per line, space-separated
integers.  '#' starts a comment in both formats.

Vertex tokens that are all positive integers are taken as 1-based indices;
otherwise they are names, numbered in order of first appearance.  Errors
carry line and column positions.
"""

import hashlib
import json
from dataclasses import dataclass

from .clutters import Clutter, Graph
from .errors import InputError

KINDS = ("graph", "clutter", "matrix", "ideal")


class ParseError(InputError):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


_PUNCT = set("{}-,;[]")


def _tokenize(text):
    tokens = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        while col < len(line):
            ch = line[col]
            if ch.isspace():
                col += 1
                continue
            if ch in _PUNCT:
                tokens.append(Token(ch, ln, col + 1))
                col += 1
                continue
            if ch.isalnum() or ch == "_":
                start = col
                while col < len(line) and (line[col].isalnum() or line[col] == "_"):
                    col += 1
                tokens.append(Token(line[start:col], ln, start + 1))
                continue
            raise ParseError(f"unexpected character {ch!r}", ln, col + 1)
    return tokens


@dataclass(frozen=True)
class InputDocument:
    kind: str
    labels: tuple          # vertex labels, index i -> labels[i-1]
    graph: Graph | None = None
    clutter: Clutter | None = None
    rows: tuple | None = None       # matrix rows or ideal exponent vectors
    source: str = "<input>"

    @property
    def n(self):
        if self.graph is not None:
            return self.graph.n
        if self.clutter is not None:
            return self.clutter.n
        return len(self.rows[0]) if self.rows else 0

    def payload(self):
        if self.graph is not None:
            return {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]}
        if self.clutter is not None:
            return {"n": self.clutter.n, "edges": [list(e) for e in self.clutter.edges]}
        return {"rows": [list(r) for r in self.rows]}

    def digest(self):
        blob = json.dumps({"kind": self.kind, "labels": list(self.labels),
                           **self.payload()}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()


class _LabelTable:
    def __init__(self):
        self.names = []
        self.index = {}

    def resolve(self, token):
        name = token.text
        if name not in self.index:
            self.index[name] = len(self.names) + 1
            self.names.append(name)
        return self.index[name]


def _finalize_vertices(raw_edges, tokens_seen):
    """Map vertex tokens to indices: all-numeric tokens are indices, any
    non-numeric token switches to first-appearance naming."""
    all_numeric = all(t.text.isdigit() and int(t.text) > 0 for t in tokens_seen)
    if all_numeric:
        n = max((int(t.text) for t in tokens_seen), default=0)
        labels = tuple(str(i) for i in range(1, n + 1))
        edges = [tuple(int(t.text) for t in e) for e in raw_edges]
        return n, labels, edges
    table = _LabelTable()
    edges = [tuple(table.resolve(t) for t in e) for e in raw_edges]
    return len(table.names), tuple(table.names), edges


def _parse_graph_body(tokens, pos):
    raw = []
    seen = []
    while pos < len(tokens) and tokens[pos].text != "}":
        a = tokens[pos]
        if a.text in _PUNCT:
            raise ParseError(f"expected vertex, found {a.text!r}", a.line, a.col)
        if pos + 2 >= len(tokens) or tokens[pos + 1].text != "-":
            raise ParseError("expected '-' between edge endpoints", a.line, a.col)
        b = tokens[pos + 2]
        if b.text in _PUNCT:
            raise ParseError(f"expected vertex, found {b.text!r}", b.line, b.col)
        if a.text == b.text:
            raise ParseError(f"loop at vertex {a.text!r}", a.line, a.col)
        raw.append((a, b))
        seen.extend((a, b))
        pos += 3
    if pos >= len(tokens):
        raise ParseError("unterminated graph block", tokens[-1].line, tokens[-1].col)
    n, labels, edges = _finalize_vertices(raw, seen)
    return InputDocument(kind="graph", labels=labels, graph=Graph(n, edges)), pos + 1


def _parse_clutter_body(tokens, pos, strict):
    raw_edges = []
    seen = []
    while pos < len(tokens) and tokens[pos].text != "}":
        tok = tokens[pos]
        if tok.text != "{":
            raise ParseError(f"expected '{{' to open an edge, found {tok.text!r}",
                             tok.line, tok.col)
        pos += 1
        edge = []
        expect_name = True
        while pos < len(tokens) and tokens[pos].text != "}":
            t = tokens[pos]
            if expect_name:
                if t.text in _PUNCT:
                    raise ParseError(f"expected vertex, found {t.text!r}", t.line, t.col)
                edge.append(t)
            else:
                if t.text != ",":
                    raise ParseError(f"expected ',', found {t.text!r}", t.line, t.col)
            expect_name = not expect_name
            pos += 1
        if pos >= len(tokens):
            raise ParseError("unterminated edge block", tok.line, tok.col)
        if not edge:
            raise ParseError("empty edge", tok.line, tok.col)
        raw_edges.append(tuple(edge))
        seen.extend(edge)
        pos += 1
    if pos >= len(tokens):
        raise ParseError("unterminated clutter block", tokens[-1].line, tokens[-1].col)
    n, labels, edges = _finalize_vertices(raw_edges, seen)
    clutter = Clutter(n, edges, minimalize=not strict)
    return InputDocument(kind="clutter", labels=labels, clutter=clutter), pos + 1


def _read_int(tokens, pos):
    t = tokens[pos]
    sign = 1
    if t.text == "-":
        pos += 1
        if pos >= len(tokens) or not tokens[pos].text.isdigit():
            raise ParseError("expected digits after '-'", t.line, t.col)
        t = tokens[pos]
        sign = -1
    if not t.text.isdigit():
        raise ParseError(f"expected integer, found {t.text!r}", t.line, t.col)
    return sign * int(t.text), pos + 1


def _parse_matrix_body(tokens, pos):
    rows = []
    current = []
    while pos < len(tokens) and tokens[pos].text != "}":
        if tokens[pos].text == ";":
            if current:
                rows.append(tuple(current))
                current = []
            pos += 1
            continue
        value, pos = _read_int(tokens, pos)
        current.append(value)
    if pos >= len(tokens):
        raise ParseError("unterminated matrix block", tokens[-1].line, tokens[-1].col)
    if current:
        rows.append(tuple(current))
    _check_rect(rows, tokens[pos])
    labels = tuple(f"x{i}" for i in range(1, len(rows) + 1))
    return InputDocument(kind="matrix", labels=labels, rows=tuple(rows)), pos + 1


def _parse_ideal_body(tokens, pos):
    rows = []
    while pos < len(tokens) and tokens[pos].text != "}":
        tok = tokens[pos]
        if tok.text != "[":
            raise ParseError(f"expected '[' to open an exponent vector, found {tok.text!r}",
                             tok.line, tok.col)
        pos += 1
        vec = []
        while pos < len(tokens) and tokens[pos].text != "]":
            value, pos = _read_int(tokens, pos)
            vec.append(value)
        if pos >= len(tokens):
            raise ParseError("unterminated exponent vector", tok.line, tok.col)
        rows.append(tuple(vec))
        pos += 1
    if pos >= len(tokens):
        raise ParseError("unterminated ideal block", tokens[-1].line, tokens[-1].col)
    _check_rect(rows, tokens[pos])
    labels = tuple(f"x{i}" for i in range(1, (len(rows[0]) if rows else 0) + 1))
    return InputDocument(kind="ideal", labels=labels, rows=tuple(rows)), pos + 1


def _check_rect(rows, tok):
    if not rows:
        raise ParseError("no rows given", tok.line, tok.col)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("rows have unequal lengths", tok.line, tok.col)


def _parse_plain(text, expected_kind, strict):
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((ln, body.split()))
    if not lines:
        raise ParseError("empty input", 1, 1)
    if expected_kind == "graph":
        raw_edges = []
        seen = []
        for ln, parts in lines:
            if len(parts) != 2:
                raise ParseError("expected two vertices per line", ln, 1)
            a, b = (Token(p, ln, 1) for p in parts)
            if a.text == b.text:
                raise ParseError(f"loop at vertex {a.text!r}", ln, 1)
            raw_edges.append((a, b))
            seen.extend((a, b))
        n, labels, edges = _finalize_vertices(raw_edges, seen)
        return InputDocument(kind="graph", labels=labels, graph=Graph(n, edges))
    if expected_kind == "clutter":
        raw_edges = []
        seen = []
        for ln, parts in lines:
            toks = [Token(p, ln, 1) for p in parts]
            raw_edges.append(tuple(toks))
            seen.extend(toks)
        n, labels, edges = _finalize_vertices(raw_edges, seen)
        return InputDocument(kind="clutter", labels=labels,
                             clutter=Clutter(n, edges, minimalize=not strict))
    rows = []
    for ln, parts in lines:
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ParseError("expected integers", ln, 1)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("rows have unequal lengths", lines[-1][0], 1)
    ncols = len(rows[0])
    count = len(rows) if expected_kind == "matrix" else ncols
    labels = tuple(f"x{i}" for i in range(1, count + 1))
    return InputDocument(kind=expected_kind, labels=labels, rows=tuple(rows))


def parse_input(text, expected_kind=None, strict=True, source="<input>"):
    """Parse a document; bespoke blocks declare their own kind, the plain
    line format uses `expected_kind`."""
    tokens = _tokenize(text)
    if tokens and tokens[0].text in KINDS:
        kind = tokens[0].text
        if len(tokens) < 2 or tokens[1].text != "{":
            raise ParseError(f"expected '{{' after {kind!r}",
                             tokens[0].line, tokens[0].col)
        if kind == "graph":
            doc, pos = _parse_graph_body(tokens, 2)
        elif kind == "clutter":
            doc, pos = _parse_clutter_body(tokens, 2, strict)
        elif kind == "matrix":
            doc, pos = _parse_matrix_body(tokens, 2)
        else:
            doc, pos = _parse_ideal_body(tokens, 2)
        if pos != len(tokens):
            t = tokens[pos]
            raise ParseError(f"trailing input {t.text!r}", t.line, t.col)
        return InputDocument(kind=doc.kind, labels=doc.labels, graph=doc.graph,
                             clutter=doc.clutter, rows=doc.rows, source=source)
    if expected_kind is None:
        raise ParseError("cannot infer the input kind; use the bespoke syntax",
                         1, 1)
    doc = _parse_plain(text, expected_kind, strict)
    return InputDocument(kind=doc.kind, labels=doc.labels, graph=doc.graph,
                         clutter=doc.clutter, rows=doc.rows, source=source)


def read_labels(text):
    names = text.split()
    if len(set(names)) != len(names):
        raise InputError("duplicate labels in label file")
    return tuple(names)


def format_inequality(halfspace, var="a"):
    """Primitive-coefficient inequality with negative terms moved right:
    (1, 1, -1) >= 0 prints as 'a1 + a2 >= a3'."""
    left = []
    right = []
    for i, c in enumerate(halfspace.normal, start=1):
        if c > 0:
            left.append(f"{var}{i}" if c == 1 else f"{c}*{var}{i}")
        elif c < 0:
            right.append(f"{var}{i}" if c == -1 else f"{-c}*{var}{i}")
    rhs = halfspace.rhs
    if rhs:
        right.append(str(rhs))
    return f"{' + '.join(left) or '0'} >= {' + '.join(right) or '0'}"
