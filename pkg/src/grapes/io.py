"""Line-oriented text formats for graphs, multidigraphs, intervals and complexes.

Undirected graph::

    v <name>
    e <name> <name>

Multidigraph (repeated ``a`` lines give parallel arcs, indexed in file order)::

    v <name>
    a <source> <target>

Intervals (decimal or fractional endpoints, read exactly)::

    i <name> <lo> <hi>

Complex (``F:`` alone is the empty face; a header without ``F:`` lines is the
empty complex)::

    X: <label> ...
    F: <label> ...

A ``#`` at the start of a line or after whitespace starts a comment (arc
labels such as ``a>c#0`` contain ``#``).  Unknown directives are rejected.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .graphs import Graph, Interval, IntervalSet, Multidigraph, check_label
from .simplicial import SimplicialComplex, face_key


_COMMENT = re.compile(r"(^|\s)#.*$")


def _strip(raw: str) -> str:
    return _COMMENT.sub("", raw).strip()


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if line:
            yield lineno, line.split()


def _expect(tokens, count, lineno):
    if len(tokens) != count:
        raise InputError(f"line {lineno}: expected {count - 1} argument(s) after {tokens[0]!r}")


def parse_graph(text: str) -> Graph:
    vertices, edges = [], []
    for lineno, tok in _lines(text):
        if tok[0] == "v":
            _expect(tok, 2, lineno)
            vertices.append(check_label(tok[1]))
        elif tok[0] == "e":
            _expect(tok, 3, lineno)
            u, w = check_label(tok[1]), check_label(tok[2])
            if u == w:
                raise InputError(f"line {lineno}: loop {u}-{u}")
            if frozenset((u, w)) in edges:
                raise InputError(f"line {lineno}: repeated edge {u}-{w}")
            edges.append(frozenset((u, w)))
        else:
            raise InputError(f"line {lineno}: unknown directive {tok[0]!r}")
    return Graph.from_edges(edges, vertices)


def parse_multidigraph(text: str) -> Multidigraph:
    vertices, pairs = [], []
    for lineno, tok in _lines(text):
        if tok[0] == "v":
            _expect(tok, 2, lineno)
            vertices.append(check_label(tok[1]))
        elif tok[0] == "a":
            _expect(tok, 3, lineno)
            pairs.append((check_label(tok[1]), check_label(tok[2])))
        else:
            raise InputError(f"line {lineno}: unknown directive {tok[0]!r}")
    return Multidigraph.from_pairs(pairs, vertices)


def parse_intervals(text: str) -> IntervalSet:
    items = []
    for lineno, tok in _lines(text):
        if tok[0] != "i":
            raise InputError(f"line {lineno}: unknown directive {tok[0]!r}")
        _expect(tok, 4, lineno)
        try:
            lo, hi = Fraction(tok[2]), Fraction(tok[3])
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"line {lineno}: bad endpoint: {exc}") from None
        items.append(Interval(check_label(tok[1]), lo, hi))
    return IntervalSet(tuple(items))


def parse_complex(text: str) -> SimplicialComplex:
    ground, faces = None, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep or head.strip() not in ("X", "F"):
            raise InputError(f"line {lineno}: expected 'X:' or 'F:'")
        labels = rest.split()
        if head.strip() == "X":
            if ground is not None:
                raise InputError(f"line {lineno}: repeated header")
            ground = labels
        else:
            faces.append(frozenset(labels))
    return SimplicialComplex(faces, ground)


def format_graph(G: Graph) -> str:
    lines = [f"v {v}" for v in G.sorted_vertices()]
    lines += [f"e {u} {w}" for u, w in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_multidigraph(M: Multidigraph) -> str:
    lines = [f"v {v}" for v in sorted(M.vertices)]
    lines += [f"a {s} {t}" for s, t, _ in M.sorted_arcs()]
    return "\n".join(lines) + "\n"


def format_intervals(X: IntervalSet) -> str:
    return "".join(f"i {iv.name} {iv.lo} {iv.hi}\n" for iv in X.intervals)


def format_complex(cx: SimplicialComplex) -> str:
    lines = ["X: " + " ".join(sorted(cx.ground)) if cx.ground else "X:"]
    for f in cx.sorted_facets():
        lines.append(("F: " + " ".join(face_key(f))).rstrip())
    return "\n".join(lines) + "\n"


def read_input(path, input_type):
    """Read ``path`` as the given input type (Graph, Multidigraph or IntervalSet)."""
    text = Path(path).read_text()
    parser = {
        Graph: parse_graph,
        Multidigraph: parse_multidigraph,
        IntervalSet: parse_intervals,
    }[input_type]
    return parser(text)
