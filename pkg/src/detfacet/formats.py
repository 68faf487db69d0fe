"""Plain-text formats for complexes, graphs and interval representations.

Complex::

    # comment
    n d
    1 2 3
    2 3 4

Graph::

    n
    1 2
    2 3

Interval representation, one ``v a b`` line per vertex, endpoints as
integers or ``p/q``.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import ParseError, PreconditionError
from .graphs import Graph
from .scomplex import IntervalRep, SimplicialComplex

__all__ = [
    "parse_complex",
    "render_complex",
    "parse_graph",
    "render_graph",
    "parse_interval_rep",
    "render_interval_rep",
    "parse_any",
    "load",
]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_complex(text: str) -> SimplicialComplex:
    lines = _lines(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise ParseError("missing 'n d' header") from None
    if len(head) != 2:
        raise ParseError("header must be 'n d'", lineno)
    n, d = _ints(head, lineno)
    facets = []
    for lineno, toks in lines:
        f = _ints(toks, lineno)
        if len(f) != d + 1:
            raise ParseError(f"facet has {len(f)} vertices, expected {d + 1}", lineno)
        if len(set(f)) != len(f):
            raise ParseError("facet repeats a vertex", lineno)
        if min(f) < 1 or max(f) > n:
            raise ParseError(f"vertex outside [1, {n}]", lineno)
        facets.append(tuple(sorted(f)))
    try:
        return SimplicialComplex(n, d, frozenset(facets))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def render_complex(cx: SimplicialComplex) -> str:
    out = [f"{cx.n} {cx.d}"]
    out += [" ".join(map(str, f)) for f in cx.sorted_facets()]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise ParseError("missing vertex-count header") from None
    if len(head) != 1:
        raise ParseError("header must be a single vertex count", lineno)
    (n,) = _ints(head, lineno)
    if n < 0:
        raise ParseError("negative vertex count", lineno)
    edges = []
    for lineno, toks in lines:
        if len(toks) != 2:
            raise ParseError("edge lines hold exactly two vertices", lineno)
        a, b = _ints(toks, lineno)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        if min(a, b) < 1 or max(a, b) > n:
            raise ParseError(f"vertex outside [1, {n}]", lineno)
        edges.append((min(a, b), max(a, b)))
    return Graph(n, frozenset(edges))


def render_graph(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{a} {b}" for a, b in g.sorted_edges()]) + "\n"


def _frac(tok, lineno):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational endpoint {tok!r}", lineno) from None


def parse_interval_rep(text: str) -> IntervalRep:
    found = {}
    for lineno, toks in _lines(text):
        if len(toks) != 3:
            raise ParseError("expected 'v a b'", lineno)
        (v,) = _ints(toks[:1], lineno)
        a, b = _frac(toks[1], lineno), _frac(toks[2], lineno)
        if a > b:
            raise ParseError(f"empty interval [{a}, {b}]", lineno)
        if v in found:
            raise ParseError(f"vertex {v} listed twice", lineno)
        found[v] = (a, b)
    n = len(found)
    if sorted(found) != list(range(1, n + 1)):
        raise ParseError("vertices must be exactly 1..n")
    return IntervalRep(tuple(found[v] for v in range(1, n + 1)))


def render_interval_rep(rep: IntervalRep) -> str:
    return "".join(f"{v} {a} {b}\n" for v, (a, b) in enumerate(rep.intervals, start=1))


def parse_any(text: str):
    """Complex if the header has two fields, graph if it has one."""
    for lineno, toks in _lines(text):
        if len(toks) == 2:
            return parse_complex(text)
        if len(toks) == 1:
            return parse_graph(text)
        raise ParseError("header must be 'n' (graph) or 'n d' (complex)", lineno)
    raise ParseError("empty input")


def load(path, kind: str | None = None):
    text = Path(path).read_text()
    if kind == "complex":
        return parse_complex(text)
    if kind == "graph":
        return parse_graph(text)
    return parse_any(text)
