"""Instance generators: exhaustive and canonical graphs, random objects, fixtures."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product

from ..errors import PreconditionError
from ..graphs import Graph, corona, empty_graph, path_graph
from ..scomplex import IntervalRep, SimplicialComplex

__all__ = [
    "LABELLED_CAP",
    "CANONICAL_CAP",
    "enumerate_graphs",
    "canonical_form",
    "random_graph",
    "random_complex",
    "random_interval_rep",
    "bsv_fixture",
    "corona_instances",
]

LABELLED_CAP = 7
CANONICAL_CAP = 7


def _pairs(n: int) -> list:
    return list(combinations(range(1, n + 1), 2))


def _labelled(n: int):
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def canonical_form(g: Graph) -> tuple:
    """Least adjacency bit-tuple over relabellings that list vertices by decreasing degree.

    Restricting to degree-sorted relabellings keeps the form an isomorphism
    invariant while cutting the permutation count.
    """
    n = g.n
    deg = {v: len(g.adj[v]) for v in range(1, n + 1)}
    cells = {}
    for v in range(1, n + 1):
        cells.setdefault(deg[v], []).append(v)
    groups = [cells[k] for k in sorted(cells, reverse=True)]
    pairs = _pairs(n)
    best = None
    for choice in product(*(permutations(c) for c in groups)):
        order = [v for part in choice for v in part]
        pos = {v: i for i, v in enumerate(order, start=1)}
        edges = {tuple(sorted((pos[a], pos[b]))) for a, b in g.edges}
        key = tuple(0 if p in edges else 1 for p in pairs)  # edges early -> smaller key
        if best is None or key < best:
            best = key
    return best


def _from_form(n: int, form: tuple) -> Graph:
    return Graph(n, frozenset(p for p, bit in zip(_pairs(n), form) if bit == 0))


def _canonical(n: int, hereditary_filter=None) -> list:
    if n == 0:
        g = empty_graph(0)
        return [g] if hereditary_filter is None or hereditary_filter(g) else []
    prev = _canonical(n - 1, hereditary_filter)
    seen = {}
    for h in prev:
        for k in range(n):
            for nbrs in combinations(range(1, n), k):
                g = Graph(n, h.edges | frozenset((u, n) for u in nbrs))
                if hereditary_filter is not None and not hereditary_filter(g):
                    continue
                form = canonical_form(g)
                if form not in seen:
                    seen[form] = g
    return [_from_form(n, f) for f in sorted(seen)]


def enumerate_graphs(n: int, mode: str = "labelled", *, cap: int | None = None, filter=None, hereditary: bool = False):
    """All graphs on ``[n]`` (``mode="labelled"``) or one per isomorphism class (``"canonical"``).

    ``filter`` drops graphs; when ``hereditary`` is true it is also applied
    while growing canonical graphs vertex by vertex, which is only valid for
    properties closed under vertex deletion.
    """
    if mode not in ("labelled", "canonical"):
        raise ValueError(f"unknown mode {mode!r}")
    limit = cap if cap is not None else (LABELLED_CAP if mode == "labelled" else CANONICAL_CAP)
    if n > limit:
        raise PreconditionError(f"n={n} exceeds the {mode} enumeration cap {limit}")
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if mode == "labelled":
        for g in _labelled(n):
            if filter is None or filter(g):
                yield g
        return
    for g in _canonical(n, filter if hereditary else None):
        if filter is None or filter(g):
            yield g


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, frozenset(e for e in _pairs(n) if rng.random() < p))


def random_complex(rng: random.Random, n_max: int = 7, d_max: int = 2, max_facets: int = 8) -> SimplicialComplex:
    d = rng.randint(1, d_max) if d_max >= 1 else 0
    n = rng.randint(d + 1, max(n_max, d + 1))
    pool = list(combinations(range(1, n + 1), d + 1))
    k = rng.randint(1, min(max_facets, len(pool)))
    return SimplicialComplex(n, d, frozenset(rng.sample(pool, k)))


def random_interval_rep(rng: random.Random, n: int, span: int | None = None, denominators=(1,)) -> IntervalRep:
    span = 2 * n - 1 if span is None else span
    ivs = []
    for _ in range(n):
        q = rng.choice(denominators)
        a = Fraction(rng.randint(0, span * q), q)
        b = Fraction(rng.randint(0, span * q), q)
        ivs.append((min(a, b), max(a, b)))
    return IntervalRep(tuple(ivs))


def bsv_fixture() -> SimplicialComplex:
    """Poor closed 2-complex on 11 vertices that is neither closed nor unit interval."""
    facets = [
        (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (2, 3, 5),
        (2, 4, 5), (3, 4, 5), (5, 6, 8), (7, 8, 9), (8, 10, 11),
    ]
    return SimplicialComplex(11, 2, frozenset(facets))


def corona_instances() -> list:
    """``(name, d, graph)`` coronas that have a connected (d-1)-vertex base piece
    whose attached graphs hold three pairwise non-adjacent vertices."""
    three = empty_graph(3)
    out = [
        ("P2 o (3K1 at 1)", 2, corona(path_graph(2), {1: three})),
        ("K1 o (K2 + 2K1)", 2, corona(path_graph(1), {1: Graph(4, frozenset({(3, 4)}))})),
        ("P3 o (3K1 at 1)", 3, corona(path_graph(3), {1: three})),
        ("P2 o (2K1, K1)", 3, corona(path_graph(2), {1: empty_graph(2), 2: empty_graph(1)})),
        ("P2 o (K2 + K1, K2)", 3, corona(path_graph(2), {1: Graph(3, frozenset({(1, 3)})), 2: Graph(2, frozenset({(1, 2)}))})),
    ]
    return out
