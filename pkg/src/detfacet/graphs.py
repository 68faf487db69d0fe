"""Simple graphs on ``[n]``, their connected-subgraph complexes and interval-type tests."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx

from .errors import BudgetExceededError, PreconditionError
from .groebner import is_groebner
from .scomplex import (
    DEFAULT_PERM_BUDGET,
    IntervalRep,
    Labelling,
    SearchOutcome,
    SimplicialComplex,
    determinantal_facet_ideal,
    exists_labelling,
    is_strong_interval_with_rep,
)

__all__ = [
    "Graph",
    "OrientedGraph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "spider_graph",
    "empty_graph",
    "delta_d",
    "is_d_independent",
    "ind_d",
    "independence_faces",
    "corona",
    "ClawWitness",
    "find_d_claw",
    "find_d_paw",
    "has_induced_cycle_of_length_at_least",
    "is_chordal",
    "maximal_cliques",
    "CRITERIA",
    "cor33_criterion",
    "has_consecutive_cliques",
    "IntervalGraphResult",
    "is_interval_graph",
    "clique_interval_rep",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``[n]``; edges stored as sorted pairs."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("vertex count must be non-negative")
        clean = set()
        for e in self.edges:
            a, b = sorted(e)
            if a == b:
                raise PreconditionError(f"loop at vertex {a}")
            if not (1 <= a and b <= self.n):
                raise PreconditionError(f"edge {(a, b)} leaves [1, {self.n}]")
            clean.add((a, b))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> dict:
        out = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return out

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges if a < b else (b, a) in self.edges

    def neighbors(self, v: int) -> set:
        return set(self.adj[v])

    def closed_neighbors(self, v: int) -> set:
        return self.adj[v] | {v}

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def is_connected_set(self, vertices) -> bool:
        """Whether the induced subgraph on ``vertices`` is connected (empty counts as not)."""
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        todo = [start]
        while todo:
            u = todo.pop()
            for w in self.adj[u]:
                if w in vs and w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(vs)

    def components(self, vertices=None) -> list:
        vs = set(range(1, self.n + 1)) if vertices is None else set(vertices)
        comps = []
        while vs:
            start = min(vs)
            comp = {start}
            todo = [start]
            while todo:
                u = todo.pop()
                for w in self.adj[u]:
                    if w in vs and w not in comp:
                        comp.add(w)
                        todo.append(w)
            vs -= comp
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return len(self.edges) == self.n - len(self.components())

    def has_isolated_vertex(self) -> bool:
        return any(not self.adj[v] for v in range(1, self.n + 1))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph, relabelled to ``[k]`` preserving order."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs, start=1)}
        return Graph(len(vs), frozenset((pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos))

    def relabel(self, pi: Labelling) -> "Graph":
        if pi.n != self.n:
            raise PreconditionError(f"labelling of size {pi.n} for a graph on {self.n} vertices")
        return Graph(self.n, frozenset(tuple(sorted((pi(a), pi(b)))) for a, b in self.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> dict:
        return {"kind": "graph", "n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


@dataclass(frozen=True)
class OrientedGraph:
    """Orientation of a labelled graph: arc ``(i, j)`` for each edge with ``i < j``."""

    n: int
    arcs: frozenset

    @classmethod
    def from_graph(cls, g: Graph) -> "OrientedGraph":
        return cls(g.n, frozenset(g.edges))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre labelled last."""
    c = leaves + 1
    return Graph(c, frozenset((i, c) for i in range(1, c)))


def spider_graph(legs: int, length: int) -> Graph:
    """Centre 1 with ``legs`` paths of ``length`` edges hanging off it."""
    edges = []
    v = 1
    for _ in range(legs):
        prev = 1
        for _ in range(length):
            v += 1
            edges.append((prev, v))
            prev = v
    return Graph(v, frozenset(edges))


# ---------------------------------------------------------------------------
# Complexes built from graphs
# ---------------------------------------------------------------------------


def delta_d(g: Graph, d: int) -> SimplicialComplex:
    """Facets: the (d+1)-subsets inducing a connected subgraph."""
    if d < 1:
        raise PreconditionError("d must be at least 1")
    if d == 1:
        return SimplicialComplex(g.n, 1, g.edges)
    facets = frozenset(U for U in combinations(range(1, g.n + 1), d + 1) if g.is_connected_set(U))
    return SimplicialComplex(g.n, d, facets)


def is_d_independent(g: Graph, U, d: int) -> bool:
    U = set(U)
    for v in U:
        if not 1 <= v <= g.n:
            raise PreconditionError(f"vertex {v} outside [1, {g.n}]")
    return all(len(c) <= d for c in g.components(U))


def ind_d(g: Graph, d: int) -> dict:
    """All d-independent sets of ``g`` grouped by size (size 0 holds the empty set)."""
    if d < 1:
        raise PreconditionError("d must be at least 1")
    out = {}
    for k in range(g.n + 1):
        faces = {U for U in combinations(range(1, g.n + 1), k) if is_d_independent(g, U, d)}
        if not faces:
            break  # the family is closed under subsets, so larger sizes are empty too
        out[k] = faces
    return out


def independence_faces(cx: SimplicialComplex) -> dict:
    """Faces of the independence complex of ``cx`` (sets containing no facet), by size."""
    facets = [set(f) for f in cx.facets]
    out = {}
    for k in range(cx.n + 1):
        faces = {U for U in combinations(range(1, cx.n + 1), k) if not any(f <= set(U) for f in facets)}
        if not faces:
            break
        out[k] = faces
    return out


def corona(g: Graph, family: dict) -> Graph:
    """Join each vertex ``x`` of ``g`` to every vertex of ``family[x]``.

    The graphs in ``family`` use their own local labels; their vertices are
    appended after ``g``'s, in increasing order of ``x``.
    """
    for x in family:
        if not 1 <= x <= g.n:
            raise PreconditionError(f"family index {x} is not a vertex of the base graph")
    edges = set(g.edges)
    nxt = g.n
    for x in sorted(family):
        h = family[x]
        shift = nxt
        edges.update((a + shift, b + shift) for a, b in h.edges)
        edges.update((x, shift + v) for v in range(1, h.n + 1))
        nxt += h.n
    return Graph(nxt, frozenset(edges))


# ---------------------------------------------------------------------------
# Forbidden configurations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClawWitness:
    centre: int
    branches: tuple  # three sorted vertex tuples, each containing the centre

    def to_json(self) -> dict:
        return {"centre": self.centre, "branches": [list(b) for b in self.branches]}


def _connected_sets_with(g: Graph, v: int, lo: int, hi: int) -> list:
    others = [u for u in range(1, g.n + 1) if u != v]
    out = []
    for k in range(lo - 1, hi):
        for rest in combinations(others, k):
            S = (v,) + rest
            if g.is_connected_set(S):
                out.append(frozenset(S))
    return out


def find_d_claw(g: Graph, d: int):
    """An induced d-claw of ``g`` or ``None``.

    Branches are connected vertex sets of size 2..d+1 meeting pairwise in
    exactly the centre, every pairwise union has at least d+1 vertices, and
    no edge joins two branches away from the centre.
    """
    if d < 1:
        raise PreconditionError("d must be at least 1")
    for v in range(1, g.n + 1):
        if len(g.adj[v]) < 3:
            continue  # each branch needs its own neighbour of the centre
        branches = _connected_sets_with(g, v, 2, d + 1)
        for A, B, C in combinations(branches, 3):
            trio = (A, B, C)
            ok = True
            for X, Y in combinations(trio, 2):
                if X & Y != {v} or len(X | Y) < d + 1:
                    ok = False
                    break
                if any(g.has_edge(a, b) for a in X - {v} for b in Y - {v}):
                    ok = False
                    break
            if ok:
                return ClawWitness(v, tuple(sorted(tuple(sorted(X)) for X in trio)))
    return None


def find_d_paw(g: Graph, d: int):
    """A vertex set of size d+2 inducing a connected graph with exactly three leaves."""
    if d < 1:
        raise PreconditionError("d must be at least 1")
    for U in combinations(range(1, g.n + 1), d + 2):
        if not g.is_connected_set(U):
            continue
        S = set(U)
        leaves = sum(1 for u in U if len(g.adj[u] & S) == 1)
        if leaves == 3:
            return U
    return None


def has_induced_cycle_of_length_at_least(g: Graph, length: int) -> bool:
    if length < 3:
        raise PreconditionError("cycle length bound must be at least 3")
    return _find_induced_cycle(g, length) is not None


def _find_induced_cycle(g: Graph, length: int):
    for k in range(length, g.n + 1):
        for U in combinations(range(1, g.n + 1), k):
            S = set(U)
            if all(len(g.adj[u] & S) == 2 for u in U) and g.is_connected_set(U):
                return U
    return None


def is_chordal(g: Graph) -> bool:
    return not has_induced_cycle_of_length_at_least(g, 4)


# ---------------------------------------------------------------------------
# Cliques and the proper-interval criteria
# ---------------------------------------------------------------------------


def maximal_cliques(g: Graph) -> list:
    """Maximal cliques as sorted tuples, ordered by (min, max) then lexicographically."""
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx())]
    return sorted(cliques, key=lambda c: (c[0], c[-1], c))


def _is_int_interval(S) -> bool:
    S = set(S)
    return not S or max(S) - min(S) + 1 == len(S)


def _is_clique(g: Graph, S) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(sorted(S), 2))


def _shortest_paths_increasing(g: Graph) -> bool:
    # For i < j, every shortest i-j path must climb: with BFS layers from i,
    # this fails exactly when some edge (u, w) on a shortest path has w < u.
    for i in range(1, g.n + 1):
        dist = {i: 0}
        q = deque([i])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        for j in range(i + 1, g.n + 1):
            if j not in dist:
                continue
            back = {j: 0}
            q = deque([j])
            while q:
                u = q.popleft()
                for w in g.adj[u]:
                    if w not in back:
                        back[w] = back[u] + 1
                        q.append(w)
            total = dist[j]
            for u, w in _oriented_pairs(g):
                if u in dist and w in back and dist[u] + 1 + back[w] == total and w < u:
                    return False
    return True


def _oriented_pairs(g: Graph):
    for a, b in g.edges:
        yield a, b
        yield b, a


def _c1p_order(items, sets, first=None):
    """An ordering of ``items`` in which every set in ``sets`` is contiguous, or ``None``.

    Backtracking: once a set has been started and then interrupted, none of
    its remaining members may be placed.
    """
    items = list(items)
    sets = [frozenset(s) for s in sets if len(s) > 1]
    member = {x: [k for k, s in enumerate(sets) if x in s] for x in items}
    placed_count = [0] * len(sets)
    order: list = []
    used = set()

    def can_place(x):
        if order:
            last = order[-1]
            for k in member[x]:
                if placed_count[k] and last not in sets[k]:
                    return False
            # sets containing the previous item but not x must already be complete
            for k in member[last]:
                if x not in sets[k] and placed_count[k] < len(sets[k]):
                    return False
        return True

    def rec():
        if len(order) == len(items):
            return True
        for x in items:
            if x in used or not can_place(x):
                continue
            used.add(x)
            order.append(x)
            for k in member[x]:
                placed_count[k] += 1
            if rec():
                return True
            for k in member[x]:
                placed_count[k] -= 1
            order.pop()
            used.discard(x)
        return False

    return list(order) if rec() else None


def has_consecutive_cliques(g: Graph):
    """An ordering of the maximal cliques in which each vertex's cliques are consecutive, or ``None``."""
    cliques = maximal_cliques(g)
    idx = list(range(len(cliques)))
    per_vertex = [{k for k, c in enumerate(cliques) if v in c} for v in range(1, g.n + 1)]
    order = _c1p_order(idx, per_vertex)
    return None if order is None else [cliques[k] for k in order]


def _c22(g: Graph) -> bool:
    cliques = maximal_cliques(g)
    if _c1p_order(range(1, g.n + 1), cliques) is None:
        return False
    return has_consecutive_cliques(g) is not None


CRITERIA = ("C12", "C14", "C15", "C16", "C17", "C18", "C19", "C20", "C22")


def cor33_criterion(g: Graph, cid: str) -> bool:
    """Literal truth value of one proper-interval criterion under ``g``'s labelling.

    C22 does not depend on the labelling; the others do.
    """
    n = g.n
    if cid == "C12":
        if not g.edges:
            return True
        return is_groebner(determinantal_facet_ideal(delta_d(g, 1)), check_reduced=False).is_gb
    if cid == "C14":
        return _shortest_paths_increasing(g)
    if cid == "C15":
        return all(_is_int_interval(c) for c in maximal_cliques(g))
    if cid == "C16":
        return all(_is_clique(g, range(i, j + 1)) for i, j in g.edges)
    if cid in ("C17", "C18"):
        for i in range(1, n + 1):
            if cid == "C17":
                nb = {j for j in g.adj[i] if j > i} | {i}
            else:
                nb = {j for j in g.adj[i] if j < i} | {i}
            if not (_is_clique(g, nb) and _is_int_interval(nb)):
                return False
        return True
    if cid == "C19":
        return all(_is_int_interval(g.closed_neighbors(i)) for i in range(1, n + 1))
    if cid == "C20":
        for i in range(1, n + 1):
            lower = {j for j in g.adj[i] if j < i} | {i}
            upper = {j for j in g.adj[i] if j > i} | {i}
            if not (_is_clique(g, lower) and _is_clique(g, upper)):
                return False
        return True
    if cid == "C22":
        return _c22(g)
    raise ValueError(f"unknown criterion {cid!r}; expected one of {', '.join(CRITERIA)}")


# ---------------------------------------------------------------------------
# Interval graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntervalGraphResult:
    is_interval: bool
    labelling: Labelling | None = None
    rep: IntervalRep | None = None
    rep_verified: bool | None = None
    outcome: SearchOutcome | None = None

    def __bool__(self):
        return self.is_interval


def clique_interval_rep(g: Graph, pi: Labelling) -> IntervalRep:
    """Interval of maximal-clique positions for each vertex.

    Cliques are ordered by (min, max) of their labels under ``pi``; vertex
    ``v`` gets ``[first, last]`` position of a clique containing it.
    """
    h = g.relabel(pi)
    cliques = maximal_cliques(h)
    ivs = []
    for v in range(1, g.n + 1):
        lab = pi(v)
        pos = [k for k, c in enumerate(cliques) if lab in c]
        ivs.append((pos[0], pos[-1]))
    return IntervalRep(tuple(ivs))


def is_interval_graph(g: Graph, budget: int = DEFAULT_PERM_BUDGET, seed=None) -> IntervalGraphResult:
    """Interval recognition through a labelling making the edge complex global interval.

    When one exists, the maximal-clique representation is built and checked.
    """
    if g.n == 0:
        return IntervalGraphResult(True, Labelling(()), IntervalRep(()), True)
    outcome = exists_labelling(delta_d(g, 1), "global", budget=budget, seed=seed)
    if outcome.status == SearchOutcome.BUDGET:
        raise BudgetExceededError(f"interval search passed {budget} nodes", partial=outcome)
    if not outcome.found:
        return IntervalGraphResult(False, outcome=outcome)
    pi = outcome.certificate
    rep = clique_interval_rep(g, pi)
    ok = is_strong_interval_with_rep(delta_d(g, 1), rep)
    return IntervalGraphResult(True, pi, rep, ok, outcome)
