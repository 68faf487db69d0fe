"""Pure simplicial complexes on ``[n]`` and their labelling-dependent classes.

Every labelled predicate is phrased as a set of local obligations, one per
facet (unit, global, proper) or per pair of facets (closed, poor closed).
An obligation attached to a facet only mentions vertex sets whose labels do
not exceed the facet's largest label. That lets :func:`exists_labelling`
assign labels ``1, 2, ...`` one at a time and test each obligation as soon as
its facet is complete, which prunes the permutation tree hard.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .errors import PreconditionError
from .groebner import Basis
from .polyring import QQ, MatrixContext
from .symmatrix import MinorSpec, minor

__all__ = [
    "SimplicialComplex",
    "Labelling",
    "IntervalRep",
    "SearchOutcome",
    "PREDICATES",
    "relabel",
    "is_closed_lab",
    "is_unit_interval_lab",
    "is_poor_closed_lab",
    "is_global_interval_lab",
    "is_proper_interval_lab",
    "is_chordal_lab",
    "lemma_connection_holds",
    "is_strong_interval_with_rep",
    "union_is_interval",
    "complex_from_rep",
    "exists_labelling",
    "find_interval_rep",
    "skeleton",
    "determinantal_facet_ideal",
    "vertex_orbits",
    "DEFAULT_PERM_BUDGET",
]

DEFAULT_PERM_BUDGET = 2_000_000


@dataclass(frozen=True)
class SimplicialComplex:
    """Pure ``d``-complex on ``[n]`` stored by its facets (sorted tuples)."""

    n: int
    d: int
    facets: frozenset

    def __post_init__(self):
        if self.n < 0 or self.d < 0:
            raise PreconditionError("n and d must be non-negative")
        clean = set()
        for f in self.facets:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise PreconditionError(f"facet {f} repeats a vertex")
            if len(t) != self.d + 1:
                raise PreconditionError(
                    f"impure complex: facet {t} has {len(t)} vertices, expected {self.d + 1}"
                )
            if t and not (1 <= t[0] and t[-1] <= self.n):
                raise PreconditionError(f"facet {t} leaves the vertex set [1, {self.n}]")
            clean.add(t)
        object.__setattr__(self, "facets", frozenset(clean))

    @classmethod
    def from_facets(cls, n: int, facets, d: int | None = None) -> "SimplicialComplex":
        facets = [tuple(sorted(f)) for f in facets]
        if d is None:
            sizes = {len(f) for f in facets}
            if len(sizes) > 1:
                raise PreconditionError(f"impure complex: facet sizes {sorted(sizes)}")
            if not sizes:
                raise PreconditionError("cannot infer d from an empty facet list")
            d = sizes.pop() - 1
        return cls(n, d, frozenset(facets))

    @classmethod
    def full(cls, n: int, d: int) -> "SimplicialComplex":
        return cls(n, d, frozenset(combinations(range(1, n + 1), d + 1)))

    def sorted_facets(self) -> list:
        return sorted(self.facets)

    def __len__(self):
        return len(self.facets)

    def vertices(self) -> set:
        return {v for f in self.facets for v in f}

    def cofacet_pairs(self) -> set:
        """Unordered pairs of distinct vertices lying in a common facet."""
        out = set()
        for f in self.facets:
            for a, b in combinations(f, 2):
                out.add((a, b))
        return out

    def is_connected(self) -> bool:
        """Connected as a complex on all ``n`` vertices (isolated vertices count)."""
        if self.n <= 1:
            return True
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.facets:
            for v in f[1:]:
                parent[find(v)] = find(f[0])
        return len({find(v) for v in range(1, self.n + 1)}) == 1

    def to_json(self) -> dict:
        return {"kind": "complex", "n": self.n, "d": self.d, "facets": [list(f) for f in self.sorted_facets()]}


@dataclass(frozen=True)
class Labelling:
    """Bijection of ``[n]``; vertex ``v`` receives label ``images[v - 1]``."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PreconditionError(f"not a permutation of [n]: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Labelling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_order(cls, order) -> "Labelling":
        """``order[k]`` is the vertex that receives label ``k + 1``."""
        images = [0] * len(order)
        for k, v in enumerate(order):
            images[v - 1] = k + 1
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def inverse(self) -> "Labelling":
        return Labelling.from_order(self.images)

    def to_json(self) -> list:
        return list(self.images)


def relabel(cx: SimplicialComplex, pi: Labelling) -> SimplicialComplex:
    if pi.n != cx.n:
        raise PreconditionError(f"labelling of size {pi.n} for a complex on {cx.n} vertices")
    img = pi.images
    return SimplicialComplex(cx.n, cx.d, frozenset(tuple(sorted(img[v - 1] for v in f)) for f in cx.facets))


# ---------------------------------------------------------------------------
# Local obligations
# ---------------------------------------------------------------------------
# ``has`` tests membership of a sorted tuple in the facet set, ``cof`` tests
# whether two vertices share a facet, ``d`` is the dimension.


def _unit_facet(F, has, cof, d):
    lo, hi = F[0], F[-1]
    if hi - lo == d:
        return True
    return all(has(S) for S in combinations(range(lo, hi + 1), d + 1))


def _global_facet(F, has, cof, d):
    head = F[:-1]
    for j in range(F[0] + 1, F[-1]):
        if j in F:
            continue
        if not has(tuple(sorted(head + (j,)))):
            return False
    return True


def _proper_facet(F, has, cof, d):
    for j in range(F[0] + 1, F[-1]):
        if j in F:
            continue
        for k, ik in enumerate(F):
            if cof(j, ik) and not has(tuple(sorted(F[:k] + F[k + 1:] + (j,)))):
                return False
    return True


def _lemma_some_facet(F, has, cof, d):
    return all(any(cof(j, i) for i in F) for j in range(F[0] + 1, F[-1]) if j not in F)


def _lemma_all_facet(F, has, cof, d):
    return all(all(cof(j, i) for i in F) for j in range(F[0] + 1, F[-1]) if j not in F)


def _shares_position(F, G):
    return any(a == b for a, b in zip(F, G))


def _closed_pair(F, G, has, d):
    if not _shares_position(F, G):
        return True
    union = sorted(set(F) | set(G))
    return all(has(S) for S in combinations(union, d + 1))


def _poor_closed_pair(F, G, has, d):
    if not _shares_position(F, G):
        return True
    union = sorted(set(F) | set(G))
    return any(S != F and S != G and has(S) for S in combinations(union, d + 1))


def _chordal_pair(F, G, has, d):
    if F[-1] != G[-1]:
        return True
    union = sorted(set(F) | set(G))
    return all(has(S) for S in combinations(union, d + 1))


_FACET_RULES = {
    "unit": _unit_facet,
    "global": _global_facet,
    "proper": _proper_facet,
    "lemma_some": _lemma_some_facet,
    "lemma_all": _lemma_all_facet,
}
_PAIR_RULES = {
    "closed": _closed_pair,
    "poor_closed": _poor_closed_pair,
    "chordal": _chordal_pair,
}
PREDICATES = ("closed", "unit", "poor_closed", "global", "proper")


def _cof_fn(cx: SimplicialComplex):
    pairs = cx.cofacet_pairs()
    return lambda a, b: (a, b) in pairs if a < b else (b, a) in pairs


def _check(cx: SimplicialComplex, rule: str) -> bool:
    has = cx.facets.__contains__
    facets = cx.sorted_facets()
    if rule in _FACET_RULES:
        fn = _FACET_RULES[rule]
        cof = _cof_fn(cx)
        return all(fn(F, has, cof, cx.d) for F in facets)
    fn = _PAIR_RULES[rule]
    return all(fn(F, G, has, cx.d) for F, G in combinations(facets, 2))


def is_closed_lab(cx: SimplicialComplex) -> bool:
    """Facets agreeing in some sorted position span a full skeleton."""
    return _check(cx, "closed")


def is_unit_interval_lab(cx: SimplicialComplex) -> bool:
    """Every (d+1)-set inside the label window of a facet is a facet."""
    return _check(cx, "unit")


def is_poor_closed_lab(cx: SimplicialComplex) -> bool:
    return _check(cx, "poor_closed")


def is_global_interval_lab(cx: SimplicialComplex) -> bool:
    """Any in-window vertex can replace the facet's largest vertex."""
    return _check(cx, "global")


def is_proper_interval_lab(cx: SimplicialComplex) -> bool:
    return _check(cx, "proper")


def is_chordal_lab(cx: SimplicialComplex) -> bool:
    """Facets with the same largest vertex span a full skeleton."""
    return _check(cx, "chordal")


def lemma_connection_holds(cx: SimplicialComplex, mode: str = "some") -> bool:
    """For each facet and each in-window vertex ``j`` outside it, ``j`` shares a
    facet with some (``mode="some"``) or every (``mode="all"``) facet vertex."""
    if mode not in ("some", "all"):
        raise ValueError(f"mode must be 'some' or 'all', not {mode!r}")
    return _check(cx, f"lemma_{mode}")


LABELLED = {
    "closed": is_closed_lab,
    "unit": is_unit_interval_lab,
    "poor_closed": is_poor_closed_lab,
    "global": is_global_interval_lab,
    "proper": is_proper_interval_lab,
}


# ---------------------------------------------------------------------------
# Interval representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntervalRep:
    """Closed interval ``[a_v, b_v]`` for each vertex ``v = 1..n``."""

    intervals: tuple

    def __post_init__(self):
        ivs = tuple((Fraction(a), Fraction(b)) for a, b in self.intervals)
        for v, (a, b) in enumerate(ivs, start=1):
            if a > b:
                raise PreconditionError(f"interval of vertex {v} is empty: [{a}, {b}]")
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __getitem__(self, v: int):
        return self.intervals[v - 1]

    def sort_order(self) -> list:
        """Vertices sorted by left endpoint, then right endpoint."""
        return sorted(range(1, self.n + 1), key=lambda v: (self[v][0], self[v][1], v))

    def labelling(self) -> Labelling:
        return Labelling.from_order(self.sort_order())

    def relabelled(self, pi: Labelling) -> "IntervalRep":
        out = [None] * self.n
        for v in range(1, self.n + 1):
            out[pi(v) - 1] = self[v]
        return IntervalRep(tuple(out))

    def transformed(self, scale, shift) -> "IntervalRep":
        scale, shift = Fraction(scale), Fraction(shift)
        if scale <= 0:
            raise ValueError("only order-preserving rescalings are allowed")
        return IntervalRep(tuple((a * scale + shift, b * scale + shift) for a, b in self.intervals))

    def to_json(self) -> list:
        return [[str(a), str(b)] for a, b in self.intervals]


def union_is_interval(intervals) -> bool:
    """Whether a union of closed intervals is connected (touching counts)."""
    ivs = sorted(intervals)
    if not ivs:
        return False
    reach = ivs[0][1]
    for a, b in ivs[1:]:
        if a > reach:
            return False
        if b > reach:
            reach = b
    return True


def is_strong_interval_with_rep(cx: SimplicialComplex, rep: IntervalRep) -> bool:
    if rep.n < cx.n:
        raise PreconditionError(f"representation covers {rep.n} of {cx.n} vertices")
    for U in combinations(range(1, cx.n + 1), cx.d + 1):
        if (U in cx.facets) != union_is_interval([rep[u] for u in U]):
            return False
    return True


def complex_from_rep(rep: IntervalRep, d: int) -> SimplicialComplex:
    """The unique complex for which ``rep`` is an interval representation."""
    facets = frozenset(
        U for U in combinations(range(1, rep.n + 1), d + 1) if union_is_interval([rep[u] for u in U])
    )
    return SimplicialComplex(rep.n, d, facets)


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "exhausted" | "budget"
    certificate: object = None
    explored: int = 0

    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET = "budget"

    @property
    def found(self) -> bool:
        return self.status == self.FOUND

    @property
    def category(self) -> str:
        return {"found": "Found", "exhausted": "ExhaustedNone", "budget": "BudgetExceeded"}[self.status]

    def to_json(self) -> dict:
        cert = self.certificate.to_json() if self.certificate is not None else None
        return {"outcome": self.category, "certificate": cert, "explored": self.explored}


def vertex_orbits(cx: SimplicialComplex) -> list:
    """Orbits of ``[n]`` under the automorphism group of the facet hypergraph."""
    g = nx.Graph()
    for v in range(1, cx.n + 1):
        g.add_node(("v", v), kind="v", mark=False)
    for idx, f in enumerate(cx.sorted_facets()):
        g.add_node(("f", idx), kind="f", mark=False)
        for v in f:
            g.add_edge(("v", v), ("f", idx))
    deg = {v: g.degree(("v", v)) for v in range(1, cx.n + 1)}
    match = lambda a, b: a["kind"] == b["kind"] and a["mark"] == b["mark"]  # noqa: E731

    orbits: list = []
    for v in range(1, cx.n + 1):
        placed = False
        for orbit in orbits:
            rep = orbit[0]
            if deg[rep] != deg[v]:
                continue
            g1, g2 = g.copy(), g.copy()
            g1.nodes[("v", rep)]["mark"] = True
            g2.nodes[("v", v)]["mark"] = True
            if nx.is_isomorphic(g1, g2, node_match=match):
                orbit.append(v)
                placed = True
                break
        if not placed:
            orbits.append([v])
    return orbits


def _prefix_search(cx: SimplicialComplex, rules: list, budget: int, seed, first_choices):
    """Backtracking over label assignments with incremental obligation checks."""
    n, d = cx.n, cx.d
    facet_rules = [_FACET_RULES[r] for r in rules if r in _FACET_RULES]
    pair_rules = [_PAIR_RULES[r] for r in rules if r in _PAIR_RULES]
    unit_lookahead = "unit" in rules
    cof_vertices = cx.cofacet_pairs()
    by_vertex = {v: [] for v in range(1, n + 1)}
    for f in cx.facets:
        for v in f:
            by_vertex[v].append(f)

    label = [0] * (n + 1)  # label[v], 0 when unassigned
    order = [0] * (n + 1)  # order[k] = vertex with label k
    placed: set = set()
    placed_list: list = []
    rng = random.Random(seed) if seed is not None else None
    explored = 0

    def has(S):
        return S in placed

    def cof(a, b):
        u, w = order[a], order[b]
        return (u, w) in cof_vertices if u < w else (w, u) in cof_vertices

    def place(v, k):
        """Assign label k to v; return facets completed by this step or None on violation."""
        label[v] = k
        order[k] = v
        new = []
        for f in by_vertex[v]:
            if all(label[u] for u in f):
                new.append(tuple(sorted(label[u] for u in f)))
        for F in new:
            placed.add(F)
        ok = True
        for F in new:
            for rule in facet_rules:
                if not rule(F, has, cof, d):
                    ok = False
                    break
            if not ok:
                break
        if ok and pair_rules:
            seen_new = set()
            for F in new:
                for G in placed_list:
                    if not all(rule(*sorted((F, G)), has, d) for rule in pair_rules):
                        ok = False
                        break
                if not ok:
                    break
                for G in seen_new:
                    if not all(rule(*sorted((F, G)), has, d) for rule in pair_rules):
                        ok = False
                        break
                if not ok:
                    break
                seen_new.add(F)
        if ok and unit_lookahead:
            ok = window_ok(k)
        placed_list.extend(new)
        return new, ok

    def window_ok(k):
        # Unlabelled vertices get labels above k, so a facet with some but not
        # all vertices labelled will have a window covering [its least label, k].
        lo = None
        for f in cx.facets:
            labs = [label[u] for u in f if label[u]]
            if labs and len(labs) < len(f):
                lo = min(labs) if lo is None else min(lo, min(labs))
        if lo is None or k - lo < d:
            return True
        return all(has(S + (k,)) for S in combinations(range(lo, k), d))

    def unplace(v, k, new):
        for F in new:
            placed.discard(F)
        del placed_list[len(placed_list) - len(new):]
        label[v] = 0
        order[k] = 0

    remaining = set(range(1, n + 1))

    def rec(k):
        nonlocal explored
        if k > n:
            return True
        if k == 1 and first_choices is not None:
            choices = list(first_choices)
        else:
            choices = sorted(remaining)
        if rng is not None:
            rng.shuffle(choices)
        for v in choices:
            explored += 1
            if explored > budget:
                raise _Budget
            remaining.discard(v)
            new, ok = place(v, k)
            if ok and rec(k + 1):
                return True
            unplace(v, k, new)
            remaining.add(v)
        return False

    try:
        if rec(1):
            return SearchOutcome(SearchOutcome.FOUND, Labelling(tuple(label[1:])), explored)
        return SearchOutcome(SearchOutcome.EXHAUSTED, None, explored)
    except _Budget:
        return SearchOutcome(SearchOutcome.BUDGET, None, budget)


class _Budget(Exception):
    pass


def exists_labelling(
    cx: SimplicialComplex,
    predicate,
    budget: int = DEFAULT_PERM_BUDGET,
    seed=None,
    use_symmetry: bool = True,
) -> SearchOutcome:
    """Search for a labelling under which ``predicate`` holds.

    ``predicate`` is one of :data:`PREDICATES` or a list of them (all must hold
    at once). ``budget`` caps the number of search-tree nodes.
    """
    rules = [predicate] if isinstance(predicate, str) else list(predicate)
    for r in rules:
        if r not in _FACET_RULES and r not in _PAIR_RULES:
            raise ValueError(f"unknown predicate {r!r}")
    if cx.n == 0:
        return SearchOutcome(SearchOutcome.FOUND, Labelling(()), 0)
    first = None
    if use_symmetry:
        first = [orbit[0] for orbit in vertex_orbits(cx)]
    return _prefix_search(cx, rules, budget, seed, first)


def find_interval_rep(cx: SimplicialComplex, budget: int = 200_000, max_n: int = 7) -> SearchOutcome:
    """Search integer interval representations with endpoints in ``[0, 2n]``.

    Intervals are tried vertex by vertex; after each assignment every
    (d+1)-set among assigned vertices that contains the new one is checked.
    """
    n, d = cx.n, cx.d
    if n > max_n:
        return SearchOutcome(SearchOutcome.BUDGET, None, 0)
    cands = [(a, b) for a in range(0, 2 * n + 1) for b in range(a, min(2 * n, a + n) + 1)]
    chosen: list = [None] * (n + 1)
    explored = 0

    def consistent(v):
        others = list(range(1, v))
        for rest in combinations(others, d):
            U = rest + (v,)
            if (U in cx.facets) != union_is_interval([chosen[u] for u in U]):
                return False
        return True

    def rec(v):
        nonlocal explored
        if v > n:
            return True
        for iv in cands:
            explored += 1
            if explored > budget:
                raise _Budget
            chosen[v] = iv
            if consistent(v) and rec(v + 1):
                return True
        chosen[v] = None
        return False

    try:
        if rec(1):
            return SearchOutcome(SearchOutcome.FOUND, IntervalRep(tuple(chosen[1:])), explored)
        return SearchOutcome(SearchOutcome.EXHAUSTED, None, explored)
    except _Budget:
        return SearchOutcome(SearchOutcome.BUDGET, None, budget)


# ---------------------------------------------------------------------------
# Derived complexes and ideals
# ---------------------------------------------------------------------------


def skeleton(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    if not 0 <= k <= cx.d:
        raise PreconditionError(f"skeleton dimension {k} outside [0, {cx.d}]")
    if k == cx.d:
        return cx
    faces = {S for f in cx.facets for S in combinations(f, k + 1)}
    return SimplicialComplex(cx.n, k, frozenset(faces))


def determinantal_facet_ideal(cx: SimplicialComplex, field=QQ) -> Basis:
    """Maximal minors of the generic (d+1) x n matrix indexed by the facets."""
    ctx = MatrixContext(cx.d + 1, max(cx.n, 1), field)
    rows = tuple(range(1, cx.d + 2))
    polys = tuple(minor(MinorSpec(f, rows), ctx) for f in cx.sorted_facets())
    return Basis(polys, ctx)
