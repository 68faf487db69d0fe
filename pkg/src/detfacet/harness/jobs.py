"""Theorem verification jobs.

Each ``run_*`` function walks an instance family, checks one statement per
instance and returns a :class:`VerificationReport`. Per-instance work lives in
module-level ``_check_*`` functions so it can be shipped to worker processes.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

from ..errors import PreconditionError
from ..graphs import (
    CRITERIA,
    Graph,
    cor33_criterion,
    cycle_graph,
    delta_d,
    find_d_claw,
    find_d_paw,
    has_consecutive_cliques,
    has_induced_cycle_of_length_at_least,
    ind_d,
    is_interval_graph,
    path_graph,
)
from ..groebner import is_groebner
from ..polyring import QQ, MatrixContext, PrimeField
from ..scomplex import (
    DEFAULT_PERM_BUDGET,
    Labelling,
    SearchOutcome,
    SimplicialComplex,
    complex_from_rep,
    determinantal_facet_ideal,
    exists_labelling,
    find_interval_rep,
    is_closed_lab,
    is_global_interval_lab,
    is_poor_closed_lab,
    is_proper_interval_lab,
    is_strong_interval_with_rep,
    is_unit_interval_lab,
    lemma_connection_holds,
    relabel,
)
from ..sortable import is_sortable_complex
from ..symmatrix import MinorSpec, all_det_identity_cases, check_det_identity, minor
from ..groebner import Basis
from .instances import (
    bsv_fixture,
    corona_instances,
    enumerate_graphs,
    random_complex,
    random_graph,
    random_interval_rep,
)
from .report import VerificationReport

__all__ = [
    "THEOREMS",
    "TheoremJob",
    "run_job",
    "run_lem_det",
    "run_thm_gb1",
    "run_thm_gb",
    "run_thm_proper_unit",
    "run_lem_equiv",
    "run_lem_global",
    "run_thm_monotone",
    "check_monotone_strong",
    "run_cor_sort",
    "run_thm_interval",
    "run_prop_cycle",
    "run_prop_clawpaw",
    "run_cor_cycle_forest",
    "run_cor_corona",
    "run_cor_proper_interval",
    "gb_fixtures",
]

ACCEPTANCE_GB_SIZES = ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5))


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------


def _fan_out(fn, items, workers: int = 1):
    """Apply ``fn`` to ``items`` (optionally across processes); order is kept."""
    items = list(items)
    if workers is None or workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _collect(theorem, source, seed, parts, start) -> VerificationReport:
    rep = VerificationReport(theorem, source, seed)
    for p in parts:
        rep.merge(p)
    rep.millis = int((time.perf_counter() - start) * 1000)
    return rep


def _field(spec):
    if spec is None or spec == "q" or spec is QQ:
        return QQ
    if isinstance(spec, PrimeField):
        return spec
    return PrimeField(int(spec))


def _labelled_graphs(n_max: int, connected: bool = False, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        for g in enumerate_graphs(n, "labelled"):
            if not connected or g.is_connected():
                yield g


def _canonical_graphs(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, "canonical")


def _part(item) -> VerificationReport:
    return VerificationReport("", {})


# ---------------------------------------------------------------------------
# LEM-DET
# ---------------------------------------------------------------------------


def _check_det(case) -> VerificationReport:
    t, i_cols, j1, n = case
    rep = _part(case)
    rep.checked = 1
    ctx = MatrixContext(t + 1, n)
    if not check_det_identity(t, i_cols, j1, ctx):
        rep.fail({"t": t, "i": list(i_cols), "j1": j1, "n": n}, "polynomial sides differ")
    return rep


def run_lem_det(ts=(1, 2, 3, 4), n: int = 6, workers: int = 1) -> VerificationReport:
    start = time.perf_counter()
    cases = [(t, i_cols, j1, n) for t in ts for i_cols, j1 in all_det_identity_cases(t, n)]
    parts = _fan_out(_check_det, cases, workers)
    return _collect("LEM-DET", {"kind": "exhaustive", "t": list(ts), "n": n}, None, parts, start)


# ---------------------------------------------------------------------------
# Groebner theorem
# ---------------------------------------------------------------------------


def _check_all_minors(case) -> VerificationReport:
    m, n, fld = case
    rep = _part(case)
    rep.checked = 1
    ctx = MatrixContext(m, n, fld)
    rows = tuple(range(1, m + 1))
    basis = Basis(tuple(minor(MinorSpec(c, rows), ctx) for c in combinations(range(1, n + 1), m)), ctx)
    gb = is_groebner(basis)
    if not (gb.is_gb and gb.reduced):
        rep.fail({"m": m, "n": n, "field": fld.name}, gb.to_json())
    rep.count("reduced_gb")
    return rep


def run_thm_gb1(sizes=ACCEPTANCE_GB_SIZES, field=None, workers: int = 1) -> VerificationReport:
    """All maximal minors of a generic matrix form a reduced Groebner basis."""
    start = time.perf_counter()
    fld = _field(field)
    parts = _fan_out(_check_all_minors, [(m, n, fld) for m, n in sizes], workers)
    source = {"kind": "sizes", "sizes": [list(s) for s in sizes], "field": fld.name}
    return _collect("THM-GB-1", source, None, parts, start)


def _gb_of(cx: SimplicialComplex, fld):
    if not cx.facets:
        return True, True
    gb = is_groebner(determinantal_facet_ideal(cx, fld))
    return gb.is_gb, gb.reduced


def _gb_failures(cx, is_gb, reduced, closed, unit, poor, parts, d1_connected):
    out = []
    if 2 in parts and closed and not (is_gb and reduced):
        out.append("closed labelling but minors are not a reduced Groebner basis")
    if 3 in parts and unit and not (is_gb and reduced):
        out.append("unit interval labelling but minors are not a reduced Groebner basis")
    if 4 in parts and is_gb and not poor:
        out.append("Groebner basis but not poor closed")
    if 5 in parts and d1_connected and is_gb != closed:
        out.append(f"d=1: Groebner basis is {is_gb} but closed is {closed}")
    return out


def _check_gb_instance(case) -> VerificationReport:
    cx, parts, fld = case
    rep = _part(case)
    rep.checked = 1
    closed, unit, poor = is_closed_lab(cx), is_unit_interval_lab(cx), is_poor_closed_lab(cx)
    d1c = cx.d == 1 and cx.is_connected()
    is_gb, reduced = _gb_of(cx, fld)
    problems = _gb_failures(cx, is_gb, reduced, closed, unit, poor, parts, d1c)
    if problems and fld is not QQ:
        # modular evidence only screens; confirm over the rationals
        rep.count("qq_confirmations")
        is_gb, reduced = _gb_of(cx, QQ)
        problems = _gb_failures(cx, is_gb, reduced, closed, unit, poor, parts, d1c)
    rep.count("gb_true" if is_gb else "gb_false")
    rep.count("closed" if closed else "not_closed")
    rep.count("unit" if unit else "not_unit")
    for msg in problems:
        rep.fail(cx, {"message": msg, "gb": is_gb, "reduced": reduced, "closed": closed, "unit": unit, "poor_closed": poor})
    return rep


def gb_fixtures() -> list:
    return [
        bsv_fixture(),
        SimplicialComplex.full(4, 2),
        SimplicialComplex.full(4, 1),
        SimplicialComplex.from_facets(3, [(1, 3), (2, 3)]),
        SimplicialComplex.from_facets(3, [(1, 2), (2, 3)]),
        SimplicialComplex.from_facets(5, [(1, 2, 3)]),
    ]


def run_thm_gb(
    parts=(2, 3, 4, 5),
    n_max: int = 5,
    ds=(1, 2),
    source: str = "exhaustive",
    field=None,
    workers: int = 1,
    complexes=None,
) -> VerificationReport:
    """Labelled Groebner statements over every labelled connected graph (or fixtures).

    Part 2: closed => reduced GB. Part 3: unit interval => reduced GB.
    Part 4: GB => poor closed. Part 5 (d = 1, connected): GB <=> closed.
    Every labelling is covered because every relabelling of a graph is
    itself one of the enumerated labelled graphs.
    """
    start = time.perf_counter()
    fld = _field(field)
    parts = tuple(parts)
    if complexes is not None:
        instances = list(complexes)
        src = {"kind": "given", "count": len(instances)}
    elif source == "fixtures":
        instances = gb_fixtures()
        src = {"kind": "fixtures", "count": len(instances)}
    else:
        instances = [delta_d(g, d) for g in _labelled_graphs(n_max, connected=True) for d in ds]
        src = {"kind": "exhaustive", "n_max": n_max, "d": list(ds), "connected": True}
    src["field"] = fld.name
    src["parts"] = list(parts)
    res = _fan_out(_check_gb_instance, [(cx, parts, fld) for cx in instances], workers)
    name = "THM-GB-" + "/".join(str(p) for p in parts) if len(parts) > 1 else f"THM-GB-{parts[0]}"
    return _collect(name, src, None, res, start)


# ---------------------------------------------------------------------------
# proper <=> unit, the connection lemma, strong => global
# ---------------------------------------------------------------------------


def _check_proper_unit(case) -> VerificationReport:
    cx, budget, label = case
    rep = _part(case)
    rep.checked = 1
    p = exists_labelling(cx, "proper", budget=budget)
    u = exists_labelling(cx, "unit", budget=budget)
    for o, name in ((p, "proper"), (u, "unit")):
        if o.found and not (is_proper_interval_lab if name == "proper" else is_unit_interval_lab)(relabel(cx, o.certificate)):
            rep.fail(cx, {"message": f"{name} certificate does not re-verify", "labelling": o.certificate})
    if SearchOutcome.BUDGET in (p.status, u.status):
        rep.undecided(cx, {"proper": p.category, "unit": u.category})
    elif p.found != u.found:
        rep.fail(cx, {"proper": p.category, "unit": u.category, "source": label})
    rep.count(f"exists_{'unit' if u.found else 'none'}")
    # labelled level on connected complexes, via the connection lemma
    if cx.is_connected() and is_proper_interval_lab(cx):
        rep.count("labelled_connected_proper")
        if not is_unit_interval_lab(cx):
            rep.note(cx, {"message": "proper but not unit under the given labelling",
                          "connection_some": lemma_connection_holds(cx, "some")})
    return rep


def run_thm_proper_unit(
    n_max: int = 5,
    ds=(1, 2),
    random_count: int = 500,
    seed: int = 0,
    budget: int = DEFAULT_PERM_BUDGET,
    workers: int = 1,
    complexes=None,
) -> VerificationReport:
    """Existence of a proper interval labelling matches existence of a unit interval one.

    Labelled proper-but-not-unit connected complexes are recorded for review
    and do not fail the job.
    """
    start = time.perf_counter()
    cases = []
    if complexes is not None:
        cases = [(cx, budget, "given") for cx in complexes]
        src = {"kind": "given", "count": len(cases)}
    else:
        for g in _canonical_graphs(n_max):
            for d in ds:
                cases.append((delta_d(g, d), budget, "graph"))
        rng = random.Random(seed)
        for _ in range(random_count):
            cases.append((random_complex(rng, 7, 2, 8), budget, "random"))
        src = {"kind": "exhaustive+random", "n_max": n_max, "d": list(ds), "random_count": random_count,
               "random_shape": {"n_max": 7, "d_max": 2, "max_facets": 8}}
    res = _fan_out(_check_proper_unit, cases, workers)
    return _collect("THM-PROPER-UNIT", src, seed if complexes is None else None, res, start)


def _check_lem_equiv(cx) -> VerificationReport:
    rep = _part(cx)
    rep.checked = 1
    unit = is_unit_interval_lab(cx)
    proper = is_proper_interval_lab(cx)
    all_ = proper and lemma_connection_holds(cx, "all")
    some = proper and lemma_connection_holds(cx, "some")
    if not (unit == all_ == some):
        rep.fail(cx, {"unit": unit, "proper_and_all": all_, "proper_and_some": some})
    rep.count("unit" if unit else "not_unit")
    return rep


def run_lem_equiv(n_max: int = 5, ds=(1, 2), random_count: int = 500, seed: int = 0, workers: int = 1) -> VerificationReport:
    """Per labelling: unit <=> proper + every-vertex connection <=> proper + some-vertex connection."""
    start = time.perf_counter()
    items = [delta_d(g, d) for g in _labelled_graphs(n_max) for d in ds]
    rng = random.Random(seed)
    items += [random_complex(rng, 7, 2, 8) for _ in range(random_count)]
    res = _fan_out(_check_lem_equiv, items, workers)
    src = {"kind": "exhaustive+random", "n_max": n_max, "d": list(ds), "random_count": random_count}
    return _collect("LEM-EQUIV", src, seed, res, start)


def _check_lem_global(case) -> VerificationReport:
    cx, rep_ = case
    out = _part(case)
    out.checked = 1
    if not is_strong_interval_with_rep(cx, rep_):
        out.fail(cx, {"message": "supplied representation does not represent the complex", "rep": rep_})
        return out
    pi = rep_.labelling()
    if not is_global_interval_lab(relabel(cx, pi)):
        out.fail(cx, {"message": "sorted-interval labelling is not global interval", "rep": rep_}, labelling=pi)
    return out


def run_lem_global(
    random_count: int = 300, seed: int = 0, n_range=(2, 7), ds=(1, 2, 3), search_count: int = 100,
    search_budget: int = 50_000, workers: int = 1,
) -> VerificationReport:
    """A strong interval complex becomes global interval once vertices are sorted by interval.

    Instances: complexes generated from random representations, plus random
    complexes for which the bounded representation search succeeds.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    cases = []
    for _ in range(random_count):
        n = rng.randint(*n_range)
        r = random_interval_rep(rng, n, denominators=(1, 2))
        for d in ds:
            if d + 1 <= n:
                cases.append((complex_from_rep(r, d), r))
    found = exhausted = limited = 0
    for _ in range(search_count):
        cx = random_complex(rng, 5, 2, 6)
        o = find_interval_rep(cx, budget=search_budget)
        if o.found:
            found += 1
            cases.append((cx, o.certificate))
        elif o.status == SearchOutcome.EXHAUSTED:
            exhausted += 1
        else:
            limited += 1
    res = _fan_out(_check_lem_global, cases, workers)
    src = {"kind": "random", "reps": random_count, "searched": search_count, "n_range": list(n_range), "d": list(ds)}
    rep = _collect("LEM-GLOBAL", src, seed, res, start)
    rep.stats.update({"search_found": found, "search_exhausted": exhausted, "search_budget_limited": limited})
    return rep


# ---------------------------------------------------------------------------
# monotonicity in d
# ---------------------------------------------------------------------------


_MONO = (("unit", is_unit_interval_lab), ("global", is_global_interval_lab), ("proper", is_proper_interval_lab))


def _check_monotone(case) -> VerificationReport:
    g, ds = case
    rep = _part(case)
    for d in ds:
        lo, hi = delta_d(g, d), delta_d(g, d + 1)
        for name, pred in _MONO:
            rep.checked += 1
            if pred(lo):
                rep.count(f"{name}_at_d")
                if not pred(hi):
                    rep.fail(g, {"predicate": name, "d": d, "message": f"{name} at d={d} but not at d={d + 1}"})
    return rep


def check_monotone_strong(g: Graph, rep_, d: int) -> bool | None:
    """``None`` when ``rep_`` does not represent the d-complex, else whether it also represents the (d+1)-complex."""
    if g.has_isolated_vertex():
        raise PreconditionError("the strong-interval clause needs a graph without isolated vertices")
    if not is_strong_interval_with_rep(delta_d(g, d), rep_):
        return None
    return is_strong_interval_with_rep(delta_d(g, d + 1), rep_)


def _strong_instances(rng, count, n_max, ds):
    """Pairs (graph, rep, d) where rep represents delta_d(graph), found by matching
    complexes generated from random representations against all labelled graphs."""
    index = {}
    for g in _labelled_graphs(n_max, n_min=2):
        if g.has_isolated_vertex():
            continue
        for d in ds:
            index.setdefault((g.n, d, delta_d(g, d).facets), []).append(g)
    out = []
    for _ in range(count):
        n = rng.randint(2, n_max)
        r = random_interval_rep(rng, n)
        for d in ds:
            for g in index.get((n, d, complex_from_rep(r, d).facets), []):
                out.append((g, r, d))
    return out


def run_thm_monotone(
    n_max: int = 5, ds=(1, 2, 3), strong: bool = True, strong_count: int = 2000, seed: int = 0, workers: int = 1,
    graphs=None,
) -> VerificationReport:
    """Same-labelling persistence from d to d+1 for unit, global and proper; and
    for strong interval with the same representation on graphs without isolated vertices."""
    start = time.perf_counter()
    if graphs is not None:
        graphs = list(graphs)
        if strong and any(g.has_isolated_vertex() for g in graphs):
            raise PreconditionError("the strong-interval clause needs graphs without isolated vertices")
        items = graphs
        src = {"kind": "given", "count": len(graphs), "d": list(ds)}
    else:
        items = list(_labelled_graphs(n_max))
        src = {"kind": "exhaustive", "n_max": n_max, "d": list(ds)}
    res = _fan_out(_check_monotone, [(g, tuple(ds)) for g in items], workers)
    report = _collect("THM-MONOTONE", src, seed, res, start)
    if strong and graphs is None:
        rng = random.Random(seed)
        triples = _strong_instances(rng, strong_count, n_max, ds)
        for g, r, d in triples:
            report.checked += 1
            report.count("strong_instances")
            if check_monotone_strong(g, r, d) is False:
                report.fail(g, {"predicate": "strong", "d": d, "rep": r})
        src["strong_random_reps"] = strong_count
    report.millis = int((time.perf_counter() - start) * 1000)
    return report


# ---------------------------------------------------------------------------
# sortability
# ---------------------------------------------------------------------------


def _check_cor_sort(case) -> VerificationReport:
    g, ds, persistence = case
    rep = _part(case)
    for d in ds:
        rep.checked += 1
        unit = is_unit_interval_lab(delta_d(g, d))
        srt = is_sortable_complex(ind_d(g, d))
        if unit != bool(srt):
            rep.fail(g, {"d": d, "unit": unit, "sortable": bool(srt), "failing_pair": srt.failing_pair})
            continue
        rep.count("both_true" if unit else "both_false")
        if unit and persistence:
            # persistence for every k >= d under the same labelling
            for k in range(d + 1, max(g.n, d + 1) + 1):
                cx = delta_d(g, k)
                if not (is_unit_interval_lab(cx) and is_proper_interval_lab(cx) and is_sortable_complex(ind_d(g, k))):
                    rep.fail(g, {"d": d, "k": k, "message": "persistence to larger k fails"})
    return rep


def run_cor_sort(
    n_max: int = 5, ds=(1, 2), random_count: int = 200, random_n: int = 6, seed: int = 0, persistence: bool = True,
    workers: int = 1,
) -> VerificationReport:
    """Per labelling: unit interval connected-set complex <=> sortable independence complex.

    With ``persistence`` each unit labelling is also checked to stay unit,
    proper and sortable for every larger k.
    """
    start = time.perf_counter()
    items = [(g, tuple(ds), persistence) for g in _labelled_graphs(n_max)]
    rng = random.Random(seed)
    items += [(random_graph(rng, random_n), tuple(ds), persistence) for _ in range(random_count)]
    res = _fan_out(_check_cor_sort, items, workers)
    src = {"kind": "exhaustive+random", "n_max": n_max, "d": list(ds), "random_count": random_count, "random_n": random_n,
           "persistence": persistence}
    return _collect("COR-SORT", src, seed, res, start)


# ---------------------------------------------------------------------------
# interval graphs
# ---------------------------------------------------------------------------


def _check_interval(case) -> VerificationReport:
    g, budget = case
    rep = _part(case)
    rep.checked = 1
    res = is_interval_graph(g, budget=budget)
    c1p = has_consecutive_cliques(g) is not None
    if res.is_interval != c1p:
        rep.fail(g, {"global_labelling": res.labelling, "consecutive_cliques": c1p})
        return rep
    rep.count("interval" if c1p else "not_interval")
    if res.is_interval:
        if not res.rep_verified:
            rep.fail(g, {"message": "clique representation does not re-verify", "rep": res.rep}, labelling=res.labelling)
        h = g.relabel(res.labelling)
        for k in range(1, g.n):
            if not is_global_interval_lab(delta_d(h, k)):
                rep.fail(g, {"message": f"labelling not {k}-global", "k": k}, labelling=res.labelling)
        if not g.has_isolated_vertex():
            for k in range(2, g.n):
                if not is_strong_interval_with_rep(delta_d(g, k), res.rep):
                    rep.fail(g, {"message": f"clique representation does not represent d={k}", "rep": res.rep})
    return rep


def run_thm_interval(n_max: int = 6, budget: int = DEFAULT_PERM_BUDGET, workers: int = 1, graphs=None) -> VerificationReport:
    """1-global labelling exists <=> consecutive-cliques ordering exists <=> clique representation re-verifies."""
    start = time.perf_counter()
    items = list(graphs) if graphs is not None else list(_canonical_graphs(n_max))
    res = _fan_out(_check_interval, [(g, budget) for g in items], workers)
    src = {"kind": "canonical", "n_max": n_max} if graphs is None else {"kind": "given", "count": len(items)}
    return _collect("THM-INTERVAL", src, None, res, start)


# ---------------------------------------------------------------------------
# forbidden configurations
# ---------------------------------------------------------------------------


def _check_cycle(case) -> VerificationReport:
    g, ds, budget = case
    rep = _part(case)
    for d in ds:
        cx = delta_d(g, d)
        for pred in ("proper", "global"):
            rep.checked += 1
            o = exists_labelling(cx, pred, budget=budget)
            if o.status == SearchOutcome.BUDGET:
                rep.undecided(g, {"d": d, "predicate": pred})
            elif o.found:
                rep.count(f"{pred}_found")
                if has_induced_cycle_of_length_at_least(g, d + 3):
                    rep.fail(g, {"d": d, "predicate": pred, "message": f"induced cycle of length >= {d + 3}"},
                             labelling=o.certificate)
    return rep


def _check_clawpaw(case) -> VerificationReport:
    g, ds, budget = case
    rep = _part(case)
    for d in ds:
        rep.checked += 1
        o = exists_labelling(delta_d(g, d), "proper", budget=budget)
        if o.status == SearchOutcome.BUDGET:
            rep.undecided(g, {"d": d})
            continue
        if not o.found:
            continue
        rep.count("proper_found")
        claw, paw = find_d_claw(g, d), find_d_paw(g, d)
        if claw is not None:
            rep.fail(g, {"d": d, "claw": claw}, labelling=o.certificate)
        if paw is not None:
            rep.fail(g, {"d": d, "paw": list(paw)}, labelling=o.certificate)
    return rep


def run_prop_cycle(n_max: int = 6, ds=(1, 2), budget: int = DEFAULT_PERM_BUDGET, workers: int = 1) -> VerificationReport:
    """A proper or global interval labelling rules out induced cycles of length >= d+3."""
    start = time.perf_counter()
    items = [(g, tuple(ds), budget) for g in _canonical_graphs(n_max)]
    res = _fan_out(_check_cycle, items, workers)
    return _collect("PROP-CYCLE", {"kind": "canonical", "n_max": n_max, "d": list(ds)}, None, res, start)


def run_prop_clawpaw(n_max: int = 6, ds=(1, 2), budget: int = DEFAULT_PERM_BUDGET, workers: int = 1) -> VerificationReport:
    """A proper interval labelling rules out induced d-claws and d-paws."""
    start = time.perf_counter()
    items = [(g, tuple(ds), budget) for g in _canonical_graphs(n_max)]
    res = _fan_out(_check_clawpaw, items, workers)
    return _collect("PROP-CLAWPAW", {"kind": "canonical", "n_max": n_max, "d": list(ds)}, None, res, start)


def _forest_expected(g: Graph, d: int) -> bool:
    for comp in g.components():
        if len(comp) <= d + 1:
            continue
        h = g.induced(comp)
        if any(len(h.adj[v]) > 2 for v in h.adj):
            return False  # a tree with a branch vertex is not a path
    return True


def _check_unit_expectation(case) -> VerificationReport:
    g, d, expected, budget, label = case
    rep = _part(case)
    rep.checked = 1
    o = exists_labelling(delta_d(g, d), "unit", budget=budget)
    if o.status == SearchOutcome.BUDGET:
        rep.undecided(g, {"d": d, "kind": label})
    elif o.found != expected:
        rep.fail(g, {"d": d, "kind": label, "expected_unit": expected, "search": o.category})
    return rep


def run_cor_cycle_forest(
    kind: str = "both", cycle_range=(3, 9), forest_n_max: int = 7, forest_ds=(1, 2, 3),
    budget: int = DEFAULT_PERM_BUDGET, workers: int = 1,
) -> VerificationReport:
    """Cycles: unit interval labelling exists <=> d >= n-2. Forests: <=> every
    component is a path or has at most d+1 vertices."""
    if kind not in ("cycle", "forest", "both"):
        raise ValueError("kind must be 'cycle', 'forest' or 'both'")
    start = time.perf_counter()
    items = []
    src = {"kind": kind}
    if kind in ("cycle", "both"):
        lo, hi = cycle_range
        for n in range(lo, hi + 1):
            g = cycle_graph(n)
            for d in range(1, n + 1):
                items.append((g, d, d >= n - 2, budget, "cycle"))
        src["cycle_range"] = list(cycle_range)
    if kind in ("forest", "both"):
        for n in range(1, forest_n_max + 1):
            for g in enumerate_graphs(n, "canonical", filter=Graph.is_forest, hereditary=True):
                for d in forest_ds:
                    items.append((g, d, _forest_expected(g, d), budget, "forest"))
        src["forest_n_max"] = forest_n_max
        src["forest_d"] = list(forest_ds)
    res = _fan_out(_check_unit_expectation, items, workers)
    return _collect("COR-CYCLEFOREST", src, None, res, start)


def run_cor_corona(instances=None, budget: int = DEFAULT_PERM_BUDGET, workers: int = 1) -> VerificationReport:
    """Coronas with three independent attached vertices over a (d-1)-vertex connected piece are not d-unit interval."""
    start = time.perf_counter()
    insts = corona_instances() if instances is None else list(instances)
    items = [(g, d, False, budget, name) for name, d, g in insts]
    res = _fan_out(_check_unit_expectation, items, workers)
    return _collect("COR-CORONA", {"kind": "fixtures", "names": [i[0] for i in insts]}, None, res, start)


# ---------------------------------------------------------------------------
# proper interval graph criteria
# ---------------------------------------------------------------------------


def _check_labelled_criteria(g: Graph) -> VerificationReport:
    rep = _part(g)
    rep.checked = 1
    cx = delta_d(g, 1)
    values = {c: cor33_criterion(g, c) for c in CRITERIA if c != "C22"}
    values["closed_lab"] = is_closed_lab(cx)
    values["unit_lab"] = is_unit_interval_lab(cx)
    if len(set(values.values())) != 1:
        rep.fail(g, values)
    rep.count("all_true" if values["unit_lab"] else "all_false")
    return rep


def _check_existence_criteria(case) -> VerificationReport:
    g, budget, all_k = case
    rep = _part(case)
    rep.checked = 1
    if g.n == 0:
        return rep
    cx = delta_d(g, 1)
    unit = exists_labelling(cx, "unit", budget=budget)
    proper = exists_labelling(cx, "proper", budget=budget)
    closed = exists_labelling(cx, "closed", budget=budget)
    if SearchOutcome.BUDGET in (unit.status, proper.status, closed.status):
        rep.undecided(g, "labelling search budget")
        return rep
    interval = is_interval_graph(g, budget=budget).is_interval
    values = {
        "unit": unit.found,
        "proper": proper.found,
        "closed": closed.found,
        "C22": cor33_criterion(g, "C22"),
        "clawfree_interval": interval and find_d_claw(g, 1) is None,
    }
    if all_k:
        # every k separately; the labelling may change with k
        units = [exists_labelling(delta_d(g, k), "unit", budget=budget) for k in range(2, g.n)]
        propers = [exists_labelling(delta_d(g, k), "proper", budget=budget) for k in range(2, g.n)]
        if any(o.status == SearchOutcome.BUDGET for o in units + propers):
            rep.undecided(g, "labelling search budget (k > 1)")
            return rep
        values["all_k_unit"] = unit.found and all(o.found for o in units)
        values["all_k_proper"] = proper.found and all(o.found for o in propers)
        cert = [unit] + units
        values["all_k_sortable"] = all(
            o.found and bool(is_sortable_complex(ind_d(g.relabel(o.certificate), k)))
            for k, o in enumerate(cert, start=1)
        )
    if len(set(values.values())) != 1:
        rep.fail(g, values)
    rep.count("proper_interval" if unit.found else "not_proper_interval")
    return rep


def run_cor_proper_interval(
    labelled_n_max: int = 5, canonical_n_max: int = 6, budget: int = DEFAULT_PERM_BUDGET, all_k: bool = True,
    workers: int = 1,
) -> VerificationReport:
    """The proper-interval criteria agree: labelling-dependent ones per labelling
    (connected graphs), existence ones per graph."""
    start = time.perf_counter()
    res = _fan_out(_check_labelled_criteria, list(_labelled_graphs(labelled_n_max, connected=True)), workers)
    res += _fan_out(_check_existence_criteria, [(g, budget, all_k) for g in _canonical_graphs(canonical_n_max)], workers)
    src = {"kind": "exhaustive", "labelled_n_max": labelled_n_max, "canonical_n_max": canonical_n_max, "all_k": all_k}
    return _collect("COR-PROPER-INTERVAL", src, None, res, start)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


THEOREMS = {
    "LEM-DET": run_lem_det,
    "THM-GB-1": run_thm_gb1,
    "THM-GB-2": partial(run_thm_gb, parts=(2,)),
    "THM-GB-3": partial(run_thm_gb, parts=(3,)),
    "THM-GB-4": partial(run_thm_gb, parts=(4,)),
    "THM-GB-5": partial(run_thm_gb, parts=(5,), ds=(1,)),
    "LEM-GLOBAL": run_lem_global,
    "LEM-EQUIV": run_lem_equiv,
    "THM-PROPER-UNIT": run_thm_proper_unit,
    "THM-MONOTONE": run_thm_monotone,
    "COR-SORT": run_cor_sort,
    "THM-INTERVAL": run_thm_interval,
    "PROP-CYCLE": run_prop_cycle,
    "PROP-CLAWPAW": run_prop_clawpaw,
    "COR-CYCLEFOREST": run_cor_cycle_forest,
    "COR-CORONA": run_cor_corona,
    "COR-PROPER-INTERVAL": run_cor_proper_interval,
}


@dataclass
class TheoremJob:
    theorem: str
    params: dict = field(default_factory=dict)
    workers: int = 1

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem id {self.theorem!r}")
        for k, v in self.params.items():
            if "budget" in k and (not isinstance(v, int) or v <= 0):
                raise ValueError(f"{k} must be a positive integer")

    def run(self) -> VerificationReport:
        return run_job(self)


def run_job(job: TheoremJob) -> VerificationReport:
    fn = THEOREMS[job.theorem]
    rep = fn(**job.params, workers=job.workers)
    rep.theorem = job.theorem
    return rep
