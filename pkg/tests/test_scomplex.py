import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from detfacet.errors import PreconditionError
from detfacet.graphs import Graph, delta_d, star_graph
from detfacet.harness import random_complex, random_interval_rep
from detfacet.scomplex import (
    LABELLED,
    PREDICATES,
    IntervalRep,
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
    skeleton,
    union_is_interval,
    vertex_orbits,
)

P3 = SimplicialComplex.from_facets(3, [(1, 2), (2, 3)])
P3B = SimplicialComplex.from_facets(3, [(1, 3), (2, 3)])
SINGLE = SimplicialComplex.from_facets(4, [(1, 2, 3)])


def test_purity_and_range_checked():
    with pytest.raises(PreconditionError):
        SimplicialComplex.from_facets(4, [(1, 2), (1, 2, 3)])
    with pytest.raises(PreconditionError):
        SimplicialComplex.from_facets(3, [(1, 4)])
    with pytest.raises(PreconditionError):
        SimplicialComplex(3, 1, frozenset({(1, 1)}))


def test_relabel_examples():
    assert relabel(P3B, Labelling.identity(3)) == P3B
    pi = Labelling((1, 3, 2))
    assert relabel(P3B, pi).facets == {(1, 2), (2, 3)}
    assert relabel(relabel(P3B, pi), pi.inverse()) == P3B
    with pytest.raises(PreconditionError):
        relabel(P3B, Labelling.identity(4))
    with pytest.raises(PreconditionError):
        Labelling((1, 1, 2))


def test_bsv_flags(bsv):
    assert is_poor_closed_lab(bsv)
    assert not is_closed_lab(bsv)
    assert not is_unit_interval_lab(bsv)


def test_labelled_predicate_examples():
    for fn in LABELLED.values():
        assert fn(SINGLE)
        assert fn(P3)
    assert not is_poor_closed_lab(P3B)
    assert not is_global_interval_lab(P3B)
    claw = delta_d(star_graph(3), 1)
    for images in permutations(range(1, 5)):
        assert not is_proper_interval_lab(relabel(claw, Labelling(images)))


def test_empty_complex_is_vacuous():
    empty = SimplicialComplex(3, 1, frozenset())
    assert all(fn(empty) for fn in LABELLED.values())


def test_strong_interval_examples():
    rep = IntervalRep(((0, 1), (1, 2), (2, 3)))
    assert is_strong_interval_with_rep(P3, rep)
    assert not is_strong_interval_with_rep(SimplicialComplex.from_facets(3, [(1, 2), (2, 3), (1, 3)]), rep)
    same = IntervalRep(((0, 1),) * 4)
    assert is_strong_interval_with_rep(SimplicialComplex.full(4, 2), same)


def test_union_is_interval_touching():
    assert union_is_interval([(0, 1), (1, 2)])
    assert not union_is_interval([(0, 1), (Fraction(3, 2), 2)])
    assert not union_is_interval([])


def test_exists_examples():
    o = exists_labelling(P3B, "closed")
    assert o.found and is_closed_lab(relabel(P3B, o.certificate))
    assert exists_labelling(delta_d(star_graph(3), 1), "proper").status == SearchOutcome.EXHAUSTED
    for pred in PREDICATES:
        assert exists_labelling(SINGLE, pred).found


def test_exists_budget_signalled(bsv):
    o = exists_labelling(bsv, "closed", budget=50)
    assert o.status == SearchOutcome.BUDGET and o.category == "BudgetExceeded"


def test_bsv_unit_search_exhausts(bsv):
    assert exists_labelling(bsv, "unit").category == "ExhaustedNone"


def test_unknown_predicate():
    with pytest.raises(ValueError):
        exists_labelling(P3, "round")


def _brute(cx, pred):
    fn = LABELLED[pred]
    return any(fn(relabel(cx, Labelling(p))) for p in permutations(range(1, cx.n + 1)))


def test_search_matches_brute_force():
    rng = random.Random(2024)
    for _ in range(150):
        cx = random_complex(rng, n_max=6, d_max=2, max_facets=7)
        for pred in PREDICATES:
            o = exists_labelling(cx, pred)
            assert o.found == _brute(cx, pred), (cx, pred)
            if o.found:
                assert LABELLED[pred](relabel(cx, o.certificate))
            assert exists_labelling(cx, pred, use_symmetry=False).found == o.found


def test_search_matches_brute_force_d0():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 5)
        facets = [f for f in combinations(range(1, n + 1), 1) if rng.random() < 0.5]
        cx = SimplicialComplex(n, 0, frozenset(facets))
        for pred in PREDICATES:
            assert exists_labelling(cx, pred).found == _brute(cx, pred)


def test_vertex_orbits_partition(bsv):
    orbits = vertex_orbits(bsv)
    assert sorted(v for o in orbits for v in o) == list(range(1, 12))
    assert sorted(sorted(o) for o in vertex_orbits(P3)) == [[1, 3], [2]]
    assert len(vertex_orbits(SimplicialComplex.full(5, 2))) == 1


def test_skeleton_examples(bsv):
    assert skeleton(SINGLE, 2) == SINGLE
    assert skeleton(SINGLE, 1).facets == {(1, 2), (1, 3), (2, 3)}
    assert len(skeleton(bsv, 1).facets) == 18
    with pytest.raises(PreconditionError):
        skeleton(SINGLE, 3)


def test_skeleton_inherits_unit():
    rng = random.Random(3)
    for _ in range(200):
        cx = random_complex(rng, 6, 2, 8)
        if is_unit_interval_lab(cx):
            for k in range(cx.d + 1):
                assert is_unit_interval_lab(skeleton(cx, k))


def test_determinantal_facet_ideal_shapes():
    b = determinantal_facet_ideal(SimplicialComplex.full(4, 2))
    assert len(b) == 4 and b.ctx.rows == 3
    assert len(determinantal_facet_ideal(SimplicialComplex(3, 1, frozenset()))) == 0
    edge = determinantal_facet_ideal(P3B)
    assert edge.render()[0] == "x[1,1]*x[2,3] - x[1,3]*x[2,1]"


def test_unit_implies_global_proper_poor_closed():
    rng = random.Random(9)
    for _ in range(400):
        cx = random_complex(rng, 7, 2, 8)
        if is_unit_interval_lab(cx):
            assert is_global_interval_lab(cx)
            assert is_proper_interval_lab(cx)
            assert is_poor_closed_lab(cx)
        assert is_unit_interval_lab(cx) == (is_proper_interval_lab(cx) and lemma_connection_holds(cx, "some"))


def test_find_interval_rep():
    o = find_interval_rep(P3)
    assert o.found and is_strong_interval_with_rep(P3, o.certificate)
    c4 = delta_d(Graph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})), 1)
    assert find_interval_rep(c4).status == SearchOutcome.EXHAUSTED
    assert find_interval_rep(SimplicialComplex.full(8, 1)).status == SearchOutcome.BUDGET


reps = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, 10), st.integers(0, 4)), min_size=n, max_size=n)
).map(lambda ivs: IntervalRep(tuple((a, a + w) for a, w in ivs)))


@settings(max_examples=200, deadline=None)
@given(reps, st.integers(0, 3))
def test_rep_complex_round_trip(rep, d):
    if d + 1 > rep.n:
        return
    cx = complex_from_rep(rep, d)
    assert is_strong_interval_with_rep(cx, rep)
    assert is_strong_interval_with_rep(cx, rep.transformed(3, -2))
    pi = rep.labelling()
    assert is_strong_interval_with_rep(relabel(cx, pi), rep.relabelled(pi))
    assert is_global_interval_lab(relabel(cx, pi))


@settings(max_examples=100, deadline=None)
@given(st.permutations(list(range(1, 7))))
def test_relabel_inverse_property(images):
    rng = random.Random(sum(i * v for i, v in enumerate(images)))
    cx = random_complex(rng, 6, 2, 8)
    n = cx.n
    pi = Labelling(tuple(v for v in images if v <= n)) if n == 6 else Labelling.identity(n)
    assert relabel(relabel(cx, pi), pi.inverse()) == cx


def test_random_rep_generator_is_seeded():
    a = random_interval_rep(random.Random(1), 5, denominators=(1, 2))
    b = random_interval_rep(random.Random(1), 5, denominators=(1, 2))
    assert a == b
