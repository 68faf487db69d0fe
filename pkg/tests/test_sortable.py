import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from detfacet.errors import PreconditionError
from detfacet.graphs import delta_d, ind_d, path_graph, star_graph
from detfacet.harness import enumerate_graphs, random_graph
from detfacet.scomplex import Labelling, is_unit_interval_lab
from detfacet.sortable import (
    is_sortable_complex,
    is_sortable_family,
    sort_pair,
    sortable_by_cardinality,
)


def test_sort_pair_examples():
    assert sort_pair((1, 3), (2, 4)) == ((1, 3), (2, 4))
    assert sort_pair((1, 4), (2, 3)) == ((1, 3), (2, 4))
    assert sort_pair((1, 2), (1, 3)) == ((1, 2), (1, 3))
    with pytest.raises(PreconditionError):
        sort_pair((1,), (2, 3))
    assert sort_pair((1,), (2, 3), equal_size=False) == ((1, 3), (2,))


sets = st.lists(st.integers(1, 9), min_size=0, max_size=5, unique=True).map(lambda s: tuple(sorted(s)))


@settings(max_examples=300, deadline=None)
@given(sets, sets)
def test_sort_pair_properties(F, G):
    A, B = sort_pair(F, G, equal_size=False)
    assert sorted(A + B) == sorted(F + G)
    assert 0 <= len(A) - len(B) <= 1
    assert sort_pair(A, B, equal_size=False) == (A, B)  # idempotent
    assert sort_pair(F, G, equal_size=False) == sort_pair(G, F, equal_size=False)


def test_family_examples():
    assert is_sortable_family({(1,), (3,), (2,)})
    assert is_sortable_family({(1, 3)})
    res = is_sortable_family({(1, 4), (2, 3)})
    assert not res and res.failing_pair[2] == ((1, 3), (2, 4))
    with pytest.raises(PreconditionError):
        is_sortable_family({(1,), (1, 2)})


def test_complex_examples():
    assert is_sortable_complex(ind_d(path_graph(3), 1))
    assert is_sortable_complex({0: {()}})
    claw = star_graph(3)
    for images in permutations(range(1, 5)):
        assert not is_sortable_complex(ind_d(claw.relabel(Labelling(images)), 1))


def test_equal_size_notion_is_weaker_on_the_claw():
    # per-size closure holds under every labelling, so it cannot detect the claw
    claw = star_graph(3)
    for images in permutations(range(1, 5)):
        verdicts = sortable_by_cardinality(ind_d(claw.relabel(Labelling(images)), 1))
        assert all(verdicts.values())


def test_sortable_iff_unit_interval_n4():
    for g in enumerate_graphs(4, "labelled"):
        for d in (1, 2, 3):
            assert bool(is_sortable_complex(ind_d(g, d))) == is_unit_interval_lab(delta_d(g, d))


def test_sortable_iff_unit_interval_random_n7():
    rng = random.Random(77)
    for _ in range(60):
        g = random_graph(rng, 7, 0.45)
        assert bool(is_sortable_complex(ind_d(g, 1))) == is_unit_interval_lab(delta_d(g, 1))


def test_result_json():
    res = is_sortable_family({(1, 4), (2, 3)})
    assert res.to_json() == {"sortable": False, "failing_pair": [[1, 4], [2, 3], [[1, 3], [2, 4]]]}
    with pytest.raises(PreconditionError):
        is_sortable_complex({2: {(1,)}})
