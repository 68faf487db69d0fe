from itertools import combinations, permutations

import pytest
import sympy

from detfacet.errors import PreconditionError
from detfacet.polyring import MatrixContext, Polynomial
from detfacet.symmatrix import (
    Combination,
    MinorSpec,
    all_det_identity_cases,
    check_det_identity,
    det_columns,
    minor,
    permutation_sign,
)

from conftest import sym_matrix, to_sympy


def test_permutation_sign_matches_sympy():
    from sympy.combinatorics import Permutation

    for perm in permutations(range(5)):
        assert permutation_sign(perm) == Permutation(list(perm)).signature()


def test_two_by_two_minor():
    ctx = MatrixContext(2, 4)
    x = lambda r, c: Polynomial.var(r, c, ctx)  # noqa: E731
    assert minor(MinorSpec((2, 4), (1, 2)), ctx) == x(1, 2) * x(2, 4) - x(1, 4) * x(2, 2)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (3, 5), (4, 5), (5, 6)])
def test_minors_match_sympy(m, n):
    ctx = MatrixContext(m, n)
    X = sym_matrix(ctx)
    rows = tuple(range(1, m + 1))
    for cols in combinations(range(1, n + 1), m):
        expected = X.extract([r - 1 for r in rows], [c - 1 for c in cols]).det(method="berkowitz")
        assert sympy.expand(to_sympy(minor(MinorSpec(cols, rows), ctx)) - expected) == 0


def test_three_by_three_has_six_terms():
    assert len(minor(MinorSpec((1, 2, 3), (1, 2, 3)), MatrixContext(3, 3))) == 6


def test_leading_term_is_diagonal():
    ctx = MatrixContext(3, 6)
    for cols in combinations(range(1, 7), 3):
        p = minor(MinorSpec.full(cols, ctx), ctx)
        assert p.lc == 1
        assert dict(p.lm) == {(k + 1, c): 1 for k, c in enumerate(cols)}


def test_minorspec_validation():
    with pytest.raises(PreconditionError):
        MinorSpec((2, 1), (1, 2))
    with pytest.raises(PreconditionError):
        MinorSpec((1, 2), (1,))


def test_det_columns_degenerate_cases():
    ctx = MatrixContext(2, 4)
    x = lambda r, c: Polynomial.var(r, c, ctx)  # noqa: E731
    assert det_columns([1, 3], (1, 2), ctx) == minor(MinorSpec((1, 3), (1, 2)), ctx)
    single = det_columns([Combination(x(1, 3), x(1, 1), 1, 3)], (2,), ctx)
    assert single == x(1, 3) * x(2, 1) - x(1, 1) * x(2, 3)
    one = Polynomial.constant(1, ctx)
    combo = det_columns([Combination(one, one, 1, 2), 4], (1, 2), ctx)
    assert combo == det_columns([1, 4], (1, 2), ctx) - det_columns([2, 4], (1, 2), ctx)


def test_det_columns_against_sympy_multilinearity():
    ctx = MatrixContext(3, 5)
    X = sym_matrix(ctx)
    x = lambda r, c: Polynomial.var(r, c, ctx)  # noqa: E731
    got = det_columns([Combination(x(1, 5), x(1, 2), 2, 5), 3, 4], (1, 2, 3), ctx)
    col = X[:, 1] * X[0, 4] - X[:, 4] * X[0, 1]
    M = sympy.Matrix.hstack(col, X[:, 2], X[:, 3])
    assert sympy.expand(to_sympy(got) - M.det()) == 0


def test_identity_examples():
    assert check_det_identity(1, (2,), 1)
    assert check_det_identity(2, (1, 2), 3)
    assert check_det_identity(4, (1, 2, 3, 4), 5)


def test_identity_all_cases_n5():
    for t in (1, 2, 3):
        for i_cols, j1 in all_det_identity_cases(t, 5):
            assert check_det_identity(t, i_cols, j1, MatrixContext(t + 1, 5))


def test_identity_preconditions():
    with pytest.raises(PreconditionError):
        check_det_identity(2, (1,), 3)
    with pytest.raises(PreconditionError):
        check_det_identity(2, (1, 2), 2)
    with pytest.raises(PreconditionError):
        check_det_identity(2, (1, 2), 3, MatrixContext(2, 3))
