import time
from itertools import combinations

import pytest
import sympy

from detfacet.harness import bsv_fixture
from detfacet.polyring import MatrixContext, Polynomial


def sym_gens(ctx: MatrixContext):
    """Sympy symbols in lex order x[1,1] > x[1,2] > ... > x[m,n]."""
    return [sympy.Symbol(f"x{r}_{c}") for r in range(1, ctx.rows + 1) for c in range(1, ctx.cols + 1)]


def to_sympy(p: Polynomial):
    expr = sympy.Integer(0)
    for mono, coeff in p.terms:
        term = sympy.Rational(coeff.numerator, coeff.denominator) if hasattr(coeff, "denominator") else sympy.Integer(coeff)
        for (r, c), e in mono:
            term *= sympy.Symbol(f"x{r}_{c}") ** e
        expr += term
    return sympy.expand(expr)


def sym_matrix(ctx: MatrixContext):
    return sympy.Matrix(ctx.rows, ctx.cols, lambda r, c: sympy.Symbol(f"x{r + 1}_{c + 1}"))


@pytest.fixture
def bsv():
    return bsv_fixture()


@pytest.fixture
def ctx23():
    return MatrixContext(2, 3)


def pairs(n):
    return list(combinations(range(1, n + 1), 2))


# acceptance lines are collected here and repeated in the terminal summary
ACCEPTANCE_LINES = []
SUITE_LIMIT_S = 20 * 60


def pytest_sessionstart(session):
    session.config._detfacet_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - config._detfacet_start
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
        ok = elapsed < SUITE_LIMIT_S
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} criterion 13 (suite time): {elapsed:.1f} s, limit {SUITE_LIMIT_S} s"
        )
