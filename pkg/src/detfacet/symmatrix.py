"""Symbolic minors of the generic matrix and determinants of combination columns."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import PreconditionError
from .polyring import MatrixContext, Monomial, Polynomial

__all__ = [
    "Plain",
    "Combination",
    "MinorSpec",
    "minor",
    "det_generalized",
    "det_columns",
    "check_det_identity",
    "permutation_sign",
    "all_det_identity_cases",
]

LEIBNIZ_MAX = 4


@dataclass(frozen=True)
class Plain:
    col: int


@dataclass(frozen=True)
class Combination:
    """The column ``f * X[:, i] - g * X[:, j]``."""

    f: Polynomial | int
    g: Polynomial | int
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise PreconditionError("a combination column needs two distinct indices")


@dataclass(frozen=True)
class MinorSpec:
    cols: tuple
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "cols", tuple(self.cols))
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.cols) != len(self.rows):
            raise PreconditionError("a minor needs as many rows as columns")
        for seq in (self.cols, self.rows):
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise PreconditionError(f"indices must be strictly increasing: {seq}")

    @classmethod
    def full(cls, cols, ctx: MatrixContext) -> "MinorSpec":
        return cls(tuple(cols), tuple(range(1, ctx.rows + 1)))


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        k = start
        length = 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


_PERMS: dict = {}


def _signed_perms(size: int):
    if size not in _PERMS:
        _PERMS[size] = [(p, permutation_sign(p)) for p in permutations(range(size))]
    return _PERMS[size]


def minor(spec: MinorSpec, ctx: MatrixContext) -> Polynomial:
    """Determinant of the submatrix of X on ``spec.rows`` x ``spec.cols``.

    Every entry is a single variable, so each permutation contributes one
    monomial and the result is assembled directly.
    """
    for r in spec.rows:
        for c in spec.cols:
            ctx.check_var(r, c)
    size = len(spec.rows)
    if size == 0:
        return Polynomial.constant(1, ctx)
    if size > LEIBNIZ_MAX:
        return det_columns([Plain(c) for c in spec.cols], spec.rows, ctx)
    acc = {}
    for perm, sign in _signed_perms(size):
        mono = Monomial(sorted(((spec.rows[k], spec.cols[perm[k]]), 1) for k in range(size)))
        acc[mono] = acc.get(mono, 0) + sign
    return Polynomial.from_dict(acc, ctx)


def _column_entries(column, rows, ctx: MatrixContext):
    if isinstance(column, int):
        column = Plain(column)
    if isinstance(column, Plain):
        return [Polynomial.var(r, column.col, ctx) for r in rows]
    if isinstance(column, Combination):
        f = column.f if isinstance(column.f, Polynomial) else Polynomial.constant(column.f, ctx)
        g = column.g if isinstance(column.g, Polynomial) else Polynomial.constant(column.g, ctx)
        return [f * Polynomial.var(r, column.i, ctx) - g * Polynomial.var(r, column.j, ctx) for r in rows]
    raise TypeError(f"not a column spec: {column!r}")


def _det(matrix, ctx: MatrixContext) -> Polynomial:
    size = len(matrix)
    if size == 0:
        return Polynomial.constant(1, ctx)
    if size <= LEIBNIZ_MAX:
        total = Polynomial.zero(ctx)
        for perm, sign in _signed_perms(size):
            prod = matrix[0][perm[0]]
            for k in range(1, size):
                if not prod:
                    break
                prod = prod * matrix[k][perm[k]]
            if prod:
                total = total + prod if sign > 0 else total - prod
        return total
    # Laplace expansion along the first row
    total = Polynomial.zero(ctx)
    for j, entry in enumerate(matrix[0]):
        if not entry:
            continue
        sub = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _det(sub, ctx)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_columns(columns, rows, ctx: MatrixContext) -> Polynomial:
    """Determinant of the matrix whose k-th column is ``columns[k]`` restricted to ``rows``.

    Columns may be plain indices (in any order, repeats allowed) or
    :class:`Combination` columns.
    """
    rows = tuple(rows)
    if len(columns) != len(rows):
        raise PreconditionError(f"{len(columns)} columns but {len(rows)} rows")
    cols = [_column_entries(c, rows, ctx) for c in columns]
    matrix = [[cols[k][r] for k in range(len(cols))] for r in range(len(rows))]
    return _det(matrix, ctx)


det_generalized = det_columns


def check_det_identity(t: int, i_cols, j1: int, ctx: MatrixContext | None = None) -> bool:
    """Check the expansion identity for a combination column as a polynomial identity.

    Left side: ``det(x[1,j1]*i1 - x[1,i1]*j1, i2, ..., it)`` on rows ``2..t+1``.
    Right side: ``det(j1, i1, ..., it)`` on rows ``1..t+1`` plus
    ``sum_{r=2..t} (-1)^(r+1) x[1,ir] det(j1, i1, ..., ^ir, ..., it)`` on rows ``2..t+1``.
    """
    i_cols = tuple(i_cols)
    if t < 1 or len(i_cols) != t:
        raise PreconditionError(f"need exactly t={t} column indices, got {i_cols}")
    if len(set(i_cols)) != t or j1 in i_cols:
        raise PreconditionError("column indices must be pairwise distinct")
    if ctx is None:
        ctx = MatrixContext(t + 1, max(i_cols + (j1,)))
    if ctx.rows < t + 1:
        raise PreconditionError(f"need at least {t + 1} rows, context has {ctx.rows}")

    lower = tuple(range(2, t + 2))
    x = lambda r, c: Polynomial.var(r, c, ctx)  # noqa: E731
    i1 = i_cols[0]

    lhs = det_columns([Combination(x(1, j1), x(1, i1), i1, j1), *i_cols[1:]], lower, ctx)
    rhs = det_columns([j1, *i_cols], tuple(range(1, t + 2)), ctx)
    for r in range(2, t + 1):
        rest = [j1] + [c for k, c in enumerate(i_cols, start=1) if k != r]
        term = x(1, i_cols[r - 1]) * det_columns(rest, lower, ctx)
        rhs = rhs + term if (r + 1) % 2 == 0 else rhs - term
    return lhs == rhs


def all_det_identity_cases(t: int, n: int):
    """Every admissible ``(i_cols, j1)`` with increasing ``i_cols`` drawn from ``[n]``."""
    for i_cols in combinations(range(1, n + 1), t):
        for j1 in range(1, n + 1):
            if j1 not in i_cols:
                yield i_cols, j1
