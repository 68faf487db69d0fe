"""Sparse exact polynomials in the entries of a generic matrix.

Variables are the entries ``x[r,c]`` of an ``m x n`` matrix of indeterminates.
Monomials are ordered lexicographically with

    x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ... > x[m,n]

i.e. a variable is larger the smaller its ``(row, col)`` pair. The order does
not depend on ``n``, so monomials compare the same way in every context.

Coefficients live in the rationals (``fractions.Fraction``, with integral
values kept as plain ``int``) or in a prime field ``Z/p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    ContextMismatchError,
    InvalidVariableError,
    NoLeadingTermError,
    ParseError,
)

__all__ = [
    "QQ",
    "RationalField",
    "PrimeField",
    "MatrixContext",
    "Monomial",
    "Polynomial",
    "compare_monomials",
    "leading_term",
    "parse_polynomial",
]


# ---------------------------------------------------------------------------
# Coefficient fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalField:
    @property
    def name(self) -> str:
        return "QQ"

    @property
    def characteristic(self) -> int:
        return 0

    def convert(self, value):
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self.convert(Fraction(value))
        raise TypeError(f"cannot use {value!r} as a rational coefficient")

    def normalize(self, value):
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        return value

    def div(self, a, b):
        if b == 1:
            return a
        if b == -1:
            return -a
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return self.normalize(Fraction(a) / b)

    def render(self, value) -> str:
        return str(value)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value):
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def normalize(self, value):
        return value % self.p

    def div(self, a, b):
        b %= self.p
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return a * pow(b, -1, self.p) % self.p

    def render(self, value) -> str:
        return str(value)


QQ = RationalField()


@dataclass(frozen=True)
class MatrixContext:
    """Shape of the generic matrix and the coefficient field."""

    rows: int
    cols: int
    field: RationalField | PrimeField = QQ

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix context needs positive dimensions")

    def check_var(self, row: int, col: int) -> None:
        if not (1 <= row <= self.rows and 1 <= col <= self.cols):
            raise InvalidVariableError(
                f"x[{row},{col}] is outside a {self.rows}x{self.cols} matrix"
            )

    def with_field(self, field) -> "MatrixContext":
        return MatrixContext(self.rows, self.cols, field)


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------


class Monomial(tuple):
    """Sorted tuple of ``((row, col), exponent)`` factors; ``()`` is 1."""

    __slots__ = ()

    @classmethod
    def from_exponents(cls, exps: dict) -> "Monomial":
        return cls(sorted((v, e) for v, e in exps.items() if e))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    def variables(self):
        return [v for v, _ in self]

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self:
            return other
        if not other:
            return self
        exps = dict(self)
        for v, e in other:
            exps[v] = exps.get(v, 0) + e
        return Monomial(sorted(exps.items()))

    def divides(self, other: "Monomial") -> bool:
        if len(self) > len(other):
            return False
        exps = dict(other)
        for v, e in self:
            if exps.get(v, 0) < e:
                return False
        return True

    def __truediv__(self, other: "Monomial") -> "Monomial":
        exps = dict(self)
        for v, e in other:
            left = exps.get(v, 0) - e
            if left < 0:
                raise ValueError("monomial division is not exact")
            if left:
                exps[v] = left
            else:
                del exps[v]
        return Monomial(sorted(exps.items()))

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = dict(self)
        for v, e in other:
            if e > exps.get(v, 0):
                exps[v] = e
        return Monomial(sorted(exps.items()))

    def is_coprime(self, other: "Monomial") -> bool:
        mine = {v for v, _ in self}
        return not any(v in mine for v, _ in other)

    def render(self) -> str:
        parts = []
        for (r, c), e in self:
            parts.append(f"x[{r},{c}]" if e == 1 else f"x[{r},{c}]^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self.render()})"


ONE = Monomial()


@lru_cache(maxsize=1 << 18)
def mono_key(m: Monomial) -> tuple:
    """Sort key realising the lex order: larger key means larger monomial."""
    return tuple((-r, -c, e) for (r, c), e in m)


def compare_monomials(a: Monomial, b: Monomial, ctx: MatrixContext | None = None) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if ctx is not None:
        for m in (a, b):
            for (r, c), _ in m:
                ctx.check_var(r, c)
    ka, kb = mono_key(a), mono_key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable polynomial with terms stored in decreasing monomial order."""

    __slots__ = ("terms", "ctx", "_hash")

    def __init__(self, terms, ctx: MatrixContext):
        # trusted constructor: terms must already be canonical
        self.terms = terms
        self.ctx = ctx
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_dict(cls, coeffs: dict, ctx: MatrixContext) -> "Polynomial":
        field = ctx.field
        items = []
        for m, c in coeffs.items():
            c = field.normalize(c)
            if c:
                items.append((m, c))
        items.sort(key=lambda t: mono_key(t[0]), reverse=True)
        return cls(tuple(items), ctx)

    @classmethod
    def from_terms(cls, terms, ctx: MatrixContext) -> "Polynomial":
        """Build from arbitrary ``(coefficient, exponent-mapping)`` pairs."""
        acc: dict = {}
        for coeff, exps in terms:
            if not isinstance(exps, Monomial):
                exps = Monomial.from_exponents(dict(exps))
            for (r, c), _ in exps:
                ctx.check_var(r, c)
            acc[exps] = acc.get(exps, 0) + ctx.field.convert(coeff)
        return cls.from_dict(acc, ctx)

    @classmethod
    def zero(cls, ctx: MatrixContext) -> "Polynomial":
        return cls((), ctx)

    @classmethod
    def constant(cls, value, ctx: MatrixContext) -> "Polynomial":
        value = ctx.field.convert(value)
        return cls(((ONE, value),) if value else (), ctx)

    @classmethod
    def var(cls, row: int, col: int, ctx: MatrixContext) -> "Polynomial":
        ctx.check_var(row, col)
        return cls(((Monomial((((row, col), 1),)), 1),), ctx)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def monomials(self):
        return [m for m, _ in self.terms]

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise NoLeadingTermError("the zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise NoLeadingTermError("the zero polynomial has no leading term")
        return self.terms[0][1]

    def leading_term(self):
        return self.lc, self.lm

    def total_degree(self) -> int:
        return max((m.degree for m, _ in self.terms), default=0)

    def canonical(self) -> "Polynomial":
        """Re-normalize from scratch; identity on every well-formed value."""
        return Polynomial.from_dict(dict(self.terms), self.ctx)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return Polynomial.from_dict(acc, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        field = self.ctx.field
        return Polynomial(tuple((m, field.normalize(-c)) for m, c in self.terms), self.ctx)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ctx)
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial.from_dict(acc, self.ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, coeff, mono: Monomial) -> "Polynomial":
        """Multiply by a single term; the order is multiplicative so no re-sort."""
        field = self.ctx.field
        if not coeff:
            return Polynomial.zero(self.ctx)
        return Polynomial(
            tuple((m * mono, field.normalize(c * coeff)) for m, c in self.terms),
            self.ctx,
        )

    def monic(self) -> "Polynomial":
        lc = self.lc
        if lc == 1:
            return self
        field = self.ctx.field
        return Polynomial(tuple((m, field.div(c, lc)) for m, c in self.terms), self.ctx)

    def to_context(self, ctx: MatrixContext) -> "Polynomial":
        """Re-home into another context, converting coefficients if needed."""
        if ctx.field == self.ctx.field:
            for m, _ in self.terms:
                for (r, c), _ in m:
                    ctx.check_var(r, c)
            return Polynomial(self.terms, ctx)
        return Polynomial.from_terms([(c, m) for m, c in self.terms], ctx)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(other, self.ctx).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.terms, self.ctx))
        return self._hash

    # -- text --------------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        field = self.ctx.field
        p = field.characteristic
        for idx, (m, c) in enumerate(self.terms):
            negative = p == 0 and c < 0
            mag = -c if negative else c
            if m:
                body = m.render() if mag == 1 else f"{field.render(mag)}*{m.render()}"
            else:
                body = field.render(mag)
            if idx == 0:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f" - {body}" if negative else f" + {body}")
        return "".join(out)

    __str__ = render

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def leading_term(p: Polynomial, ctx: MatrixContext | None = None):
    """Return ``(coefficient, monomial)`` of the largest term of ``p``."""
    if ctx is not None and ctx != p.ctx:
        raise ContextMismatchError(f"{ctx} vs {p.ctx}")
    return p.leading_term()


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<var>x\[\s*(?P<r>\d+)\s*,\s*(?P<c>\d+)\s*\](?:\s*\^\s*(?P<e>\d+))?)"
    r"|(?P<num>\d+(?:\s*/\s*\d+)?)"
    r"|(?P<op>[+\-−*])"
    r")"
)


def parse_polynomial(text: str, ctx: MatrixContext) -> Polynomial:
    """Parse the textual form produced by :meth:`Polynomial.render`.

    Accepts ``-`` and the Unicode minus sign interchangeably.
    """
    pos = 0
    text = text.strip()
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at column {pos + 1}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("var"):
            tokens.append(("var", (int(m.group("r")), int(m.group("c")), int(m.group("e") or 1))))
        elif m.group("num"):
            tokens.append(("num", Fraction(m.group("num").replace(" ", ""))))
        else:
            op = m.group("op")
            tokens.append(("op", "-" if op == "−" else op))
    if not tokens:
        raise ParseError("empty polynomial")

    terms = []
    i = 0
    sign = 1
    expect_term = True
    while i < len(tokens):
        kind, val = tokens[i]
        if expect_term:
            if kind == "op" and val in "+-":
                sign = -sign if val == "-" else sign
                i += 1
                continue
            coeff = Fraction(sign)
            exps: dict = {}
            seen = False
            while i < len(tokens):
                kind, val = tokens[i]
                if kind == "num":
                    coeff *= val
                elif kind == "var":
                    r, c, e = val
                    ctx.check_var(r, c)
                    exps[(r, c)] = exps.get((r, c), 0) + e
                else:
                    break
                seen = True
                i += 1
                if i < len(tokens) and tokens[i] == ("op", "*"):
                    i += 1
                    if i >= len(tokens) or tokens[i][0] == "op":
                        raise ParseError("dangling '*'")
            if not seen:
                raise ParseError("expected a term")
            terms.append((coeff, exps))
            expect_term = False
            sign = 1
        else:
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected '+' or '-', got {val!r}")
            sign = -1 if val == "-" else 1
            expect_term = True
            i += 1
    if expect_term:
        raise ParseError("trailing operator")
    return Polynomial.from_terms(terms, ctx)
