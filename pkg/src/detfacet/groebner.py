"""Buchberger machinery under the fixed lex order of :mod:`detfacet.polyring`."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceededError, ContextMismatchError, PreconditionError
from .polyring import MatrixContext, Polynomial, mono_key

__all__ = [
    "Basis",
    "GBReport",
    "normal_form",
    "s_polynomial",
    "is_groebner",
    "is_reduced",
    "buchberger",
    "reduce_basis",
    "DEFAULT_GB_CAP",
]

DEFAULT_GB_CAP = 10_000


@dataclass(frozen=True)
class Basis:
    polys: tuple
    ctx: MatrixContext

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        for p in polys:
            if p.is_zero():
                raise PreconditionError("a basis may not contain the zero polynomial")
            if p.ctx != self.ctx:
                raise ContextMismatchError(f"basis element lives in {p.ctx}, basis in {self.ctx}")

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, k):
        return self.polys[k]

    def leading_monomials(self):
        return [p.lm for p in self.polys]

    def to_field(self, fld) -> "Basis":
        ctx = self.ctx.with_field(fld)
        polys = [p.to_context(ctx) for p in self.polys]
        return Basis(tuple(p for p in polys if p), ctx)

    def render(self) -> list:
        return [p.render() for p in self.polys]


@dataclass
class GBReport:
    is_gb: bool
    reduced: bool
    failing_pair: tuple | None = None
    field: str = "QQ"
    pairs_checked: int = 0
    pairs_skipped: int = 0
    notes: list = dc_field(default_factory=list)

    @property
    def evidence(self) -> str:
        if self.field == "QQ":
            return "exact over QQ"
        return f"mod p evidence ({self.field})"

    def to_json(self) -> dict:
        out = {
            "is_gb": self.is_gb,
            "reduced": self.reduced,
            "field": self.field,
            "evidence": self.evidence,
            "pairs_checked": self.pairs_checked,
            "pairs_skipped": self.pairs_skipped,
            "failing_pair": None,
        }
        if self.failing_pair is not None:
            i, j, rem = self.failing_pair
            out["failing_pair"] = {"i": i, "j": j, "remainder": rem.render()}
        return out


def _polys(B):
    return B.polys if isinstance(B, Basis) else tuple(B)


def normal_form(f: Polynomial, B) -> Polynomial:
    """Remainder of multivariate division of ``f`` by the elements of ``B``.

    The largest remaining monomial is handled first; when several leading
    monomials divide it, the earliest basis element wins.
    """
    polys = _polys(B)
    if isinstance(B, Basis) and f.ctx != B.ctx:
        raise ContextMismatchError(f"{f.ctx} vs {B.ctx}")
    for g in polys:
        if g.ctx != f.ctx:
            raise ContextMismatchError(f"{f.ctx} vs {g.ctx}")
    if not polys or not f:
        return f
    fld = f.ctx.field
    divisors = [(g.lm, g.lc, g.terms) for g in polys]
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=mono_key)
        c = work[m]
        for lm, lc, gterms in divisors:
            if lm.divides(m):
                q = m / lm
                coef = fld.div(c, lc)
                for gm, gc in gterms:
                    mm = q * gm
                    v = fld.normalize(work.get(mm, 0) - coef * gc)
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[m] = work.pop(m)
    return Polynomial.from_dict(rem, f.ctx)


def s_polynomial(f: Polynomial, g: Polynomial, ctx: MatrixContext | None = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise PreconditionError("S-polynomial of the zero polynomial")
    if f.ctx != g.ctx or (ctx is not None and ctx != f.ctx):
        raise ContextMismatchError("S-polynomial across contexts")
    fld = f.ctx.field
    lcm = f.lm.lcm(g.lm)
    left = f.mul_term(fld.div(1, f.lc), lcm / f.lm)
    right = g.mul_term(fld.div(1, g.lc), lcm / g.lm)
    return left - right


def is_reduced(B) -> bool:
    """Monic, duplicate-free, and no term divisible by another element's leading monomial."""
    polys = _polys(B)
    if len(set(polys)) != len(polys):
        return False
    if any(p.lc != 1 for p in polys):
        return False
    for i, g in enumerate(polys):
        lm = g.lm
        for j, h in enumerate(polys):
            if i != j and any(lm.divides(m) for m, _ in h.terms):
                return False
    return True


def is_groebner(B: Basis, *, check_reduced: bool = True) -> GBReport:
    """Buchberger's criterion; pairs with coprime leading monomials are skipped."""
    polys = _polys(B)
    ctx = B.ctx if isinstance(B, Basis) else (polys[0].ctx if polys else None)
    for p in polys:
        if p.ctx != ctx:
            raise ContextMismatchError("basis elements live in different contexts")
    fname = ctx.field.name if ctx is not None else "QQ"
    checked = skipped = 0
    failing = None
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            f, g = polys[i], polys[j]
            if f.lm.is_coprime(g.lm):
                skipped += 1
                continue
            checked += 1
            rem = normal_form(s_polynomial(f, g), polys)
            if rem:
                failing = (i, j, rem)
                break
        if failing:
            break
    reduced = is_reduced(polys) if check_reduced else False
    return GBReport(
        is_gb=failing is None,
        reduced=reduced and failing is None,
        failing_pair=failing,
        field=fname,
        pairs_checked=checked,
        pairs_skipped=skipped,
    )


def buchberger(B: Basis, cap: int = DEFAULT_GB_CAP) -> Basis:
    """Complete ``B`` to a Gröbner basis of the ideal it generates.

    Raises :class:`BudgetExceededError` once more than ``cap`` new elements
    have been adjoined; the partial basis is attached to the exception.
    """
    polys = list(_polys(B))
    ctx = B.ctx
    if not polys:
        return Basis((), ctx)
    pairs = [(i, j) for i in range(len(polys)) for j in range(i + 1, len(polys))]
    added = 0
    while pairs:
        i, j = pairs.pop(0)
        f, g = polys[i], polys[j]
        if f.lm.is_coprime(g.lm):
            continue
        rem = normal_form(s_polynomial(f, g), polys)
        if rem:
            added += 1
            if added > cap:
                raise BudgetExceededError(
                    f"Buchberger completion passed {cap} new elements",
                    partial=Basis(tuple(polys), ctx),
                )
            polys.append(rem.monic())
            k = len(polys) - 1
            pairs.extend((a, k) for a in range(k))
    return Basis(tuple(polys), ctx)


def reduce_basis(B: Basis) -> Basis:
    """Reduced Gröbner basis from a Gröbner basis; survivors keep their input order."""
    polys = list(_polys(B))
    if not is_groebner(B, check_reduced=False).is_gb:
        raise PreconditionError("reduce_basis needs a Gröbner basis")
    polys = [p.monic() for p in polys]
    # drop elements whose leading monomial is divisible by another's (first wins on ties)
    keep = []
    for i, p in enumerate(polys):
        redundant = False
        for j, q in enumerate(polys):
            if i == j or not q.lm.divides(p.lm):
                continue
            if q.lm != p.lm or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(p)
    out = []
    for i, p in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        tail = normal_form(p - Polynomial(p.terms[:1], p.ctx), others)
        out.append(Polynomial(p.terms[:1], p.ctx) + tail)
    return Basis(tuple(out), B.ctx)
