"""Verification reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

__all__ = ["VerificationReport", "load_schema", "EXIT_PASS", "EXIT_FAIL", "EXIT_INCONCLUSIVE"]

EXIT_PASS = 0
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(x) for x in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


@dataclass
class VerificationReport:
    """Outcome of one theorem job; it passes exactly when ``failures`` is empty
    and no instance was left undecided."""

    theorem: str
    source: dict
    seed: int | None = None
    checked: int = 0
    failures: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    review: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    millis: int = 0

    def fail(self, instance, witness, labelling=None):
        entry = {"instance": _jsonable(instance), "witness": _jsonable(witness)}
        if labelling is not None:
            entry["labelling"] = _jsonable(labelling)
        self.failures.append(entry)

    def undecided(self, instance, reason):
        self.inconclusive.append({"instance": _jsonable(instance), "reason": _jsonable(reason)})

    def note(self, instance, witness, labelling=None):
        """Record something for review that does not fail the job."""
        entry = {"instance": _jsonable(instance), "witness": _jsonable(witness)}
        if labelling is not None:
            entry["labelling"] = _jsonable(labelling)
        self.review.append(entry)

    def count(self, key, k=1):
        self.stats[key] = self.stats.get(key, 0) + k

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.failures += other.failures
        self.inconclusive += other.inconclusive
        self.review += other.review
        for k, v in other.stats.items():
            self.stats[k] = self.stats.get(k, 0) + v
        return self

    @property
    def passed(self) -> bool:
        return not self.failures and not self.inconclusive

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[self.status]

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "source": _jsonable(self.source),
            "seed": self.seed,
            "checked": self.checked,
            "status": self.status,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
            "review": self.review,
            "stats": dict(sorted(self.stats.items())),
            "millis": self.millis,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        return cls(
            theorem=data["theorem"],
            source=data["source"],
            seed=data.get("seed"),
            checked=data["checked"],
            failures=list(data["failures"]),
            inconclusive=list(data.get("inconclusive", [])),
            review=list(data.get("review", [])),
            stats=dict(data.get("stats", {})),
            millis=data["millis"],
        )

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    def summary(self) -> str:
        extra = ""
        if self.inconclusive:
            extra += f", {len(self.inconclusive)} inconclusive"
        if self.review:
            extra += f", {len(self.review)} for review"
        return f"{self.theorem}: {self.status.upper()} ({self.checked} checked, {len(self.failures)} failures{extra}, {self.millis} ms)"


def load_schema() -> dict:
    text = resources.files("detfacet").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)
