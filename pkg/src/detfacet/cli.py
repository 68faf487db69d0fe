"""Command line front end: classify, gb-check, verify, enumerate."""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import BudgetExceededError, DetFacetError, ParseError
from .formats import load, render_graph
from .graphs import Graph, delta_d
from .groebner import DEFAULT_GB_CAP, buchberger, is_groebner
from .harness import THEOREMS, TheoremJob, enumerate_graphs
from .polyring import QQ, PrimeField
from .scomplex import (
    DEFAULT_PERM_BUDGET,
    LABELLED,
    PREDICATES,
    determinantal_facet_ideal,
    exists_labelling,
    lemma_connection_holds,
)

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_IO = 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Config:
    field: object = QQ
    perm_budget: int = DEFAULT_PERM_BUDGET
    gb_cap: int = DEFAULT_GB_CAP
    workers: int = 1
    seed: int | None = None

    def __post_init__(self):
        if self.perm_budget <= 0 or self.gb_cap <= 0:
            raise UsageError("budgets must be positive")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")


def parse_field(text: str):
    if text.lower() in ("q", "qq"):
        return QQ
    if text.startswith("p="):
        try:
            return PrimeField(int(text[2:]))
        except ValueError as exc:
            raise UsageError(f"bad prime field {text!r}: {exc}") from None
    raise UsageError(f"--field takes 'q' or 'p=<prime>', got {text!r}")


def _int_list(text: str) -> list:
    """'1,2,3' or '1..4'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x]


def _config(args) -> Config:
    return Config(parse_field(args.field), args.perm_budget, args.gb_cap, args.workers, args.seed)


def _emit(data: dict, args) -> None:
    if args.json == "-":
        print(json.dumps(data, indent=2))
    elif args.json:
        Path(args.json).write_text(json.dumps(data, indent=2) + "\n")


def _load(path: str, kind=None):
    try:
        return load(path, kind)
    except OSError as exc:
        raise _IOFailure(str(exc)) from None


class _IOFailure(Exception):
    pass


# --- classify ------------------------------------------------------------------


def classify_complex(cx, cfg: Config) -> dict:
    labelled = {name: fn(cx) for name, fn in LABELLED.items()}
    connection = {mode: lemma_connection_holds(cx, mode) for mode in ("some", "all")}
    existence = {}
    for pred in PREDICATES:
        o = exists_labelling(cx, pred, budget=cfg.perm_budget, seed=cfg.seed)
        existence[pred] = o.to_json()
    out = {"complex": cx.to_json(), "labelled": labelled, "connection": connection, "exists": existence}
    if not cx.facets:
        out["note"] = "degenerate: no facets, labelled predicates hold vacuously"
    return out


def cmd_classify(args) -> int:
    cfg = _config(args)
    obj = _load(args.path)
    if isinstance(obj, Graph):
        ds = _int_list(args.d) if args.d else [1]
        results = [dict(d=d, **classify_complex(delta_d(obj, d), cfg)) for d in ds]
        data = {"graph": obj.to_json(), "seed": cfg.seed, "perm_budget": cfg.perm_budget, "results": results}
    else:
        results = [classify_complex(obj, cfg)]
        data = {"seed": cfg.seed, "perm_budget": cfg.perm_budget, "results": results}
    for res in results:
        head = f"d={res['d']}" if "d" in res else f"d={res['complex']['d']}"
        print(f"[{head}] {len(res['complex']['facets'])} facets" + (f" ({res['note']})" if "note" in res else ""))
        for name, val in res["labelled"].items():
            print(f"  {name}_lab: {str(val).lower()}")
        for mode, val in res["connection"].items():
            print(f"  facet connection ({mode} vertex): {str(val).lower()}")
        for name, o in res["exists"].items():
            print(f"  exists {name}: {o['outcome']}")
    _emit(data, args)
    return 0


# --- gb-check ------------------------------------------------------------------


def cmd_gb_check(args) -> int:
    cfg = _config(args)
    obj = _load(args.path)
    if isinstance(obj, Graph):
        ds = _int_list(args.d) if args.d else [1]
        if len(ds) != 1:
            raise UsageError("gb-check takes a single --d")
        obj = delta_d(obj, ds[0])
    basis = determinantal_facet_ideal(obj, cfg.field)
    rep = is_groebner(basis)
    data = {"complex": obj.to_json(), "generators": len(basis.polys), **rep.to_json()}
    print(f"generators: {len(basis.polys)} over {rep.field} ({rep.evidence})")
    print(f"GB: {str(rep.is_gb).lower()}  reduced: {str(rep.reduced).lower()}")
    if rep.failing_pair is not None:
        i, j, rem = rep.failing_pair
        print(f"failing S-pair ({i}, {j}) leaves remainder {rem.render()}")
    if args.complete and not rep.is_gb:
        try:
            full = buchberger(basis, cap=cfg.gb_cap)
            data["completion"] = {"status": "complete", "size": len(full.polys)}
            print(f"completion: {len(full.polys)} elements")
        except BudgetExceededError as exc:
            data["completion"] = {"status": "cap_exceeded", "cap": cfg.gb_cap, "partial_size": len(exc.partial.polys)}
            print(f"completion: cap of {cfg.gb_cap} new elements exceeded")
    _emit(data, args)
    return 0


# --- verify --------------------------------------------------------------------

_N_KEYS = ("n_max", "n", "labelled_n_max", "forest_n_max")
_D_KEYS = ("ds", "forest_ds")


def _exhaustive(tokens) -> dict:
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in ("n", "d"):
            raise UsageError(f"--exhaustive takes n=<int> d=<ints>, got {tok!r}")
        out[key] = _int_list(val)
    return out


def verify_params(theorem: str, args, cfg: Config) -> dict:
    """Map command line source flags onto the runner's keyword arguments."""
    fn = THEOREMS[theorem]
    accepted = set(inspect.signature(fn).parameters)
    params = {}

    def put(key, value, flag):
        if key not in accepted:
            raise UsageError(f"{flag} does not apply to {theorem}")
        params[key] = value

    if args.sizes:
        try:
            sizes = [tuple(int(x) for x in s.lower().split("x")) for s in args.sizes.split(",")]
        except ValueError:
            raise UsageError(f"bad --sizes {args.sizes!r}") from None
        put("sizes", tuple(sizes), "--sizes")
    if args.t:
        put("ts", tuple(_int_list(args.t)), "--t")
    if args.exhaustive:
        ex = _exhaustive(args.exhaustive)
        if "n" in ex:
            key = next((k for k in _N_KEYS if k in accepted), None)
            if key is None:
                raise UsageError(f"--exhaustive n does not apply to {theorem}")
            params[key] = ex["n"][-1]
            if "canonical_n_max" in accepted:
                params["canonical_n_max"] = ex["n"][-1]
        if "d" in ex:
            key = next((k for k in _D_KEYS if k in accepted), None)
            if key is None:
                raise UsageError(f"--exhaustive d does not apply to {theorem}")
            params[key] = tuple(ex["d"])
        if "random_count" in accepted and not args.random:
            params["random_count"] = 0
    if args.random:
        seed, count = args.random
        put("seed", seed, "--random")
        put("random_count", count, "--random")
    elif cfg.seed is not None and "seed" in accepted:
        params["seed"] = cfg.seed
    if args.fixtures:
        put("source", "fixtures", "--fixtures")
    if args.no_persistence:
        put("persistence", False, "--no-persistence")
    if args.field != "q" and "field" in accepted:
        params["field"] = cfg.field
    if args.perm_budget != DEFAULT_PERM_BUDGET:
        put("budget", cfg.perm_budget, "--perm-budget")
    return params


def cmd_verify(args) -> int:
    cfg = _config(args)
    theorem = args.theorem.upper()
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; known: {', '.join(THEOREMS)}")
    job = TheoremJob(theorem, verify_params(theorem, args, cfg), workers=cfg.workers)
    report = job.run()
    print(report.summary())
    for f in report.failures[:5]:
        print("  failure:", json.dumps(f))
    if len(report.failures) > 5:
        print(f"  ... {len(report.failures) - 5} more")
    _emit(report.to_json(), args)
    return report.exit_code


# --- enumerate -----------------------------------------------------------------

_FILTERS = {"connected": Graph.is_connected, "forest": Graph.is_forest}


def cmd_enumerate(args) -> int:
    flt = _FILTERS[args.filter] if args.filter else None
    graphs = enumerate_graphs(args.n, args.mode, filter=flt, hereditary=args.filter == "forest")
    count = 0
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
            for count, g in enumerate(graphs, start=1):
                (out / f"g{args.n}_{count:06d}.txt").write_text(render_graph(g))
        except OSError as exc:
            raise _IOFailure(str(exc)) from None
    else:
        for count, g in enumerate(graphs, start=1):
            sys.stdout.write(f"# graph {count}\n" + render_graph(g))
    print(f"{count} {args.mode} graphs on {args.n} vertices", file=sys.stderr)
    _emit({"n": args.n, "mode": args.mode, "filter": args.filter, "count": count}, args)
    return 0


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals) or p=<prime>")
    common.add_argument("--perm-budget", type=int, default=DEFAULT_PERM_BUDGET, help="labelling search node budget")
    common.add_argument("--gb-cap", type=int, default=DEFAULT_GB_CAP, help="cap on new Buchberger elements")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")

    ap = _Parser(prog="detfacet", description="Determinantal facet ideals and interval-type complexes")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="labelled predicates and labelling searches")
    p.add_argument("path")
    p.add_argument("--d", help="dimensions for graph input, e.g. 1,2 or 1..3 (default 1)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gb-check", parents=[common], help="Groebner test for the maximal-minor generators")
    p.add_argument("path")
    p.add_argument("--d", help="dimension for graph input (default 1)")
    p.add_argument("--complete", action="store_true", help="run Buchberger completion when not a GB")
    p.set_defaults(func=cmd_gb_check)

    p = sub.add_parser("verify", parents=[common], help="run a theorem job")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    p.add_argument("--sizes", help="matrix sizes, e.g. 2x3,2x4")
    p.add_argument("--t", help="minor sizes, e.g. 1..4")
    p.add_argument("--exhaustive", nargs="+", metavar="KEY=VAL", help="n=<int> d=<ints>")
    p.add_argument("--random", nargs=2, type=int, metavar=("SEED", "COUNT"))
    p.add_argument("--fixtures", action="store_true", help="use the fixture complexes (GB theorems)")
    p.add_argument("--no-persistence", action="store_true", help="COR-SORT: skip the larger-k items")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="write all graphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("labelled", "canonical"), default="canonical")
    p.add_argument("--filter", choices=sorted(_FILTERS))
    p.add_argument("--out", help="directory for one file per graph (default: stdout)")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"detfacet: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"detfacet: {args.path}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except _IOFailure as exc:
        print(f"detfacet: {exc}", file=sys.stderr)
        return EXIT_IO
    except DetFacetError as exc:
        print(f"detfacet: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
