"""Command-line entry point: ``python -m tdlab <command> ...``.

Exit codes: 0 success, 1 domain error (bad input, improper labeling, failed
check), 2 time budget exhausted, 64 usage error or unknown command.
Machine-readable results go to the record store (``$TDL_CACHE_DIR``); pass
``--json`` to also print them to standard output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import analysis, lattice, solver, starelim, wsr
from .graphs import MAX_CANONICAL_ORDER, GraphError, canonical_form, load_graph, to_graph6
from .labeling import LabelingError, read_labeling, validate, violations_to_jsonl
from .solver import BudgetExceeded, SearchConfig
from .store import ResultRecord, ResultStore, StoreConflict

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
DEFAULT_BUDGET = 60.0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


class Context:
    def __init__(self, args):
        self.args = args
        self.store = None if args.no_cache else ResultStore(args.cache_dir and f"{args.cache_dir}/results.jsonl")
        self.cfg = SearchConfig(time_budget=args.budget if args.budget > 0 else None)

    def cached(self, cert: str, query: dict):
        if self.store is None:
            return None
        rec = self.store.get(cert, query)
        return None if rec is None else rec.value

    def emit(self, cert: str, query: dict, value, runtime: float) -> None:
        rec = ResultRecord(cert, query, value, runtime)
        if self.store is not None:
            self.store.put(rec)
        if self.args.json:
            print(rec.to_json())


def _graph_cert(g) -> str:
    # graphs beyond the canonical-form range are keyed by their own numbering
    if g.n > MAX_CANONICAL_ORDER:
        return "g6:" + to_graph6(g)
    return canonical_form(g).hex()


# ---------------------------------------------------------------------------
# commands


def cmd_chi(ctx: Context, a) -> int:
    g = load_graph(a.graph)
    cert = _graph_cert(g)
    if a.k is not None:
        query = {"op": "enumerate" if a.enumerate else "has_tdl", "k": a.k}
        value = ctx.cached(cert, query)
        t0 = time.monotonic()
        if value is None:
            if a.enumerate:
                value = {"count": 0, "labelings": [list(f) for f in solver.enumerate_tdls(g, a.k, ctx.cfg)]}
                value["count"] = len(value["labelings"])
            else:
                w = solver.has_tdl(g, a.k, ctx.cfg)
                value = {"exists": w is not None, "witness": w}
        ctx.emit(cert, query, value, time.monotonic() - t0)
        if a.enumerate:
            print(f"{g.name or 'graph'}: {value['count']} proper labelings with labels <= {a.k}")
            for f in value["labelings"][: a.show]:
                print("  " + " ".join(map(str, f)))
        elif value["exists"]:
            print(f"{g.name or 'graph'}: labeling with labels <= {a.k}: {' '.join(map(str, value['witness']))}")
        else:
            print(f"{g.name or 'graph'}: no proper labeling with labels <= {a.k}")
        return EXIT_OK
    query = {"op": "chi_td"}
    value = ctx.cached(cert, query)
    t0 = time.monotonic()
    if value is None:
        res = solver.chi_td(g, ctx.cfg, search_below=a.certify)
        value = {"chi": res.chi, "witness": res.witness, "lower_certificate": res.lower_certificate}
    ctx.emit(cert, query, value, time.monotonic() - t0)
    print(f"chi_td({g.name or 'graph'}) = {value['chi']}")
    print(f"  witness: {' '.join(map(str, value['witness']))}")
    print(f"  none below by: {value['lower_certificate']}")
    return EXIT_OK


def cmd_validate(ctx: Context, a) -> int:
    g = load_graph(a.graph)
    with open(a.labeling) as fh:
        f = read_labeling(fh.read())
    found = validate(g, f)
    if a.json:
        sys.stdout.write(violations_to_jsonl(found))
    if not found:
        print(f"proper: {g.n} vertices, largest label {max(f.values())}")
        return EXIT_OK
    for v in found:
        print(f"{v.kind}: {' '.join(map(str, v.witness))}")
    print(f"{len(found)} violations")
    return EXIT_DOMAIN


def cmd_wsr(ctx: Context, a) -> int:
    if a.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    t0 = time.monotonic()
    rows = wsr.wsr_table(a.max_n)
    if a.action == "table":
        print(f"{'n':>3} {'OS':>5} {'E':>5} {'D':>5} {'Mi1':>5} {'Mi2':>5}")
        for s in rows:
            print("{:>3} {:>5} {:>5} {:>5} {:>5} {:>5}".format(*s.as_row()))
        for s in rows:
            ctx.emit("wsr", {"op": "wsr_stats", "n": s.n}, dict(zip(("n", "os", "e", "d", "mi1", "mi2"), s.as_row())), 0.0)
    else:
        column = {"os": 1, "e": 2, "d": 3, "mi1": 4, "mi2": 5}[a.seq]
        for s in rows:
            print(f"{s.n} {s.as_row()[column]}")
    print(f"# {time.monotonic() - t0:.2f} s", file=sys.stderr)
    return EXIT_OK


def cmd_starelim(ctx: Context, a) -> int:
    t0 = time.monotonic()
    bound = starelim.star_elim_lower_bound(a.delta)
    for t in starelim.lower_bound_traces(a.delta, a.max_x):
        rounds = {}
        for s in t.steps:
            rounds.setdefault(s.round, []).append(s.label)
        steps = "; ".join(f"round {r}: -{','.join(map(str, ls))}" for r, ls in rounds.items()) or "nothing removed"
        verdict = "contradiction" if t.contradiction else "consistent"
        print(f"x={t.x}: {steps} -> survivors {list(t.survivors)} ({verdict})")
        ctx.emit("starelim", {"op": "trace", "delta": a.delta, "x": t.x}, t.to_record(), 0.0)
    if a.delta in starelim.HAND_SEQUENCES:
        t = starelim.hand_trace(a.delta)
        print(f"hand sequence at x={t.x}: {t.removed} -> survivors {list(t.survivors)}")
    ctx.emit("starelim", {"op": "lower_bound", "delta": a.delta}, bound, time.monotonic() - t0)
    print(f"lower bound for minimum degree {a.delta}: {bound}")
    return EXIT_OK


def cmd_lattice(ctx: Context, a) -> int:
    model = lattice.get_model(a.model)
    t0 = time.monotonic()
    if a.action == "verify":
        p = lattice.load_fixture(a.fixture)
        if p.model != model:
            raise lattice.LatticeError(f"fixture is for the {p.model.name} lattice, not {model.name}")
        found = lattice.validate_periodic(p)
        value = {"basis": [list(v) for v in p.basis], "max_label": p.max_label, "violations": len(found)}
        ctx.emit(f"lattice:{model.name}", {"op": "verify", "fixture": a.fixture}, value, time.monotonic() - t0)
        for v in found:
            print(f"{v.kind}: {' '.join(map(str, v.witness))}")
        if found:
            print(f"{len(found)} violations")
            return EXIT_DOMAIN
        print(f"valid {model.name} labeling, basis {value['basis']}, largest label {p.max_label}")
        return EXIT_OK
    if a.k is None:
        raise ValueError("lattice search needs --k")
    p, tried = lattice.search_all_domains(model, a.k, a.max_domain, ctx.cfg)
    value = None if p is None else lattice.write_fixture(p)
    ctx.emit(f"lattice:{model.name}", {"op": "search", "k": a.k, "max_domain": a.max_domain}, value, time.monotonic() - t0)
    if p is None:
        print(f"no periodic {model.name} labeling with labels <= {a.k} over {tried} bases of domain <= {a.max_domain}")
        return EXIT_OK
    print(f"found after {tried} bases:")
    sys.stdout.write(value)
    return EXIT_OK


def cmd_survey(ctx: Context, a) -> int:
    if not 1 <= a.order <= 7:
        raise ValueError("--order must be between 1 and 7")
    s = analysis.survey_order(a.order, ctx.cfg, ctx.store)
    if a.json:
        for r in s.records:
            print(json.dumps(r, sort_keys=True))
    print(f"order {s.order}: {s.scanned} connected graphs, {s.chi_equals_order} with chi_td = {s.order}")
    print(f"  saturable {s.saturable}, supersaturable {s.supersaturable}")
    for r in s.saturable_graphs():
        print(f"  {r['graph6']:<10} diameter {r['diameter']}  {r['class']}")
    return EXIT_OK


def cmd_clone(ctx: Context, a) -> int:
    g = load_graph(a.graph)
    cert = _graph_cert(g)
    query = {"op": "clone_bound"}
    t0 = time.monotonic()
    value = ctx.cached(cert, query) or analysis.check_clone_bound(g, ctx.cfg)
    ctx.emit(cert, query, value, time.monotonic() - t0)
    print(f"chi_td(G) = {value['chi_g']}, chi_td(cl(G)) = {value['chi_clone']}, bound {value['bound_2chi_plus_1']}")
    print(f"  bound holds: {value['holds']}, tight: {value['tight']}, clone exceeds G: {value['clone_exceeds']}")
    return EXIT_OK if value["holds"] else EXIT_DOMAIN


def cmd_product(ctx: Context, a) -> int:
    g = load_graph(a.graph)
    cert = _graph_cert(g)
    query = {"op": "product_bound", "m": a.m}
    t0 = time.monotonic()
    value = ctx.cached(cert, query) or analysis.check_product_bound(g, a.m, ctx.cfg)
    ctx.emit(cert, query, value, time.monotonic() - t0)
    print(f"chi_td(K{a.m} x G) = {value['chi_product']}, bound {value['bound']} (chi_td(G) = {value['chi_g']})")
    return EXIT_OK if value["holds"] else EXIT_DOMAIN


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds per query, 0 for none")
    common.add_argument("--cache-dir", help="record store directory (default $TDL_CACHE_DIR)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the record store")
    common.add_argument("--json", action="store_true", help="also print machine-readable records")

    p = _Parser(prog="tdlab", description="Exact total difference labeling computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("chi", parents=[common], help="chi_td with a witness")
    c.add_argument("--graph", required=True, help="file (graph6 or edge list) or builtin name")
    c.add_argument("--k", type=int, help="decide a single level instead")
    c.add_argument("--enumerate", action="store_true", help="with --k, list every labeling")
    c.add_argument("--show", type=int, default=10, help="labelings to print with --enumerate")
    c.add_argument("--certify", action="store_true", help="also refute chi_td - 1 by search")
    c.add_argument("--deterministic", action="store_true", help="accepted; the search is always deterministic")
    c.set_defaults(func=cmd_chi)

    c = sub.add_parser("validate", parents=[common], help="check a labeling file")
    c.add_argument("--graph", required=True)
    c.add_argument("--labeling", required=True, help="file of 'vertex label' lines")
    c.set_defaults(func=cmd_validate)

    c = sub.add_parser("wsr", parents=[common], help="well-spaced row sequences")
    c.add_argument("action", choices=["table", "bfile"])
    c.add_argument("--max-n", type=int, default=20)
    c.add_argument("--seq", choices=["os", "e", "d", "mi1", "mi2"], default="e")
    c.set_defaults(func=cmd_wsr)

    c = sub.add_parser("starelim", parents=[common], help="star-elimination traces")
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--max-x", type=int)
    c.set_defaults(func=cmd_starelim)

    c = sub.add_parser("lattice", parents=[common], help="periodic lattice labelings")
    c.add_argument("action", choices=["verify", "search"])
    c.add_argument("--model", required=True, choices=sorted(lattice.MODELS) + ["hex", "tri"])
    c.add_argument("--fixture", help=f"fixture file or one of {', '.join(lattice.PERIODIC_FIXTURES)}")
    c.add_argument("--k", type=int)
    c.add_argument("--max-domain", type=int, default=16)
    c.set_defaults(func=cmd_lattice)

    c = sub.add_parser("survey", parents=[common], help="saturability of every connected graph of one order")
    c.add_argument("--order", type=int, required=True)
    c.set_defaults(func=cmd_survey)

    c = sub.add_parser("clone", parents=[common], help="clone doubling bound")
    c.add_argument("--graph", required=True)
    c.set_defaults(func=cmd_clone)

    c = sub.add_parser("product", parents=[common], help="K_m product bound")
    c.add_argument("--graph", required=True)
    c.add_argument("--m", type=int, required=True)
    c.set_defaults(func=cmd_product)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"tdlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if args.command == "lattice" and args.action == "verify" and not args.fixture:
        print("tdlab: lattice verify needs --fixture", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(Context(args), args)
    except BudgetExceeded as exc:
        span = f" (chi_td in [{exc.lower}, {exc.upper}])" if exc.lower is not None else ""
        print(f"budget exceeded after {args.budget:g} s{span}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, LabelingError, lattice.LatticeError, StoreConflict, ValueError, OSError) as exc:
        print(f"tdlab: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
