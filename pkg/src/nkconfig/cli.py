"""Command-line front door.

Subcommands print a JSON report on stdout (or to ``--out``) and a short
summary on stderr.  Exit codes: 0 ok, 1 a verification criterion failed,
2 bad input, 3 the graph is not sufficiently subdivided, 4 the cell
budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import kernels
from .battery import NAMED
from .complex import DEFAULT_BUDGET, enumerate_dconf
from .errors import CellBudgetExceeded, GraphError, InsufficientSubdivision, ParameterError
from .graph import Graph, check_sufficiently_subdivided
from .homology import betti_numbers
from .morse import _trim, build_matching, verify_instance
from .subdivision import barycentric_tower, build_Y, fresh_vertex, locate_H, subdivide_edge

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INSUFFICIENT, EXIT_BUDGET = 0, 1, 2, 3, 4


# -- library drivers -----------------------------------------------------


def load_graph(spec: str) -> Graph:
    """A graph from a JSON file, or ``battery:NAME`` for a built-in graph."""
    if spec.startswith("battery:"):
        name = spec.split(":", 1)[1]
        if name not in NAMED:
            raise GraphError(f"unknown battery graph {name!r}; have {sorted(NAMED)}")
        return NAMED[name]()
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {spec}: {exc}") from exc
    return Graph.loads(text)


def pipeline_report(g: Graph, k: int, n: int, edge: str | None = None, coeff: str = "q",
                    budget: int = DEFAULT_BUDGET) -> dict:
    if not (2 <= k <= n):
        raise ParameterError(f"need 2 <= k <= n, got k={k}, n={n}")
    edge = edge or g.edge_labels[0]
    if edge not in g.edges:
        raise GraphError(f"unknown edge {edge!r}")
    w = fresh_vertex(g)
    ctx = locate_H(g, subdivide_edge(g, edge, w), w)
    report = verify_instance(ctx, k, n, budget=budget, coeff=coeff)
    report["context"] = ctx.to_json()
    report["k"], report["n"] = k, n
    report["ok"] = all(report[key] for key in _VERDICTS)
    return report


_VERDICTS = ("acyclic", "critical_equals_Y", "critical_subcomplex", "pair_coherence", "lemmas_ok", "betti_equal")


def stabilization_table(g: Graph, k: int, n: int, levels: int, coeff: str = "f2",
                        budget: int = DEFAULT_BUDGET) -> dict:
    """Betti numbers of DConf^k(B_j, n) over the barycentric tower B_0..B_levels.

    Levels whose complex exceeds ``budget`` are recorded as skipped, and so
    are all levels above them.
    """
    rows = []
    over = False
    for j, b in enumerate(barycentric_tower(g, levels)):
        row = {"level": j, "vertices": len(b.vertices), "edges": len(b.edges),
               "sufficient": check_sufficiently_subdivided(b, k, n).ok}
        if over:
            row["skipped"] = "budget"
        else:
            try:
                cv = enumerate_dconf(b, k, n, budget)
            except CellBudgetExceeded:
                over = True
                row["skipped"] = "budget"
            else:
                row["counts"] = cv.counts()
                row["betti"] = list(betti_numbers(cv, coeff))
        rows.append(row)
    first = next((r["level"] for r in rows if r["sufficient"]), None)
    stable = [tuple(_trim(r["betti"])) for r in rows
              if first is not None and r["level"] >= first and "betti" in r]
    return {
        "k": k, "n": n, "coeff": coeff, "rows": rows,
        "first_sufficient": first,
        "levels_compared": len(stable),
        "constant": len(set(stable)) <= 1,
        "complete": not over,
    }


def battery_cases(max_n: int = 4, names=None):
    """(name, k, n, edge) for every single-edge subdivision of every
    sufficiently subdivided battery instance."""
    for name in names or NAMED:
        g = NAMED[name]()
        for n in range(2, max_n + 1):
            for k in range(2, n + 1):
                if check_sufficiently_subdivided(g, k, n).ok:
                    for e in g.edge_labels:
                        yield name, k, n, e


def verify_battery_case(case, max_cells: int = 10**5) -> dict:
    name, k, n, edge = case
    g = NAMED[name]()
    w = fresh_vertex(g)
    ctx = locate_H(g, subdivide_edge(g, edge, w), w)
    out = {"graph": name, "k": k, "n": n, "edge": edge, "case": ctx.case}
    try:
        rep = verify_instance(ctx, k, n, budget=max_cells, with_betti=False)
    except CellBudgetExceeded:
        out["skipped"] = "budget"
        return out
    out.update({key: rep[key] for key in ("cells", "external", "pairs", "critical", "acyclic",
                                          "acyclic_checkers", "critical_equals_Y",
                                          "critical_subcomplex", "pair_coherence", "lemmas_ok")})
    out["perfect"] = rep["pairs"] * 2 == rep["external"]
    out["lemma_checks"] = rep["lemma_checks"]
    return out


def _verify_case(case):
    return verify_battery_case(case)


def run_battery(max_n: int = 4, workers: int | None = None, names=None) -> list[dict]:
    cases = list(battery_cases(max_n, names))
    workers = workers or kernels.worker_count()
    if workers <= 1:
        return [verify_battery_case(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_case, cases, chunksize=1))


# -- command handlers ----------------------------------------------------


def _emit(args, report: dict, summary: str) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(summary, file=sys.stderr)


def cmd_check_subdiv(args) -> int:
    g = load_graph(args.input)
    rep = check_sufficiently_subdivided(g, args.k, args.n)
    out = {"k": args.k, "n": args.n, **rep.to_json()}
    _emit(args, out, f"sufficiently subdivided: {rep.ok} ({len(rep.violations)} violation(s))")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_pipeline(args) -> int:
    g = load_graph(args.input)
    rep = pipeline_report(g, args.k, args.n, args.edge, args.field, args.budget)
    if args.jsonl:
        sub = locate_H(g, subdivide_edge(g, rep["context"]["a"], rep["context"]["w"]), rep["context"]["w"])
        cv = enumerate_dconf(sub.sub, args.k, args.n, args.budget)
        m = build_matching(cv, sub, build_Y(g, sub.sub, sub, args.k, args.n))
        Path(args.jsonl).write_text("".join(line + "\n" for line in m.iter_jsonl(sub.sub)))
    summary = (f"cells={rep['cells']} Y={rep['Y']} external={rep['external']} pairs={rep['pairs']} "
               f"acyclic={rep['acyclic']} betti_equal={rep['betti_equal']}")
    _emit(args, rep, summary)
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def cmd_stabilize(args) -> int:
    g = load_graph(args.input)
    rep = stabilization_table(g, args.k, args.n, args.levels, args.field, args.budget)
    lines = [f"B_{r['level']}: {'S' if r['sufficient'] else '-'} {r.get('betti', r.get('skipped'))}"
             for r in rep["rows"]]
    _emit(args, rep, "\n".join(lines + [f"constant from first sufficient level: {rep['constant']}"]))
    if not rep["complete"]:
        return EXIT_BUDGET
    return EXIT_OK if rep["constant"] else EXIT_FAIL


def cmd_betti(args) -> int:
    g = load_graph(args.input)
    cv = enumerate_dconf(g, args.k, args.n, args.budget)
    b = betti_numbers(cv, args.field)
    rep = {**cv.header(), "coeff": args.field, "betti": list(b), "euler": cv.euler_characteristic()}
    _emit(args, rep, f"counts={cv.counts()} betti={list(b)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = load_graph(args.input)
    cv = enumerate_dconf(g, args.k, args.n, args.budget)
    text = "".join(line + "\n" for line in cv.iter_jsonl())
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"counts={cv.counts()}", file=sys.stderr)
    return EXIT_OK


def cmd_battery(args) -> int:
    results = run_battery(args.max_n, args.workers)
    keys = ("perfect", "critical_equals_Y", "critical_subcomplex", "acyclic", "pair_coherence", "lemmas_ok")
    bad = [r for r in results if "skipped" not in r and not all(r[key] for key in keys)]
    rep = {"instances": len(results), "failures": len(bad), "results": results}
    _emit(args, rep, f"battery: {len(results)} instances, {len(bad)} failing")
    return EXIT_FAIL if bad else EXIT_OK


# -- argument parsing ----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nkconfig", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kn=True, field="q"):
        sp.add_argument("--input", required=True, help="graph JSON file or battery:NAME")
        if kn:
            sp.add_argument("--k", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--field", choices=("q", "f2"), default=field)
        sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="maximum number of cells")
        sp.add_argument("--out", help="write the report here instead of stdout")

    common(sub.add_parser("check-subdiv", help="check sufficient subdivision"))
    sp = sub.add_parser("pipeline", help="subdivide one edge and verify the matching")
    common(sp)
    sp.add_argument("--edge", help="edge to subdivide (default: first edge)")
    sp.add_argument("--jsonl", help="also write the matching as JSON lines")
    sp = sub.add_parser("stabilize", help="Betti numbers over barycentric subdivisions")
    common(sp, field="f2")
    sp.add_argument("--levels", type=int, default=2)
    common(sub.add_parser("betti", help="Betti numbers of one complex"))
    common(sub.add_parser("enumerate", help="list cells as JSON lines"))
    sp = sub.add_parser("battery", help="verify every battery instance")
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--out")
    return p


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


HANDLERS = {
    "check-subdiv": cmd_check_subdiv,
    "pipeline": cmd_pipeline,
    "stabilize": cmd_stabilize,
    "betti": cmd_betti,
    "enumerate": cmd_enumerate,
    "battery": cmd_battery,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except InsufficientSubdivision as exc:
        print(json.dumps({"error": "insufficient", **exc.report.to_json()}, sort_keys=True, indent=2))
        print(str(exc), file=sys.stderr)
        return EXIT_INSUFFICIENT
    except CellBudgetExceeded as exc:
        print(json.dumps({"error": "budget", "budget": exc.budget}, sort_keys=True))
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
