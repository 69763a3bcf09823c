"""Command-line surface: analyze, retract, dismantle, reduce, export, random.

One input format everywhere (the poset document); exit code 0 for verdicts
of any kind, 2 for input and validation problems, 3 for an exhausted
oracle budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .analysis import CSV_COLUMNS, analyze, render_text, summary_row
from .crowns import improper_family
from .errors import (
    BudgetExceeded,
    CrownLabError,
    EdgeInImproperCrown,
    NoCrownThroughEdge,
    NotConnected,
)
from .export import fragment_graph_dot, hasse_dot, improper_crown_graph_dot
from .generator import random_connected_poset
from .multigraphs import improper_crown_graph, template_fragment_graph
from .oracle import OracleBudget
from .poset import Poset, pointmap_to_doc
from .reduction import reduce_with_intersection_pattern, reduce_with_singleton_inners
from .retraction import dismantle, retract_crown_from_free_edge, retract_onto_four_crown
from .search import SearchStatus, find_crown_separating


def _load_poset(path: str, *, require_connected: bool = False) -> Poset:
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except FileNotFoundError:
        raise CrownLabError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise CrownLabError(f"{path}: not valid JSON ({exc})") from None
    poset = Poset.from_doc(doc)
    if require_connected and not poset.is_connected():
        raise NotConnected(f"{path}: the poset is not connected")
    return poset


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(payload if isinstance(payload, str) else json.dumps(payload, indent=2))


def _write_report_dir(out_dir: Path, entries: list[tuple[str, Poset, dict]]) -> None:
    from .figures import draw_hasse, draw_improper_crown_graph

    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "summary.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for name, _, report in entries:
            writer.writerow(summary_row(name, report))
    for name, poset, _ in entries:
        draw_hasse(poset, str(out_dir / f"{name}_hasse.png"), title=name)
        fam = improper_family(poset)
        if fam.crowns:
            graph = improper_crown_graph(poset, fam)
            draw_improper_crown_graph(
                graph, str(out_dir / f"{name}_crowns.png"), title=name
            )


def _cmd_analyze(args) -> int:
    budget = OracleBudget(max_source_size=args.budget) if args.budget else None
    entries = []
    if args.dir:
        paths = sorted(Path(args.dir).glob("*.json"))
        if not paths:
            raise CrownLabError(f"no *.json files in {args.dir}")
    elif args.path:
        paths = [Path(args.path)]
    else:
        raise CrownLabError("analyze needs a file path or --dir")
    for path in paths:
        poset = _load_poset(str(path), require_connected=True)
        report = analyze(poset, oracle=args.oracle, budget=budget)
        entries.append((path.stem, poset, report))
    if args.format == "json":
        payload = {name: report for name, _, report in entries}
        print(json.dumps(payload if args.dir else entries[0][2], indent=2))
    else:
        print("\n\n".join(render_text(r, name if args.dir else "") for name, _, r in entries))
    if args.report_dir:
        _write_report_dir(Path(args.report_dir), entries)
    return 0


def _cmd_retract(args) -> int:
    poset = _load_poset(args.path, require_connected=True)
    chosen = [bool(args.crown), bool(args.edge), args.any]
    if sum(chosen) != 1:
        raise CrownLabError("pick exactly one of --crown, --edge, --any")
    fam = improper_family(poset)
    if args.crown:
        points = [p.strip() for p in args.crown.split(",")]
        if len(points) != 4:
            raise CrownLabError("--crown needs four comma-separated points")
        result = find_crown_separating(poset, fam, points)
        if result.status is SearchStatus.FOUND:
            mapping = retract_onto_four_crown(poset, points, fam=fam)
            payload = {
                "status": "found",
                "crown": points,
                **pointmap_to_doc(mapping),
            }
        else:
            payload = {"status": result.status.value, "crown": points}
    elif args.edge:
        ends = [p.strip() for p in args.edge.split(",")]
        if len(ends) != 2:
            raise CrownLabError("--edge needs two comma-separated points")
        try:
            crown, mapping = retract_crown_from_free_edge(poset, ends[0], ends[1], fam=fam)
            payload = {
                "status": "found",
                "crown": list(crown),
                **pointmap_to_doc(mapping),
            }
        except EdgeInImproperCrown as exc:
            payload = {
                "status": "edge_in_improper_crown",
                "edge": ends,
                "improper_crown": list(exc.crown_points),
            }
    else:
        payload = {"status": "not_found"}
        for entry_points in _proper_crowns(poset, fam):
            mapping = retract_onto_four_crown(poset, entry_points, fam=fam)
            if mapping is not None:
                payload = {
                    "status": "found",
                    "crown": list(entry_points),
                    **pointmap_to_doc(mapping),
                }
                break
        if payload["status"] == "not_found":
            found = _any_free_edge_retract(poset, fam)
            if found is not None:
                crown, mapping = found
                payload = {
                    "status": "found",
                    "crown": list(crown),
                    **pointmap_to_doc(mapping),
                }
    if args.format == "text" and payload["status"] == "found":
        lines = [f"retract-crown: {{{','.join(payload['crown'])}}}"]
        lines += [f"  {k} -> {v}" for k, v in payload["map"].items()]
        print("\n".join(lines))
    else:
        print(json.dumps(payload, indent=2))
    return 0


def _proper_crowns(poset, fam):
    from .crowns import enumerate_four_crowns

    for crown in enumerate_four_crowns(poset):
        if not crown.is_improper:
            yield list(crown.lo + crown.hi)


def _any_free_edge_retract(poset, fam):
    deco = poset.extremal_decomposition()
    esub = poset.induced(deco.extremal)
    for x, y in esub.comparability_edges():
        try:
            return retract_crown_from_free_edge(poset, x, y, fam=fam)
        except (EdgeInImproperCrown, NoCrownThroughEdge):
            continue
    return None


def _cmd_dismantle(args) -> int:
    poset = _load_poset(args.path)
    trace = dismantle(poset)
    if args.format == "json":
        payload = {
            "steps": [
                {
                    "removed": s.removed,
                    "absorber": s.absorber,
                    "remaining": list(s.remaining),
                }
                for s in trace.steps
            ],
            "terminal": trace.terminal.to_doc(),
            "singleton": trace.reached_singleton,
        }
        print(json.dumps(payload, indent=2))
    else:
        for s in trace.steps:
            print(f"{s.removed} -> {s.absorber}  ({len(s.remaining)} points left)")
        outcome = "singleton" if trace.reached_singleton else "stuck"
        print(f"terminal ({outcome}): {{{','.join(trace.terminal.points)}}}")
    return 0


def _cmd_reduce(args) -> int:
    poset = _load_poset(args.path)
    fam = improper_family(poset)
    if args.method == 1:
        result = reduce_with_singleton_inners(poset, fam)
    else:
        result = reduce_with_intersection_pattern(poset, fam)
    checks = {
        "fgraph_preserved": result.fgraph_preserved,
        "height_ok": result.height_ok,
    }
    if result.inners_disjoint_singletons is not None:
        checks["inners_disjoint_singletons"] = result.inners_disjoint_singletons
    if result.intersection_pattern_preserved is not None:
        checks["intersection_pattern_preserved"] = result.intersection_pattern_preserved
    payload = {"method": args.method, "checks": checks, "poset": result.poset.to_doc()}
    if args.format == "text":
        status = "passed" if result.ok else "FAILED"
        print(f"method {args.method}: checks {status} {checks}")
        print(json.dumps(result.poset.to_doc(), indent=2))
    else:
        print(json.dumps(payload, indent=2))
    return 0


def _cmd_export(args) -> int:
    poset = _load_poset(args.path)
    fam = improper_family(poset)
    graph = improper_crown_graph(poset, fam)
    stem = Path(args.path).stem
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{stem}.hasse.dot").write_text(hasse_dot(poset, stem), encoding="utf-8")
        (out / f"{stem}.crowns.dot").write_text(
            improper_crown_graph_dot(graph), encoding="utf-8"
        )
        (out / "template.dot").write_text(
            fragment_graph_dot(template_fragment_graph()), encoding="utf-8"
        )
        print(f"wrote 3 DOT files to {out}")
    else:
        print(hasse_dot(poset, stem), end="")
    return 0


def _cmd_random(args) -> int:
    poset = random_connected_poset(
        args.seed, n_points=args.points, max_height=args.height, density=args.density
    )
    doc = json.dumps(poset.to_doc(), indent=2)
    if args.out:
        Path(args.out).write_text(doc + "\n", encoding="utf-8")
    else:
        print(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crownlab",
        description="Crown retracts in finite posets: analysis, certificates, reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full report for one poset or a directory")
    p_analyze.add_argument("path", nargs="?", help="poset document (JSON)")
    p_analyze.add_argument("--dir", help="analyze every *.json in a directory")
    p_analyze.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p_analyze.add_argument("--budget", type=int, default=None, help="oracle point cap")
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")
    p_analyze.add_argument(
        "--report-dir", help="write summary.csv and figures (PNG) here"
    )
    p_analyze.set_defaults(func=_cmd_analyze)

    p_retract = sub.add_parser("retract", help="emit a verified retraction certificate")
    p_retract.add_argument("path")
    p_retract.add_argument("--crown", help="four points a,b,v,w")
    p_retract.add_argument("--edge", help="two points x,y of an extremal crown edge")
    p_retract.add_argument("--any", action="store_true", help="first retract-crown found")
    p_retract.add_argument("--format", choices=("text", "json"), default="json")
    p_retract.set_defaults(func=_cmd_retract)

    p_dismantle = sub.add_parser("dismantle", help="greedy irreducible-point removal trace")
    p_dismantle.add_argument("path")
    p_dismantle.add_argument("--format", choices=("text", "json"), default="text")
    p_dismantle.set_defaults(func=_cmd_dismantle)

    p_reduce = sub.add_parser("reduce", help="height-2 reduction preserving the crown graph")
    p_reduce.add_argument("path")
    p_reduce.add_argument("--method", type=int, choices=(1, 2), default=1)
    p_reduce.add_argument("--format", choices=("text", "json"), default="json")
    p_reduce.set_defaults(func=_cmd_reduce)

    p_export = sub.add_parser("export", help="DOT for the Hasse diagram and multigraphs")
    p_export.add_argument("path")
    p_export.add_argument("--out", help="directory for the DOT files (default: Hasse to stdout)")
    p_export.set_defaults(func=_cmd_export)

    p_random = sub.add_parser("random", help="seeded random connected poset document")
    p_random.add_argument("--seed", type=int, default=0)
    p_random.add_argument("--points", type=int, default=10)
    p_random.add_argument("--height", type=int, default=2)
    p_random.add_argument("--density", type=float, default=0.25)
    p_random.add_argument("--out", help="write the document here instead of stdout")
    p_random.set_defaults(func=_cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"crownlab: {exc}", file=sys.stderr)
        return 3
    except CrownLabError as exc:
        print(f"crownlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
