"""Full per-poset analysis: crown inventory, retract verdicts, screen."""

from __future__ import annotations

import time

from .crowns import CrownKind, enumerate_four_crowns, improper_family
from .multigraphs import improper_crown_graph
from .oracle import OracleBudget, oracle_retraction_exists
from .poset import Poset, pointmap_to_doc
from .retraction import fixed_point_screen, retract_onto_four_crown
from .search import SearchStatus, find_crown_separating


def analyze(
    poset: Poset, *, oracle: bool = False, budget: OracleBudget | None = None
) -> dict:
    """Analysis report: poset summary, crown inventory, improper-crown graph
    summary, a retract verdict (with verified certificate) per 4-crown of
    the extremal points, and the fixed point screen.

    With ``oracle`` set, every verdict is cross-checked by exhaustive search
    under ``budget``.
    """
    start = time.perf_counter()
    deco = poset.extremal_decomposition()
    crowns = enumerate_four_crowns(poset)
    fam = improper_family(poset)
    graph = improper_crown_graph(poset, fam)
    n_loopless_l = sum(1 for (i, j) in graph.l_edges if i != j)
    n_loopless_u = sum(1 for (i, j) in graph.u_edges if i != j)
    retracts = []
    for crown in crowns:
        pts = list(crown.lo + crown.hi)
        result = find_crown_separating(poset, fam, pts)
        entry: dict = {"crown": pts, "status": result.status.value}
        if result.status is SearchStatus.FOUND:
            certificate = retract_onto_four_crown(poset, pts, fam=fam)
            entry["map"] = pointmap_to_doc(certificate)["map"]
        if oracle:
            verdict = oracle_retraction_exists(poset, pts, budget)
            entry["oracle_retract"] = verdict.exists
            entry["oracle_concurs"] = verdict.exists == (
                result.status is SearchStatus.FOUND
            )
        retracts.append(entry)
    screen = fixed_point_screen(poset, fam)
    findings = []
    for f in screen.findings:
        entry = {"kind": f.kind, "edge": list(f.edge)}
        if f.crown is not None:
            entry["crown"] = list(f.crown)
        if f.retraction is not None:
            entry["map"] = pointmap_to_doc(f.retraction)["map"]
        if f.witness_points is not None:
            entry["witness_points"] = list(f.witness_points)
        findings.append(entry)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return {
        "poset": {
            "points": poset.n,
            "height": poset.height(),
            "minimal": len(deco.minimal),
            "maximal": len(deco.maximal),
            "connected": poset.is_connected(),
        },
        "crowns": {
            "total": len(crowns),
            "proper": sum(1 for c in crowns if c.kind is CrownKind.PROPER),
            "improper": sum(1 for c in crowns if c.is_improper),
            "hourglass": sum(1 for c in crowns if c.kind is CrownKind.HOURGLASS),
        },
        "improper_graph": {
            "vertices": graph.n,
            "l_edges": n_loopless_l,
            "u_edges": n_loopless_u,
            "complete": graph.is_complete() if fam.crowns else True,
        },
        "retracts": retracts,
        "fixed_point_screen": {"verdict": screen.verdict, "findings": findings},
        "elapsed_ms": round(elapsed_ms, 3),
    }


def render_text(report: dict, name: str = "") -> str:
    p = report["poset"]
    c = report["crowns"]
    g = report["improper_graph"]
    lines = []
    if name:
        lines.append(f"== {name}")
    lines.append(
        f"poset: {p['points']} points, height {p['height']}, "
        f"{p['minimal']} minimal, {p['maximal']} maximal, "
        f"{'connected' if p['connected'] else 'DISCONNECTED'}"
    )
    lines.append(
        f"4-crowns in extremal points: {c['total']} "
        f"({c['proper']} proper, {c['improper']} improper, "
        f"{c['hourglass']} hourglass)"
    )
    lines.append(
        f"improper-crown graph: {g['vertices']} vertices, "
        f"{g['l_edges']} L-edges, {g['u_edges']} U-edges"
        + (", complete" if g["complete"] and g["vertices"] > 1 else "")
    )
    if report["retracts"]:
        lines.append("retract verdicts:")
        for entry in report["retracts"]:
            label = "{" + ",".join(entry["crown"]) + "}"
            status = entry["status"]
            if status == "found":
                line = f"  {label}: retract (verified certificate)"
            elif status == "crown_improper":
                line = f"  {label}: improper crown, never a retract"
            else:
                line = f"  {label}: no separating assignment, not a retract"
            if "oracle_concurs" in entry:
                line += " [oracle " + (
                    "concurs" if entry["oracle_concurs"] else "DISAGREES"
                ) + "]"
            lines.append(line)
    else:
        lines.append("retract verdicts: no 4-crowns in the extremal points")
    screen = report["fixed_point_screen"]
    lines.append(
        f"fixed point screen: {screen['verdict']} "
        f"({len(screen['findings'])} findings)"
    )
    for f in screen["findings"]:
        if f["kind"] == "free_edge_retract_crown":
            lines.append(
                f"  edge ({f['edge'][0]},{f['edge'][1]}) in no improper crown: "
                f"retract-crown of size {len(f['crown'])}"
            )
        else:
            lines.append(
                f"  edge ({f['edge'][0]},{f['edge'][1]}) only in non-hourglass "
                f"improper crowns: witness {','.join(f['witness_points'])}"
            )
    lines.append(f"elapsed: {report['elapsed_ms']} ms")
    return "\n".join(lines)


CSV_COLUMNS = [
    "name",
    "points",
    "height",
    "minimal",
    "maximal",
    "connected",
    "crowns_total",
    "crowns_proper",
    "crowns_improper",
    "crowns_hourglass",
    "graph_vertices",
    "graph_complete",
    "retracts_found",
    "fpp_verdict",
    "elapsed_ms",
]


def summary_row(name: str, report: dict) -> dict:
    return {
        "name": name,
        "points": report["poset"]["points"],
        "height": report["poset"]["height"],
        "minimal": report["poset"]["minimal"],
        "maximal": report["poset"]["maximal"],
        "connected": report["poset"]["connected"],
        "crowns_total": report["crowns"]["total"],
        "crowns_proper": report["crowns"]["proper"],
        "crowns_improper": report["crowns"]["improper"],
        "crowns_hourglass": report["crowns"]["hourglass"],
        "graph_vertices": report["improper_graph"]["vertices"],
        "graph_complete": report["improper_graph"]["complete"],
        "retracts_found": sum(
            1 for e in report["retracts"] if e["status"] == "found"
        ),
        "fpp_verdict": report["fixed_point_screen"]["verdict"],
        "elapsed_ms": report["elapsed_ms"],
    }
