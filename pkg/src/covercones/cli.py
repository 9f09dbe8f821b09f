"""Command line front end.

One command per invocation; input files hold a graph, clutter, matrix or
ideal (see textio).  Output is a pretty text report by default or a
versioned machine-readable document with --json.  Exit codes: 0 the command
completed (whatever the verdict), 1 the verdict differed from --assert,
2 malformed input, 3 a size cap was exceeded.
"""

import argparse
import dataclasses
import hashlib
import json
import sys
import time

from . import blowup, checks
from .clutters import (all_cliques, blocker, clique_equalization, cover_ideal,
                       edge_clutter, is_perfect_definitional, maximal_cliques,
                       minimal_vertex_covers, PERFECTION_ORACLE_CAP)
from .cones import HILBERT_DIM_CAP, hilbert_basis
from .errors import CapExceededError, InputError
from .report import _plain
from .textio import format_inequality, parse_input, read_labels

SCHEMA_VERSION = 1

NO_VERDICT = object()   # data-only commands; --assert rejects these


def _transpose(rows):
    return tuple(tuple(r[i] for r in rows) for i in range(len(rows[0])))


def _doc_columns(doc):
    """Matrix documents store rows (vertices); columns are the generators."""
    if doc.kind != "matrix":
        raise InputError(f"command expects a matrix, got {doc.kind}")
    return _transpose(doc.rows)


def _doc_graph(doc):
    if doc.kind != "graph":
        raise InputError(f"command expects a graph, got {doc.kind}")
    return doc.graph


def _doc_clutter(doc):
    if doc.kind == "clutter":
        return doc.clutter
    if doc.kind == "graph":
        return edge_clutter(doc.graph)
    raise InputError(f"command expects a clutter or graph, got {doc.kind}")


def _cover_side_ideal(doc):
    """The ideal a cone command works on: graphs contribute their cover
    ideal, clutters their edge ideal, ideal documents themselves."""
    if doc.kind == "graph":
        return cover_ideal(edge_clutter(doc.graph)), "cover ideal of the graph"
    if doc.kind == "clutter":
        return [tuple(1 if v in set(e) else 0 for v in range(1, doc.n + 1))
                for e in doc.clutter.edges], "edge ideal of the clutter"
    if doc.kind == "ideal":
        return list(doc.rows), "given ideal"
    raise InputError(f"command expects a graph, clutter or ideal, got {doc.kind}")


def _edge_side_ideal(doc):
    if doc.kind == "graph":
        return [tuple(1 if v in e else 0 for v in range(1, doc.n + 1))
                for e in doc.graph.edges], "edge ideal of the graph"
    return _cover_side_ideal(doc)


def _subset(doc, vertices):
    return [doc.labels[v - 1] for v in vertices]


def _monomial(vec):
    return str(blowup.MonomialGenerator(tuple(vec[:-1]), vec[-1]))


def data(name, value):
    return {"type": "data", "name": name, "value": _plain(value)}


def check(report):
    return {"type": "check", **report.as_dict()}


# --- command handlers: each returns (sections, primary_verdict) ------------

def _cmd_check_perfect(doc, cfg):
    G = _doc_graph(doc)
    cone = checks.perfect_via_rees_cone(G, cap=cfg["cap_n"])
    oracle = is_perfect_definitional(G, cap=cfg["cap_n"])
    if cone.verdict != oracle.verdict:
        raise AssertionError("cone characterization and oracle disagree")
    return [check(cone), check(oracle)], cone.verdict


def _cmd_rees_cone(doc, cfg):
    ideal, origin = _cover_side_ideal(doc)
    model = blowup.rees_cone(ideal)
    return [
        data("ideal", {"origin": origin, "generators": ideal}),
        data("lift_set", model.lift_set),
        data("facets", [format_inequality(h) for h in model.cone.facets]),
    ], NO_VERDICT


def _cmd_simis_cone(doc, cfg):
    ideal, origin = _edge_side_ideal(doc)
    model = blowup.simis_cone(ideal)
    redundant = set(model.redundant_halfspaces)
    return [
        data("ideal", {"origin": origin, "generators": ideal}),
        data("halfspaces", [
            {"inequality": format_inequality(h), "redundant": h in redundant}
            for h in model.halfspaces]),
        data("irredundant_facets",
             [format_inequality(h) for h in model.cone.facets]),
    ], NO_VERDICT


def _cmd_hilbert_basis(doc, cfg):
    if cfg["cone"] == "rees":
        ideal, origin = _cover_side_ideal(doc)
        cone = blowup.rees_cone(ideal).cone
    else:
        ideal, origin = _edge_side_ideal(doc)
        cone = blowup.simis_cone(ideal).cone
    hb = hilbert_basis(cone, dim_cap=cfg["hb_dim_cap"])
    return [
        data("ideal", {"origin": origin, "generators": ideal}),
        data("hilbert_basis", [{"vector": e, "monomial": _monomial(e)}
                               for e in hb.elements]),
    ], NO_VERDICT


def _cmd_check_normal(doc, cfg):
    ideal, origin = _cover_side_ideal(doc)
    report = blowup.is_rees_normal(ideal, dim_cap=cfg["hb_dim_cap"])
    return [data("ideal", {"origin": origin, "generators": ideal}),
            check(report)], report.verdict


def _cmd_check_gorenstein(doc, cfg):
    G = _doc_graph(doc)
    report = blowup.gorenstein_check(G, scan_bound=cfg["scan_bound"],
                                     dim_cap=cfg["hb_dim_cap"])
    return [check(report)], report.verdict


def _cmd_symbolic_gens(doc, cfg):
    G = _doc_graph(doc)
    gens = blowup.symbolic_generators_perfect(
        G, assume_perfect=cfg["assume_perfect"],
        perfection_cap=cfg["cap_n"])
    mode = "assumed-perfect" if cfg["assume_perfect"] else "verified-perfect"
    return [data("perfection", mode),
            data("generators", [str(m) for m in gens])], NO_VERDICT


def _cmd_check_tdi(doc, cfg):
    cols = _doc_columns(doc)
    report = checks.tdi_check(cols, dim_cap=cfg["hb_dim_cap"])
    return [check(report)], report.verdict


def _cmd_tdi_oracle(doc, cfg):
    cols = _doc_columns(doc)
    if cfg["alpha_box"] is not None:
        report = checks.tdi_oracle(cols, alpha_lo=-cfg["alpha_box"],
                                   alpha_hi=cfg["alpha_box"])
    else:
        report = checks.tdi_oracle(cols)
    return [check(report)], report.verdict


def _cmd_check_balanced(doc, cfg):
    cols = _doc_columns(doc)
    fast = checks.balanced_check(cols)
    sections = [check(fast)]
    if len(cols) <= 7 and len(cols[0]) <= 7:
        oracle = checks.balanced_oracle(cols)
        if oracle.verdict != fast.verdict:
            raise AssertionError("balancedness fast path and oracle disagree")
        sections.append(check(oracle))
    return sections, fast.verdict


def _cmd_check_mfmc(doc, cfg):
    C = _doc_clutter(doc)
    report = checks.mfmc_check(C)
    return [check(report)], report.verdict


def _cmd_blocker(doc, cfg):
    C = _doc_clutter(doc)
    B = blocker(C)
    return [data("blocker_edges", [_subset(doc, e) for e in B.edges])], NO_VERDICT


def _cmd_covers(doc, cfg):
    C = _doc_clutter(doc)
    covers = minimal_vertex_covers(C)
    return [data("minimal_vertex_covers", [_subset(doc, c) for c in covers])], NO_VERDICT


def _cmd_cliques(doc, cfg):
    G = _doc_graph(doc)
    sections = [data("maximal_cliques",
                     [_subset(doc, c) for c in maximal_cliques(G)])]
    if cfg["all_cliques"]:
        sections.append(data("all_cliques",
                             [_subset(doc, c) for c in all_cliques(G)]))
    return sections, NO_VERDICT


def _cmd_dual_ideal(doc, cfg):
    if doc.kind == "ideal":
        vectors = list(doc.rows)
    elif doc.kind == "matrix":
        vectors = list(_doc_columns(doc))
    else:
        raise InputError(f"command expects an ideal or matrix, got {doc.kind}")
    from .clutters import dual_ideal
    return [data("dual_ideal", dual_ideal(vectors))], NO_VERDICT


def _cmd_clique_equalize(doc, cfg):
    G = _doc_graph(doc)
    H, added = clique_equalization(G)
    labels = list(doc.labels) + [f"z{i}" for i in range(1, len(added) + 1)]
    return [
        data("added_vertices", [labels[v - 1] for v in added]),
        data("grown_graph", {"n": H.n, "edges": [list(e) for e in H.edges]}),
        data("maximal_cliques",
             [[labels[v - 1] for v in c] for c in maximal_cliques(H)]),
    ], NO_VERDICT


def _cmd_check_cm2_normal(doc, cfg):
    G = _doc_graph(doc)
    report = checks.cm_height_two_normal(list(G.edges),
                                         dim_cap=cfg["hb_dim_cap"])
    return [check(report)], report.verdict


COMMANDS = {
    "check-perfect": (_cmd_check_perfect, "graph"),
    "rees-cone": (_cmd_rees_cone, "ideal"),
    "simis-cone": (_cmd_simis_cone, "ideal"),
    "hilbert-basis": (_cmd_hilbert_basis, "ideal"),
    "check-normal": (_cmd_check_normal, "ideal"),
    "check-gorenstein": (_cmd_check_gorenstein, "graph"),
    "symbolic-gens": (_cmd_symbolic_gens, "graph"),
    "check-tdi": (_cmd_check_tdi, "matrix"),
    "tdi-oracle": (_cmd_tdi_oracle, "matrix"),
    "check-balanced": (_cmd_check_balanced, "matrix"),
    "check-mfmc": (_cmd_check_mfmc, "clutter"),
    "blocker": (_cmd_blocker, "clutter"),
    "covers": (_cmd_covers, "clutter"),
    "cliques": (_cmd_cliques, "graph"),
    "dual-ideal": (_cmd_dual_ideal, "ideal"),
    "clique-equalize": (_cmd_clique_equalize, "graph"),
    "check-cm2-normal": (_cmd_check_cm2_normal, "graph"),
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="covercones",
        description="Exact cone computations and decision procedures for "
                    "graphs, clutters and monomial ideals.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", help="input file, or '-' for stdin")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--assert", dest="assert_verdict", choices=["true", "false"],
                        help="exit 1 unless the primary verdict matches")
    parser.add_argument("--cap-n", type=int, default=PERFECTION_ORACLE_CAP)
    parser.add_argument("--hb-dim-cap", type=int, default=HILBERT_DIM_CAP)
    parser.add_argument("--alpha-box", type=int, default=None,
                        help="symmetric objective box for tdi-oracle")
    parser.add_argument("--scan-bound", type=int, default=None,
                        help="t-degree bound of the Gorenstein interior scan")
    parser.add_argument("--labels", default=None,
                        help="file with one label per vertex, for rendering")
    parser.add_argument("--cone", choices=["rees", "simis"], default="simis",
                        help="which cone hilbert-basis works on")
    parser.add_argument("--all", dest="all_cliques", action="store_true",
                        help="also list non-maximal cliques")
    parser.add_argument("--assume-perfect", action="store_true",
                        help="skip the perfection oracle in symbolic-gens")
    parser.add_argument("--minimalize", action="store_true",
                        help="drop comparable clutter edges instead of rejecting")
    return parser


def run(args):
    handler, expected_kind = COMMANDS[args.command]
    if args.input == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
        source = args.input
    doc = parse_input(text, expected_kind=expected_kind,
                      strict=not args.minimalize, source=source)
    if args.labels:
        with open(args.labels, encoding="utf-8") as fh:
            labels = read_labels(fh.read())
        if len(labels) < doc.n:
            raise InputError(
                f"label file has {len(labels)} names for {doc.n} vertices")
        doc = dataclasses.replace(doc, labels=labels[:doc.n])
    cfg = {
        "cap_n": args.cap_n,
        "hb_dim_cap": args.hb_dim_cap,
        "alpha_box": args.alpha_box,
        "scan_bound": args.scan_bound,
        "cone": args.cone,
        "all_cliques": args.all_cliques,
        "assume_perfect": args.assume_perfect,
        "strict_clutters": not args.minimalize,
    }
    started = time.monotonic()
    sections, verdict = handler(doc, cfg)
    elapsed_ms = (time.monotonic() - started) * 1000.0
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "input": {"kind": doc.kind, "source": doc.source,
                  "labels": list(doc.labels), "digest": doc.digest(),
                  **doc.payload()},
        "config": {k: v for k, v in sorted(cfg.items())},
        "results": sections,
        "primary_verdict": None if verdict is NO_VERDICT else verdict,
    }
    blob = json.dumps(report, sort_keys=True)
    report["digest"] = hashlib.sha256(blob.encode()).hexdigest()
    report["timing_ms"] = round(elapsed_ms, 3)
    exit_code = 0
    if args.assert_verdict is not None:
        if verdict is NO_VERDICT:
            raise InputError(
                f"{args.command} produces no verdict to assert on")
        if verdict != (args.assert_verdict == "true"):
            exit_code = 1
    return report, exit_code


def _print_pretty(report, out):
    print(f"command: {report['command']}", file=out)
    inp = report["input"]
    print(f"input: {inp['kind']} ({inp['source']}), digest {inp['digest'][:12]}",
          file=out)
    for section in report["results"]:
        if section["type"] == "data":
            print(f"{section['name']}:", file=out)
            value = section["value"]
            if isinstance(value, list):
                for item in value:
                    print(f"  {item}", file=out)
            else:
                print(f"  {value}", file=out)
        else:
            verdict = {True: "true", False: "false", None: "n/a"}[section["verdict"]]
            print(f"check {section['name']}: {verdict}  [{section['method']}]",
                  file=out)
            if section.get("reason"):
                print(f"  reason: {section['reason']}", file=out)
            if section.get("witness") is not None:
                print(f"  witness: {section['witness']}", file=out)
            if section.get("certificate") is not None:
                print(f"  certificate: {section['certificate']}", file=out)
            if section.get("search_bounds"):
                print(f"  bounds: {section['search_bounds']}", file=out)
    if report.get("primary_verdict") is not None:
        print(f"verdict: {report['primary_verdict']}", file=out)
    print(f"timing: {report['timing_ms']} ms", file=out)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        report, exit_code = run(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        json.dump(report, sys.stdout, sort_keys=True, indent=2)
        print()
    else:
        _print_pretty(report, sys.stdout)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
