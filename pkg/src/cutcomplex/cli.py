"""Command-line front end.

Subcommands construct cut complexes, compute homology, search shellings, run
Morse matchings, realize complexes as cut complexes, verify the family corpus
against the closed-form predictions, and print the squared-cycle experiment.

Human output uses 1-based vertex labels; JSON output is 0-based. Exit status:
0 success, 1 verification mismatch, 2 parse/usage failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from .bitsets import to_tuple
from .complexes import SimplicialComplex
from .cuts import (
    NotCoveredError,
    connected_kset_census,
    cut_complex,
    predicted_betti,
    realize_as_cut_complex,
    skeleton_condition_euler,
)
from .graphs import (
    FamilySpecError,
    Graph,
    family,
    is_chordal,
    read_graph_text,
    write_graph_text,
)
from .homology import reduced_homology
from .morse import (
    element_matching_sequence,
    prism_matching_order,
    restricted_matching,
    tree_matching_order,
    verify_acyclic_and_critical,
)
from .shelling import DEFAULT_BUDGET, find_shelling

PARSE_ERROR = 2
MISMATCH = 1


class CliError(Exception):
    pass


def _load_graph(arg: str) -> Graph:
    if os.path.isfile(arg):
        try:
            return read_graph_text(open(arg).read())
        except ValueError as e:
            raise CliError(f"cannot read graph file {arg}: {e}") from None
    try:
        return family(arg)
    except FamilySpecError as e:
        raise CliError(str(e)) from None


def _facet_str(g: Graph, mask: int) -> str:
    labels = [g.label(v) for v in to_tuple(mask)]
    if all(len(s) == 1 for s in labels):
        return "".join(labels)
    return "{" + ",".join(labels) + "}"


def _print_human(lines):
    for line in lines:
        print(line)


def _emit(report: dict, as_json: bool, human_lines):
    if as_json:
        print(json.dumps(report, sort_keys=True))
    else:
        _print_human(human_lines)


def _formula_mu(g: Graph, k: int):
    """(condition holds, formula mu) or (None, None) when out of range/void."""
    try:
        return skeleton_condition_euler(g, k)
    except ValueError:
        return None, None


def cmd_build(args) -> int:
    g = _load_graph(args.graph)
    cx = cut_complex(g, args.k)
    report = {
        "graph": args.graph,
        "n": g.n,
        "k": args.k,
        "complex": cx.to_json_obj(),
        "facet_count": len(cx.facets),
        "connected_kset_count": (
            connected_kset_census(g, args.k).count if 1 <= args.k <= g.n else 0
        ),
    }
    lines = [f"graph: {args.graph} (n={g.n}, m={g.edge_count})", f"k: {args.k}"]
    if cx.is_void:
        report["f_vector"] = None
        report["mu"] = None
        lines.append("cut complex: void")
    else:
        fvec = cx.f_vector()
        report["f_vector"] = list(fvec)
        report["mu"] = cx.reduced_euler()
        lines.append(
            f"facets ({len(cx.facets)}): "
            + " ".join(_facet_str(g, f) for f in cx.facets)
        )
        lines.append(f"f-vector (from dim -1): {fvec}")
        lines.append(f"reduced Euler characteristic: {report['mu']}")
    holds, mu_formula = _formula_mu(g, args.k)
    report["skeleton_condition"] = holds
    report["mu_census_formula"] = mu_formula
    if holds:
        lines.append(f"census formula agrees: mu = {mu_formula}")
    _emit(report, args.json, lines)
    return 0


def cmd_homology(args) -> int:
    g = _load_graph(args.graph)
    cx = cut_complex(g, args.k)
    report = {"graph": args.graph, "n": g.n, "k": args.k}
    lines = [f"graph: {args.graph} (n={g.n})", f"k: {args.k}"]
    if cx.is_void:
        rep = None
        report["homology"] = None
        report["mu"] = None
        report["euler_consistent"] = None
        lines.append("cut complex: void (no homology)")
    else:
        rep = reduced_homology(cx)
        report["homology"] = rep.to_json_obj()
        report["mu"] = cx.reduced_euler()
        report["euler_consistent"] = rep.euler() == cx.reduced_euler()
        for i in sorted(rep.ranks):
            tor = rep.torsion_at(i)
            if rep.betti(i) or tor:
                tstr = f" torsion {list(tor)}" if tor else ""
                lines.append(f"H~_{i}: rank {rep.betti(i)}{tstr}")
        if not rep.nonzero_dims():
            lines.append("all reduced homology vanishes")
    status = 0
    try:
        pred = predicted_betti(args.graph, args.k)
        ok = pred.matches(cx, rep)
        report["predicted"] = pred.to_json_obj()
        report["predicted_matches"] = ok
        lines.append(f"predicted: {pred.status} dim={pred.dim} count={pred.count} -> {'ok' if ok else 'MISMATCH'}")
        if not ok:
            status = MISMATCH
    except (NotCoveredError, FamilySpecError, ValueError):
        report["predicted"] = None
    _emit(report, args.json, lines)
    return status


def cmd_shell(args) -> int:
    g = _load_graph(args.graph)
    cx = cut_complex(g, args.k)
    cert = find_shelling(cx, budget=args.budget)
    report = {
        "graph": args.graph,
        "k": args.k,
        "certificate": cert.to_json_obj(),
    }
    lines = [f"graph: {args.graph}", f"k: {args.k}", f"verdict: {cert.verdict} (nodes explored: {cert.nodes})"]
    if cert.order:
        lines.append("order: " + " ".join(_facet_str(g, sum(1 << v for v in f)) for f in cert.order))
    _emit(report, args.json, lines)
    return 0


def _morse_order(args, g: Graph):
    spec = args.order
    if spec == "tree":
        if args.k != 2:
            raise CliError("the tree matching targets k = 2")
        return tree_matching_order(g, 0), None
    if spec == "prism":
        if not args.graph.startswith("prism:"):
            raise CliError("the prism order needs a prism:<n> graph argument")
        n = g.n // 2
        return prism_matching_order(n, args.k), None
    if spec == "restricted":
        if args.k != 2:
            raise CliError("the restricted matching targets k = 2")
        return None, restricted_matching(g)
    try:
        return tuple(int(x) for x in spec.split(",")), None
    except ValueError:
        raise CliError(f"bad --order {spec!r}: expected tree|prism|restricted|comma list") from None


def cmd_morse(args) -> int:
    g = _load_graph(args.graph)
    cx = cut_complex(g, args.k)
    order, prebuilt = _morse_order(args, g)
    if prebuilt is not None:
        matching = prebuilt
    else:
        matching = element_matching_sequence(cx, order)
    acyclic, census = verify_acyclic_and_critical(matching)
    report = {
        "graph": args.graph,
        "k": args.k,
        "order": list(order) if order is not None else "restricted",
        "pairs": len(matching.pairs),
        "critical_census": {str(d): c for d, c in sorted(census.items())},
        "acyclic": acyclic,
        "matching": matching.to_json_obj(),
    }
    lines = [
        f"graph: {args.graph}, k={args.k}",
        f"pairs: {len(matching.pairs)}",
        f"critical cells by dimension: {dict(sorted(census.items())) or '{}'}",
        f"acyclic: {acyclic}",
    ]
    _emit(report, args.json, lines)
    return 0


def cmd_realize(args) -> int:
    try:
        obj = json.load(open(args.complex))
    except (OSError, json.JSONDecodeError) as e:
        raise CliError(f"cannot read complex JSON: {e}") from None
    cx = SimplicialComplex.from_json_obj(obj)
    g, k = realize_as_cut_complex(cx)
    round_trip = cut_complex(g, k) == SimplicialComplex(cx.facets)
    chordal, _ = is_chordal(g)
    report = {
        "n": g.n,
        "k": k,
        "edges": g.edges(),
        "graph_text": write_graph_text(g),
        "round_trip_ok": round_trip,
        "chordal": chordal,
    }
    lines = [
        f"graph on {g.n} vertices with {g.edge_count} edges; k = {k}",
        f"round trip reproduces the complex: {round_trip}",
        f"graph is chordal: {chordal}",
        write_graph_text(g).rstrip(),
    ]
    _emit(report, args.json, lines)
    return 0 if round_trip else MISMATCH


# ---------------------------------------------------------------------------
# verify: family corpus, one row per (family, k)

# rows: family spec, k, expected shellable (None = skip search), homology?
_TABLE1_SMALL = [
    ("edgeless:5", 2, True, True),
    ("edgeless:5", 3, True, True),
    ("edgeless:5", 4, True, True),
    ("complete:5", 2, True, True),
    ("complete_multipartite:3,4", 2, False, True),
    ("complete_multipartite:3,4", 3, False, True),
    ("complete_multipartite:3,4", 4, True, True),
    ("complete_multipartite:3,4", 5, True, True),
    ("complete_multipartite:2,2,2", 2, False, True),
    ("complete_multipartite:2,2,2", 3, True, True),
    ("cycle:5", 2, False, True),
    ("cycle:5", 3, True, True),
    ("cycle:6", 3, True, True),
    ("cycle:6", 4, True, True),
    ("cycle:7", 3, True, True),
    ("path:6", 2, True, True),
    ("path:6", 3, True, True),
    ("star:4", 2, True, True),
    ("star:4", 3, True, True),
    ("tree:0-1,1-2,2-3,3-4,2-5", 3, True, True),
    ("prism:3", 2, False, True),
    ("prism:3", 3, False, True),
    ("prism:4", 3, None, True),
    ("squared_cycle:7", 3, False, True),
    ("squared_cycle:8", 4, False, True),
    ("kayak:4", 4, False, False),
    ("kayak:5", 5, False, False),
    ("threshold:1011", 2, True, False),
    ("threshold:1011", 3, True, False),
    ("balloon:5,3", 3, True, True),
    ("figure_eight:4,4", 4, True, True),
    ("petersen", 2, None, True),
]


def _verify_row(spec, k, expect_shellable, check_homology, budget):
    g = family(spec)
    cx = cut_complex(g, k)
    row = {"family": spec, "k": k, "ok": True, "detail": []}

    if check_homology:
        rep = None if cx.is_void else reduced_homology(cx)
        try:
            pred = predicted_betti(spec, k)
            match = pred.matches(cx, rep)
            row["predicted"] = pred.to_json_obj()
            row["betti_ok"] = match
            if not match:
                row["ok"] = False
                row["detail"].append("betti mismatch")
        except NotCoveredError:
            row["predicted"] = None
        if rep is not None:
            consistent = rep.euler() == cx.reduced_euler()
            row["euler_ok"] = consistent
            if not consistent:
                row["ok"] = False
                row["detail"].append("euler mismatch")

    if expect_shellable is not None:
        cert = find_shelling(cx, budget=budget)
        got = cert.verdict
        row["shelling"] = got
        want = "shellable" if expect_shellable else "not_shellable"
        if got != want:
            row["ok"] = False
            row["detail"].append(f"shelling: expected {want}, got {got}")
    return row


def cmd_verify(args) -> int:
    if args.corpus not in ("table1-small", "table1"):
        raise CliError(f"unknown corpus {args.corpus!r} (try table1-small)")
    rows = []
    status = 0
    for spec, k, shell, hom in _TABLE1_SMALL:
        row = _verify_row(spec, k, shell, hom, args.budget)
        rows.append(row)
        if not row["ok"]:
            status = MISMATCH
    if args.json:
        print(json.dumps({"corpus": args.corpus, "rows": rows, "ok": status == 0}, sort_keys=True))
    else:
        for row in rows:
            mark = "PASS" if row["ok"] else "FAIL"
            extra = f" ({'; '.join(row['detail'])})" if row["detail"] else ""
            print(f"{mark} {row['family']} k={row['k']}{extra}")
        print(("all rows pass" if status == 0 else "some rows FAILED"))
    return status


def cmd_experiment(args) -> int:
    if args.what != "squared-cycle":
        raise CliError("the only experiment is: squared-cycle")
    n, k = args.n, args.k
    g = family(f"squared_cycle:{n}")
    cx = cut_complex(g, k)
    report = {"n": n, "k": k}
    lines = [f"squared cycle on {n} vertices, k = {k}"]
    if cx.is_void:
        report["homology"] = None
        lines.append("cut complex: void")
    else:
        rep = reduced_homology(cx)
        report["homology"] = rep.to_json_obj()
        for i in sorted(rep.ranks):
            tor = rep.torsion_at(i)
            if rep.betti(i) or tor:
                lines.append(f"computed H~_{i}: rank {rep.betti(i)}" + (f" torsion {list(tor)}" if tor else ""))
    if n == k + 5 and 3 <= k <= 15:
        beta = (k - 3) * (k - 2) * (k + 5) // 6
        report["conjectured"] = {"dim3": 1, "dim4": beta}
        lines.append(f"conjectured (never asserted): H~_3 rank 1, H~_4 rank {beta}")
    elif k == 3 and n >= 9:
        beta = comb(n - 4, 2) - 9
        report["conjectured"] = {str(n - k - 1): beta}
        lines.append(f"conjectured (never asserted): wedge of {beta} spheres in dimension {n - k - 1}")
    else:
        report["conjectured"] = None
    _emit(report, args.json, lines)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cutcomplex",
        description="cut complexes of graphs: construction, homology, shellability, Morse matchings",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_graph_k(sp):
        sp.add_argument("graph", help="family DSL string (e.g. cycle:7) or path to a text graph file")
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("build", help="facets, f-vector and Euler characteristic")
    add_graph_k(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("homology", help="reduced integer homology of the cut complex")
    add_graph_k(sp)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("shell", help="search for a shelling order")
    add_graph_k(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_shell)

    sp = sub.add_parser("morse", help="element-matching Morse census")
    add_graph_k(sp)
    sp.add_argument("--order", required=True, help="tree | prism | restricted | comma-separated vertices (0-based)")
    sp.set_defaults(func=cmd_morse)

    sp = sub.add_parser("realize", help="realize a pure complex (JSON file) as a cut complex")
    sp.add_argument("complex", help="path to complex JSON")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("verify", help="run the family corpus against predictions")
    sp.add_argument("corpus")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("experiment", help="print computed homology next to conjectured values")
    sp.add_argument("what")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return PARSE_ERROR if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE_ERROR
    except (FamilySpecError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
