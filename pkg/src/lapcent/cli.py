"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
Output for a fixed command line (including --seed) is byte-identical across
runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .electrical import export_netlist
from .graph import Graph, GraphError, format_edge_list, load_edge_list
from .spectral import build_spectral, spectral_report
from .topology import (ABILENE_PRESET, TopologySpec, export_dot, gen_core_gateway,
                       abilene_topology, pert_preset, sensitivity_report)
from .verify import VerifyConfig, run_checks
from .walks import (CONVENTIONS, approx_commute_dense, approx_hitting_dense,
                    estimate_hitting_mc, hitting_times_exact)
from .zoo import centrality_report


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(obj, path):
    _write(json.dumps(obj, indent=2, sort_keys=True) + "\n", path)


def cmd_analyze(args) -> int:
    g = load_edge_list(args.graph)
    report = spectral_report(build_spectral(g))
    if args.json:
        _dump_json(report, args.output)
    elif args.csv:
        lines = ["node,label,lplus_diag,cstar"]
        lines += [f"{d['id']},{d['label']},{d['lplus_diag']:.12g},{d['cstar']:.12g}"
                  for d in report["nodes"]]
        _write("\n".join(lines) + "\n", args.output)
    else:
        graph = report["graph"]
        lines = [
            f"nodes: {g.n}  edges: {g.m}  volume: {g.volume:g}",
            f"kirchhoff index K: {graph['kirchhoff']:.6f} "
            f"(convention: {graph['kirchhoff_convention']}; K* = {graph['kstar']:.6f})",
            "node  label  l+_ii      C*",
        ]
        lines += [f"{d['id']:>4}  {d['label']:<6} {d['lplus_diag']:<10.6f} {d['cstar']:.6f}"
                  for d in report["nodes"]]
        _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_compare(args) -> int:
    g = load_edge_list(args.graph)
    rep = centrality_report(g)
    rows = rep.csv_rows(g)
    _write("\n".join(",".join(r) for r in rows) + "\n", args.output)
    return 0


def cmd_hitting(args) -> int:
    g = load_edge_list(args.graph)
    i, j = args.source, args.target
    out = {"source": i, "target": j, "method": args.method}
    if args.method == "exact":
        ht = hitting_times_exact(g)
        out["hitting"] = float(ht.H[i, j])
        out["commute"] = float(ht.C[i, j])
    elif args.method == "mc":
        est = estimate_hitting_mc(g, i, j, args.runs, args.seed)
        out["estimate"] = est.to_dict()
    else:  # approx
        out["hitting"] = approx_hitting_dense(g, i, j, convention=args.convention)
        out["commute"] = approx_commute_dense(g, i, j)
        out["convention"] = args.convention
        out["note"] = "dense-regime heuristic from degrees only"
    _dump_json(out, args.output)
    return 0


def cmd_een_export(args) -> int:
    g = load_edge_list(args.graph)
    _write(export_netlist(g), args.output)
    return 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(seed=args.seed, tolerance=args.tolerance, max_n=args.n)
    results = run_checks(cfg, only=args.only)
    if not results:
        print(f"no check matches --only {args.only!r}", file=sys.stderr)
        return 2
    failed = 0
    for res in results:
        print(res.line())
        if not res.passed:
            failed += 1
            for idx, (slug, g) in enumerate(res.failures[:5]):
                path = f"verify-fail-{slug}-{idx}.el"
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(format_edge_list(g))
                print(f"  failing instance written to {path}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_gen(args) -> int:
    if args.preset == "abilene":
        g = abilene_topology(seed=args.seed)
    else:
        sizes = tuple(int(x) for x in args.subnets.split(",")) if args.subnets else ()
        spec = TopologySpec(core_size=args.core, gateway_count=args.gateways,
                            subnet_sizes=sizes, seed=args.seed)
        g = gen_core_gateway(spec)
    _write(format_edge_list(g), args.output)
    return 0


def cmd_perturb(args) -> int:
    g = load_edge_list(args.graph)
    out = pert_preset(g, args.preset)
    _write(format_edge_list(out), args.output)
    return 0


def cmd_sensitivity(args) -> int:
    before = load_edge_list(args.before)
    after = load_edge_list(args.after)
    rep = sensitivity_report(before, after)
    if args.json:
        _dump_json(rep.to_dict(), args.output)
    else:
        lines = [f"{'descriptor':<12} {'before':>12} {'after':>12} {'delta':>10}  dir"]
        for key in rep.deltas:
            lines.append(f"{key:<12} {rep.before[key]:>12.6f} {rep.after[key]:>12.6f} "
                         f"{rep.deltas[key]:>+10.4f}  {rep.directions[key]}")
        _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_export_dot(args) -> int:
    g = load_edge_list(args.graph)
    rep = centrality_report(g)
    if args.metric not in rep.PER_NODE:
        raise GraphError(f"unknown metric {args.metric!r}; pick one of {rep.PER_NODE}")
    _write(export_dot(g, getattr(rep, args.metric), metric=args.metric), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lapcent",
        description="Robustness centrality and Kirchhoff index from the "
                    "Laplacian pseudo-inverse. Edge lists are 'u v [w]' lines; "
                    "weights are affinities (geodesic length of an edge is 1/w).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_output(sp):
        sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")

    sp = sub.add_parser("analyze", help="per-node C* and the Kirchhoff index")
    sp.add_argument("graph")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    add_output(sp)
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("compare", help="CSV of all centrality indices, raw and max-normalized")
    sp.add_argument("graph")
    add_output(sp)
    sp.set_defaults(fn=cmd_compare)

    sp = sub.add_parser("hitting", help="hitting times: exact, Monte Carlo, or dense approximation")
    sp.add_argument("graph")
    sp.add_argument("-i", "--source", type=int, required=True)
    sp.add_argument("-j", "--target", type=int, required=True)
    sp.add_argument("--method", choices=("exact", "mc", "approx"), default="exact")
    sp.add_argument("--runs", type=int, default=100000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--convention", choices=CONVENTIONS, default="source-degree")
    add_output(sp)
    sp.set_defaults(fn=cmd_hitting)

    sp = sub.add_parser("een", help="equivalent electrical network tools")
    een_sub = sp.add_subparsers(dest="een_command", required=True)
    spe = een_sub.add_parser("export", help="netlist: one 'u v R=<1/w>' line per edge")
    spe.add_argument("graph")
    add_output(spe)
    spe.set_defaults(fn=cmd_een_export)

    sp = sub.add_parser("verify", help="run the identity/invariant suites")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--only", default=None, help="substring filter on check names")
    sp.add_argument("--n", type=int, default=None, help="override instance size caps")
    sp.add_argument("--tolerance", type=float, default=None,
                    help="override every check tolerance")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("gen", help="generate a core/gateway topology")
    sp.add_argument("--preset", choices=("abilene",), default=None,
                    help="bundled 65-node preset")
    sp.add_argument("--core", type=int, default=ABILENE_PRESET.core_size)
    sp.add_argument("--gateways", type=int, default=ABILENE_PRESET.gateway_count)
    sp.add_argument("--subnets", default=None,
                    help="comma-separated subnet sizes, one per gateway")
    sp.add_argument("--seed", type=int, default=42)
    add_output(sp)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("perturb", help="apply a named degree-preserving rewiring")
    sp.add_argument("graph")
    sp.add_argument("--preset", choices=("pert1", "pert2"), required=True)
    add_output(sp)
    sp.set_defaults(fn=cmd_perturb)

    sp = sub.add_parser("sensitivity", help="before/after descriptor deltas and directions")
    sp.add_argument("before")
    sp.add_argument("after")
    sp.add_argument("--json", action="store_true")
    add_output(sp)
    sp.set_defaults(fn=cmd_sensitivity)

    sp = sub.add_parser("export-dot", help="DOT rendering colored by a metric")
    sp.add_argument("graph")
    sp.add_argument("--metric", default="cstar")
    add_output(sp)
    sp.set_defaults(fn=cmd_export_dot)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, OSError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
