"""Command-line interface.

Subcommands: solve, oracle, compare, curve, gen, bench. Exit codes:
0 success, 1 usage/IO error, 2 guarantee violation found by compare.
"""

import argparse
import json
import os
import sys
import time

from . import graph as graphmod
from . import guarantee, oracle, plots, solver


def _read_graph(path):
    with open(path) as fh:
        return graphmod.parse(fh.read())


def _emit(text, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sides(y):
    plus = [i + 1 for i, s in enumerate(y) if s > 0]
    minus = [i + 1 for i, s in enumerate(y) if s < 0]
    return plus, minus


def _solve_params(args):
    return solver.SolveParams(eig_tol=args.eig_tol, eig_max_iter=args.eig_max_iter,
                              seed=args.seed)


def _report_dict(g, report):
    w_total = graphmod.total_weight(g)
    plus, minus = _sides(report.y)
    d = {
        "n": g.n,
        "m": g.m,
        "total_weight": w_total,
        "good_weight": report.good_weight,
        "ratio": report.good_weight / w_total if w_total > 0 else 1.0,
        "side_plus": plus,
        "side_minus": minus,
        "trace": [
            {"n": t.n, "decided": t.decided, "ratio": t.ratio, "rho": t.rho,
             "fallback": t.fallback} for t in report.trace
        ],
    }
    if w_total == 0:
        d["note"] = "graph has zero total weight; ratio reported as 1.0 by convention"
    return d


def cmd_solve(args):
    g = _read_graph(args.input)
    report = solver.solve(g, _solve_params(args))
    d = _report_dict(g, report)
    if args.format == "json":
        _emit(json.dumps(d, indent=2, sort_keys=True) + "\n", args.output)
    else:
        lines = [
            f"n = {d['n']}, m = {d['m']}, w(E) = {d['total_weight']:.12g}",
            f"good weight = {d['good_weight']:.12g}",
            f"ratio good/w(E) = {d['ratio']:.12g}",
            f"side +1: {' '.join(map(str, d['side_plus'])) or '(empty)'}",
            f"side -1: {' '.join(map(str, d['side_minus'])) or '(empty)'}",
            "trace (n, decided, ratio, rho, fallback):",
        ]
        for t in d["trace"]:
            ratio = "n/a" if t["ratio"] is None else f"{t['ratio']:.6f}"
            rho = "n/a" if t["rho"] is None else f"{t['rho']:.6f}"
            lines.append(f"  {t['n']:6d} {t['decided']:8d} {ratio:>10} {rho:>10}"
                         f" {'fallback' if t['fallback'] else ''}")
        if "note" in d:
            lines.append(f"note: {d['note']}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_oracle(args):
    g = _read_graph(args.input)
    res = oracle.brute_force(g)
    plus, minus = _sides(res.witness)
    if args.format == "json":
        d = {"n": g.n, "opt_value": res.opt_value, "epsilon": res.epsilon,
             "side_plus": plus, "side_minus": minus}
        _emit(json.dumps(d, indent=2, sort_keys=True) + "\n", args.output)
    else:
        _emit(f"opt = {res.opt_value:.12g}\nepsilon = {res.epsilon:.12g}\n"
              f"side +1: {' '.join(map(str, plus)) or '(empty)'}\n"
              f"side -1: {' '.join(map(str, minus)) or '(empty)'}\n", args.output)
    return 0


def _instance_paths(path):
    if os.path.isdir(path):
        return sorted(
            os.path.join(path, f) for f in os.listdir(path)
            if f.endswith(".mcc") or f.endswith(".txt"))
    return [path]


def cmd_compare(args):
    paths = _instance_paths(args.input)
    if not paths:
        print(f"no instances found under {args.input}", file=sys.stderr)
        return 1
    rows = []
    any_fail = False
    min_ratio = float("inf")
    for p in paths:
        g = _read_graph(p)
        report = solver.solve(g, _solve_params(args))
        verdict = oracle.verify_report(g, report, tol=args.tol)
        res = oracle.brute_force(g)
        ok = (verdict.meets_integral_bound and verdict.meets_ratio
              and verdict.meets_half)
        any_fail |= not ok
        min_ratio = min(min_ratio, verdict.ratio)
        w_total = graphmod.total_weight(g)
        rows.append({
            "instance": os.path.basename(p),
            "opt": res.opt_value,
            "alg": report.good_weight,
            "ratio": verdict.ratio,
            "epsilon": res.epsilon,
            "F_bound": guarantee.F_integral(res.epsilon) * w_total,
            "pass": ok,
        })
    if args.format == "json":
        out = {"instances": rows, "min_ratio": min_ratio, "all_pass": not any_fail}
        _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.output)
    else:
        lines = [f"{'instance':30} {'opt':>12} {'alg':>12} {'ratio':>10}"
                 f" {'epsilon':>10} {'F bound':>12} {'pass':>6}"]
        for r in rows:
            lines.append(f"{r['instance']:30} {r['opt']:12.6g} {r['alg']:12.6g}"
                         f" {r['ratio']:10.6f} {r['epsilon']:10.6f}"
                         f" {r['F_bound']:12.6g} {'ok' if r['pass'] else 'FAIL':>6}")
        lines.append(f"minimum ratio over {len(rows)} instance(s): {min_ratio:.6f}")
        _emit("\n".join(lines) + "\n", args.output)
    return 2 if any_fail else 0


def cmd_curve(args):
    rows = guarantee.curve_table(args.grid)
    guarantee.write_curve_csv(rows, args.output)
    eps0 = guarantee.find_epsilon0()
    eps_star, g_min = guarantee.minimize_G()
    print(f"eps0     = {eps0:.10f}")
    print(f"eps_star = {eps_star:.10f}")
    print(f"g_min    = {g_min:.10f}")
    print(f"wrote {args.grid} rows to {args.output}")
    if args.plot:
        out_dir = os.path.dirname(os.path.abspath(args.output))
        for p in plots.render_curve_figures(rows, out_dir):
            print(f"wrote {p}")
    return 0


def cmd_gen(args):
    g = graphmod.generate(args.model, n=args.n, p=args.p,
                          red_fraction=args.red_frac, seed=args.seed)
    _emit(graphmod.serialize(g), args.output)
    return 0


def cmd_bench(args):
    paths = _instance_paths(args.input)
    if not paths:
        print(f"no instances found under {args.input}", file=sys.stderr)
        return 1
    results = []
    for p in paths:
        g = _read_graph(p)
        w_total = graphmod.total_weight(g)
        t0 = time.perf_counter()
        report = solver.solve(g, _solve_params(args))
        elapsed = time.perf_counter() - t0
        ratio = report.good_weight / w_total if w_total > 0 else 1.0
        results.append({"instance": os.path.basename(p), "n": g.n, "m": g.m,
                        "good_weight": report.good_weight,
                        "total_weight": w_total, "ratio": ratio,
                        "seconds": elapsed})
    ratios = [r["ratio"] for r in results]
    summary = {
        "instances": results,
        "count": len(results),
        "min_ratio": min(ratios),
        "mean_ratio": sum(ratios) / len(ratios),
        "total_seconds": sum(r["seconds"] for r in results),
    }
    if args.format == "json" or args.output:
        _emit(json.dumps(summary, indent=2, sort_keys=True) + "\n", args.output)
    else:
        for r in results:
            print(f"{r['instance']:30} n={r['n']:5d} ratio={r['ratio']:.4f}"
                  f" time={r['seconds']*1e3:8.1f} ms")
        print(f"count={summary['count']} min_ratio={summary['min_ratio']:.4f}"
              f" mean_ratio={summary['mean_ratio']:.4f}")
    return 0


def _add_solver_flags(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eig-tol", type=float, default=1e-9, dest="eig_tol")
    p.add_argument("--eig-max-iter", type=int, default=None, dest="eig_max_iter")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mccut",
        description="Spectral-partitioning solver for Max Cut / Maximum Colored Cut")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the recursive spectral solver")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exact brute-force optimum (n <= 24)")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="solver vs oracle with guarantee checks")
    p.add_argument("--input", required=True, help="instance file or directory")
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--tol", type=float, default=1e-6)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("curve", help="emit the guarantee curves as CSV")
    p.add_argument("--grid", type=int, default=1000)
    p.add_argument("--output", default="guarantee_curves.csv")
    p.add_argument("--plot", action="store_true",
                   help="also render PNG figures next to the CSV")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("--model", required=True,
                   choices=("gnp", "cycle", "complete", "bipartite"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--red-frac", type=float, default=1.0, dest="red_frac")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run the solver over a directory")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (graphmod.GraphError, oracle.OracleSizeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
