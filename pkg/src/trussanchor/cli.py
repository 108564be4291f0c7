"""Command line interface."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .decomposition import truss_decompose, write_labeling_csv
from .experiments import ExperimentSpec, run_experiment
from .followers import upward_route_size
from .generators import GadgetSpec, generate_gadget
from .graph import load_edge_list
from .sampling import subgraph_sample
from .selection import StrategyConfig, STRATEGIES, run_strategy
from .tree import build_tree


def _cmd_decompose(args) -> int:
    g = load_edge_list(args.file)
    labeling = truss_decompose(g)
    hist = Counter(labeling.t)
    print(f"n={g.n} m={g.m} k_max={labeling.k_max}")
    for k in sorted(hist):
        print(f"t={k}: {hist[k]} edges")
    if args.csv:
        write_labeling_csv(g, labeling, args.csv)
        print(f"wrote {args.csv}")
    return 0


def _cmd_anchor(args) -> int:
    g = load_edge_list(args.file)
    config = StrategyConfig(strategy=args.strategy, budget=args.budget,
                            seed=args.seed, trials=args.trials,
                            es_mode=args.es_mode, exact_cap=args.cap)
    res = run_strategy(g, config)
    print(f"strategy={res.strategy} budget={args.budget}")
    print("anchors:", " ".join(
        "{}-{}".format(*g.label_pair(e)) for e in res.anchors))
    print("anchor edge ids:", " ".join(map(str, res.anchors)))
    if len(res.per_round_gain) == len(res.anchors):
        for i, (e, gain) in enumerate(zip(res.anchors, res.per_round_gain)):
            print(f"round {i + 1}: edge {e} gain {gain}")
    print(f"total gain: {res.total_gain}")
    print(f"wall seconds: {sum(res.per_round_wall):.3f}")
    return 0


def _cmd_gadget(args) -> int:
    membership = None
    if args.membership:
        with open(args.membership, encoding="utf-8") as fh:
            raw = json.load(fh)
        membership = tuple(frozenset(grp) for grp in raw)
    spec = GadgetSpec(s=args.s, t=args.t, membership=membership)
    res = generate_gadget(spec)
    g = res.graph
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for e in range(g.m):
                a, b = g.label_pair(e)
                fh.write(f"{a} {b}\n")
        print(f"wrote {args.out}")
    print(f"n={g.n} m={g.m}")
    print("set edges:", " ".join(map(str, res.set_edges)))
    print("element edges:", " ".join(map(str, res.element_edges)))
    print("expected set trussness:",
          " ".join(map(str, res.expected_set_trussness())))
    print("expected element trussness:", res.expected_element_trussness())
    return 0


def _cmd_stats(args) -> int:
    g = load_edge_list(args.file)
    labeling = truss_decompose(g)
    sizes = [upward_route_size(g, labeling, e) for e in range(g.m)]
    tree = build_tree(g, labeling)
    hist = Counter(labeling.t)
    total = sum(sizes)
    payload = {
        "n": g.n,
        "m": g.m,
        "k_max": labeling.k_max,
        "hull_histogram": {str(k): hist[k] for k in sorted(hist)},
        "route_size": {
            "min": min(sizes) if sizes else 0,
            "max": max(sizes) if sizes else 0,
            "sum": total,
            "avg": round(total / g.m, 4) if g.m else 0.0,
        },
        "tree": tree.dump(),
    }
    text = json.dumps(payload, indent=2)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.json}")
    else:
        print(text)
    return 0


def _cmd_sample(args) -> int:
    g = load_edge_list(args.file)
    sg = subgraph_sample(g, args.mode, ratio=args.ratio, seed=args.seed,
                         min_edges=args.min_edges, max_edges=args.max_edges)
    lines = [f"{a} {b}" for a, b in (sg.label_pair(e) for e in range(sg.m))]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
        print(f"wrote {args.out} (n={sg.n} m={sg.m})")
    else:
        print("\n".join(lines))
    return 0


def _cmd_experiment(args) -> int:
    with open(args.config, encoding="utf-8") as fh:
        raw = json.load(fh)
    raw["strategies"] = tuple(raw.get("strategies", ("base",)))
    raw["budgets"] = tuple(raw.get("budgets", ()))
    spec = ExperimentSpec(**raw)
    summary = run_experiment(spec)
    print(f"wrote reports under {summary['out_dir']}")
    for row in summary["rows"]:
        print("  ", row)
    for skip in summary["skipped"]:
        print("  skipped:", skip)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="trussanchor",
        description="Truss decomposition and anchor selection toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="trussness and layer labeling")
    p.add_argument("file")
    p.add_argument("--csv", help="write per-edge labels to this file")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("anchor", help="select anchor edges")
    p.add_argument("file")
    p.add_argument("--strategy", choices=STRATEGIES, default="gas")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--es-mode", choices=("safe", "minimal"), default="safe")
    p.add_argument("--cap", type=int, default=3_000_000)
    p.set_defaults(fn=_cmd_anchor)

    p = sub.add_parser("gadget", help="emit a planted coverage instance")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--membership", help="JSON file: list of element lists")
    p.add_argument("--out", help="write edge list here")
    p.set_defaults(fn=_cmd_gadget)

    p = sub.add_parser("stats", help="route sizes, hulls, component tree")
    p.add_argument("file")
    p.add_argument("--json", help="write the report to this file")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("sample", help="sample a subgraph")
    p.add_argument("file")
    p.add_argument("--mode", choices=("vertex", "edge", "ball"),
                   required=True)
    p.add_argument("--ratio", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-edges", type=int, default=150)
    p.add_argument("--max-edges", type=int, default=250)
    p.add_argument("--out", help="write the sampled edge list here")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("experiment", help="run a sweep from a JSON spec")
    p.add_argument("--config", required=True)
    p.set_defaults(fn=_cmd_experiment)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
