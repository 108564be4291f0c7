"""Experiment harness: strategy sweeps with CSV/JSON reports."""

from __future__ import annotations

import csv
import json
import platform
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from . import fastpeel
from .decomposition import truss_decompose
from .followers import upward_route_size
from .generators import (GadgetSpec, generate_gadget, gnm_random_graph,
                         planted_clique_graph, powerlaw_cluster_graph)
from .graph import Graph, load_edge_list
from .sampling import subgraph_sample
from .selection import (EnumerationCapError, StrategyConfig, STRATEGIES,
                        run_strategy, select_exact, select_gas)


@dataclass(frozen=True)
class ExperimentSpec:
    name: str = "experiment"
    dataset: str | None = None
    generator: dict | None = None
    strategies: tuple[str, ...] = ("base",)
    budgets: tuple[int, ...] = ()
    trials: int = 1
    seed: int = 0
    out_dir: str = "runs"
    exact_cap: int = 3_000_000
    es_mode: str = "safe"
    route_summary: bool = False
    reuse_histogram: bool = False
    exact_ratio: dict | None = None

    def __post_init__(self) -> None:
        if (self.dataset is None) == (self.generator is None):
            raise ValueError("give exactly one of dataset or generator")
        object.__setattr__(self, "strategies", tuple(self.strategies))
        object.__setattr__(self, "budgets", tuple(self.budgets))
        for s in self.strategies:
            if s not in STRATEGIES:
                raise ValueError(f"unknown strategy {s!r}")
        bs = self.budgets
        if list(bs) != sorted(set(bs)) or any(b < 1 for b in bs):
            raise ValueError("budgets must be ascending positive ints")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def _load_graph(spec: ExperimentSpec) -> Graph:
    if spec.dataset is not None:
        return load_edge_list(spec.dataset)
    gen = dict(spec.generator or {})
    kind = gen.pop("kind", None)
    if kind == "gnm":
        return gnm_random_graph(**gen)
    if kind == "planted":
        return planted_clique_graph(**gen)
    if kind == "powerlaw":
        return powerlaw_cluster_graph(**gen)
    if kind == "gadget":
        return generate_gadget(GadgetSpec(**gen)).graph
    raise ValueError(f"unknown generator kind {kind!r}")


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def run_experiment(spec: ExperimentSpec) -> dict:
    """Run the sweep and write runs.csv plus any requested side reports
    under out_dir/name. An infeasible exhaustive request is reported as
    skipped, not fatal. Returns a summary dict mirroring the files."""
    out = Path(spec.out_dir) / spec.name
    out.mkdir(parents=True, exist_ok=True)
    g = _load_graph(spec)
    t_start = time.perf_counter()
    rows: list[list] = []
    results = []
    skipped: list[dict] = []
    gas_meta = None
    for strategy in spec.strategies:
        for b in spec.budgets:
            config = StrategyConfig(strategy=strategy, budget=b,
                                    seed=spec.seed, trials=spec.trials,
                                    es_mode=spec.es_mode,
                                    exact_cap=spec.exact_cap)
            try:
                res = run_strategy(g, config)
            except EnumerationCapError as exc:
                skipped.append({"strategy": strategy, "budget": b,
                                "reason": str(exc)})
                continue
            rows.append([strategy, b, res.total_gain,
                         round(sum(res.per_round_wall), 6),
                         " ".join(map(str, res.anchors))])
            results.append(res)
            if strategy == "gas":
                gas_meta = res.meta
    _write_csv(out / "runs.csv",
               ["strategy", "budget", "gain", "wall_seconds", "anchors"], rows)
    summary: dict = {"out_dir": str(out), "n": g.n, "m": g.m,
                     "rows": rows, "skipped": skipped}
    if spec.route_summary:
        labeling = truss_decompose(g)
        sizes = [upward_route_size(g, labeling, e) for e in range(g.m)]
        total = sum(sizes)
        stats = [min(sizes or [0]), max(sizes or [0]), total,
                 round(total / g.m, 4) if g.m else 0.0]
        _write_csv(out / "route_summary.csv",
                   ["min", "max", "sum", "avg"], [stats])
        summary["route_summary"] = dict(zip(("min", "max", "sum", "avg"),
                                            stats))
    if spec.reuse_histogram:
        if gas_meta is None:
            skipped.append({"strategy": "gas", "budget": None,
                            "reason": "reuse histogram needs a gas run"})
        else:
            hist_rows = [[i + 1, c["FR"], c["PR"], c["NR"]]
                         for i, c in enumerate(gas_meta["reuse_rounds"])]
            _write_csv(out / "reuse_histogram.csv",
                       ["round", "FR", "PR", "NR"], hist_rows)
            summary["reuse_histogram"] = hist_rows
    if spec.exact_ratio is not None:
        cfg = {"samples": 20, "budgets": (1, 2, 3), "mode": "ball",
               "min_edges": 150, "max_edges": 250}
        cfg.update(spec.exact_ratio)
        ratio_rows: list[list] = []
        for i in range(cfg["samples"]):
            sg = subgraph_sample(g, cfg["mode"], seed=spec.seed + i,
                                 min_edges=cfg["min_edges"],
                                 max_edges=cfg["max_edges"])
            for b in cfg["budgets"]:
                try:
                    ex = select_exact(sg, b, cap=spec.exact_cap)
                except EnumerationCapError as exc:
                    skipped.append({"strategy": "exact", "budget": b,
                                    "sample": i, "reason": str(exc)})
                    continue
                gs = select_gas(sg, b, es_mode=spec.es_mode)
                ratio = 1.0 if ex.total_gain == 0 else (
                    gs.total_gain / ex.total_gain)
                ratio_rows.append([i, b, ex.total_gain, gs.total_gain,
                                   round(ratio, 4)])
        _write_csv(out / "exact_ratio.csv",
                   ["sample", "budget", "exact_gain", "gas_gain", "ratio"],
                   ratio_rows)
        summary["exact_ratio"] = ratio_rows
    meta = {
        "spec": asdict(spec),
        "n": g.n,
        "m": g.m,
        "platform": platform.platform(),
        "python": platform.python_version(),
        "numba": fastpeel.HAVE_NUMBA,
        "wall_seconds": round(time.perf_counter() - t_start, 3),
        "skipped": skipped,
    }
    with open(out / "meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, default=str)
    summary["meta"] = meta
    return summary
