"""Anchor selection strategies: greedy variants, exhaustive, and random pools."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import fastpeel
from .decomposition import (anchored_truss_decompose, truss_decompose,
                            trussness_gain)
from .followers import get_followers, upward_route_size
from .graph import Graph, support
from .tree import ReuseLedger, build_tree, classify_reuse, follower_reuse

STRATEGIES = ("base", "base+", "gas", "exact", "rand", "sup", "tur")


class EnumerationCapError(RuntimeError):
    """Exhaustive search would exceed the configured combination cap."""


@dataclass(frozen=True)
class StrategyConfig:
    strategy: str = "gas"
    budget: int = 1
    seed: int = 0
    trials: int = 1
    top_fraction: float = 0.2
    es_mode: str = "safe"
    exact_cap: int = 3_000_000
    use_kernel: bool | None = None

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not 0 < self.top_fraction <= 1:
            raise ValueError("top_fraction must be in (0, 1]")


@dataclass(frozen=True)
class SelectionResult:
    strategy: str
    anchors: tuple[int, ...]
    per_round_gain: tuple[int, ...]
    total_gain: int
    per_round_wall: tuple[float, ...]
    meta: dict = field(default_factory=dict)


def _check_budget(g: Graph, b: int) -> None:
    if not 1 <= b <= g.m:
        raise ValueError(f"budget {b} outside 1..{g.m}")


def _want_kernel(flag: bool | None) -> bool:
    return fastpeel.HAVE_NUMBA if flag is None else flag


def _better(gain: int, risen: bool, best_gain: int, best_risen: bool) -> bool:
    """Scanning ids ascending: strictly more gain wins; at equal gain an
    edge that has not already risen beats one that has (anchoring a risen
    edge forfeits its counted gain)."""
    if gain != best_gain:
        return gain > best_gain
    return best_risen and not risen


def select_base(g: Graph, b: int, *, use_kernel: bool | None = None) -> SelectionResult:
    """Greedy by exact marginal gain, one full re-peel per candidate."""
    _check_budget(g, b)
    use = _want_kernel(use_kernel)
    kern = fastpeel.PeelKernel(g) if use else None
    if kern is not None:
        t_base = kern.base_t.copy()
        t_cur = t_base.copy()
    else:
        t_base = list(truss_decompose(g).t)
        t_cur = list(t_base)
    aset: set[int] = set()
    anchors: list[int] = []
    gains: list[int] = []
    walls: list[float] = []
    for _rnd in range(b):
        t0 = time.perf_counter()
        best_e = -1
        best_gain = -1
        best_risen = True
        best_t = None
        if kern is not None:
            mask_round = np.zeros(g.m, np.bool_)
            for a in aset:
                mask_round[a] = True
        for e in range(g.m):
            if e in aset:
                continue
            trial = aset | {e}
            if kern is not None:
                t_new = kern.t_array(trial)
                mask = mask_round.copy()
                mask[e] = True
                gain = int(np.sum(t_new[~mask] - t_cur[~mask]))
            else:
                st = anchored_truss_decompose(g, frozenset(trial))
                t_new = st.labeling.t
                gain = sum(t_new[f] - t_cur[f]
                           for f in range(g.m) if f not in trial)
            risen = t_cur[e] > t_base[e]
            if _better(gain, risen, best_gain, best_risen):
                best_gain, best_e, best_risen, best_t = gain, e, risen, t_new
        aset.add(best_e)
        anchors.append(best_e)
        t_cur = best_t
        gains.append(best_gain)
        walls.append(time.perf_counter() - t0)
    total = trussness_gain(g, frozenset(anchors))
    return SelectionResult("base", tuple(anchors), tuple(gains), total,
                           tuple(walls), {"use_kernel": use})


def select_base_plus(g: Graph, b: int) -> SelectionResult:
    """Greedy by follower count, one targeted search per candidate."""
    _check_budget(g, b)
    t_base = truss_decompose(g).t
    aset: set[int] = set()
    anchors: list[int] = []
    gains: list[int] = []
    walls: list[float] = []
    for _rnd in range(b):
        t0 = time.perf_counter()
        afro = frozenset(aset)
        labeling = anchored_truss_decompose(g, afro).labeling
        best_e = -1
        best_gain = -1
        best_risen = True
        for e in range(g.m):
            if e in aset:
                continue
            fs = get_followers(g, labeling, e, anchors=afro)
            gain = len(fs.followers)
            risen = labeling.t[e] > t_base[e]
            if _better(gain, risen, best_gain, best_risen):
                best_gain, best_e, best_risen = gain, e, risen
        aset.add(best_e)
        anchors.append(best_e)
        gains.append(best_gain)
        walls.append(time.perf_counter() - t0)
    total = trussness_gain(g, frozenset(anchors))
    return SelectionResult("base+", tuple(anchors), tuple(gains), total,
                           tuple(walls), {})


def select_gas(g: Graph, b: int, *, es_mode: str = "safe") -> SelectionResult:
    """Greedy by follower count with cross-round reuse of per-node results."""
    _check_budget(g, b)
    labeling = truss_decompose(g)
    t_base = list(labeling.t)
    tree = build_tree(g, labeling)
    ledger = ReuseLedger(tree, es_mode=es_mode)
    aset: set[int] = set()
    anchors: list[int] = []
    gains: list[int] = []
    walls: list[float] = []
    reuse_rounds: list[dict[str, int]] = []
    for _rnd in range(b):
        t0 = time.perf_counter()
        afro = frozenset(aset)
        counts = {"FR": 0, "PR": 0, "NR": 0}
        best_e = -1
        best_gain = -1
        best_risen = True
        best_fol: frozenset[int] = frozenset()
        best_pn: dict[int, frozenset[int]] = {}
        for e in range(g.m):
            if e in aset:
                continue
            counts[classify_reuse(ledger, e)] += 1
            fol, pn = ledger.evaluate(g, labeling, e, afro)
            risen = labeling.t[e] > t_base[e]
            if _better(len(fol), risen, best_gain, best_risen):
                best_gain, best_e, best_risen = len(fol), e, risen
                best_fol, best_pn = fol, pn
        aset.add(best_e)
        anchors.append(best_e)
        update = follower_reuse(g, tree, labeling, best_e, frozenset(aset),
                                followers=best_fol, followers_per_node=best_pn,
                                es_mode=es_mode)
        ledger.apply(update)
        gains.append(best_gain)
        walls.append(time.perf_counter() - t0)
        reuse_rounds.append(counts)
    total = trussness_gain(g, frozenset(anchors))
    return SelectionResult("gas", tuple(anchors), tuple(gains), total,
                           tuple(walls),
                           {"reuse_rounds": reuse_rounds, "es_mode": es_mode})


def select_exact(g: Graph, b: int, *, cap: int = 3_000_000,
                 use_kernel: bool | None = None) -> SelectionResult:
    """Best anchor set by full enumeration; ties go to the lexicographically
    smallest id tuple. Refuses to start above the combination cap."""
    _check_budget(g, b)
    n_combos = math.comb(g.m, b)
    if n_combos > cap:
        raise EnumerationCapError(
            f"{n_combos} candidate sets exceed cap {cap}")
    use = _want_kernel(use_kernel)
    t0 = time.perf_counter()
    if use and 1 <= b <= 3:
        kern = fastpeel.PeelKernel(g)
        best_gain, combo = kern.exact_best(b)
    else:
        kern = fastpeel.PeelKernel(g) if use else None
        base = truss_decompose(g)
        best_gain = -1
        combo = None
        for cand in combinations(range(g.m), b):
            if kern is not None:
                gain = kern.gain(cand)
            else:
                gain = trussness_gain(g, frozenset(cand), base=base)
            if gain > best_gain:
                best_gain, combo = gain, cand
    wall = time.perf_counter() - t0
    total = trussness_gain(g, frozenset(combo))
    return SelectionResult("exact", tuple(combo), (best_gain,), total,
                           (wall,), {"combinations": n_combos,
                                     "use_kernel": use})


def _random_pool(g: Graph, config: StrategyConfig) -> list[int]:
    if config.strategy == "rand":
        return list(range(g.m))
    size = math.ceil(config.top_fraction * g.m)
    if config.strategy == "sup":
        ranked = sorted(range(g.m), key=lambda e: (-support(g, e), e))
    else:  # tur
        labeling = truss_decompose(g)
        ranked = sorted(range(g.m),
                        key=lambda e: (-upward_route_size(g, labeling, e), e))
    return ranked[:size]


def select_random(g: Graph, config: StrategyConfig) -> SelectionResult:
    """Best of `trials` random size-b draws from the configured pool:
    all edges (rand), top support slice (sup), or top route-size slice (tur)."""
    b = config.budget
    _check_budget(g, b)
    pool = _random_pool(g, config)
    if b > len(pool):
        raise ValueError(f"budget {b} exceeds pool of {len(pool)}")
    rng = random.Random(config.seed)
    use = _want_kernel(config.use_kernel)
    kern = fastpeel.PeelKernel(g) if use else None
    base = None if kern is not None else truss_decompose(g)
    t0 = time.perf_counter()
    best_gain = -1
    best: tuple[int, ...] = ()
    for _trial in range(config.trials):
        cand = tuple(sorted(rng.sample(pool, b)))
        if kern is not None:
            gain = kern.gain(cand)
        else:
            gain = trussness_gain(g, frozenset(cand), base=base)
        if gain > best_gain:
            best_gain, best = gain, cand
    wall = time.perf_counter() - t0
    total = trussness_gain(g, frozenset(best))
    return SelectionResult(config.strategy, best, (best_gain,), total,
                           (wall,), {"trials": config.trials,
                                     "pool_size": len(pool),
                                     "seed": config.seed})


def run_strategy(g: Graph, config: StrategyConfig) -> SelectionResult:
    s = config.strategy
    if s == "base":
        return select_base(g, config.budget, use_kernel=config.use_kernel)
    if s == "base+":
        return select_base_plus(g, config.budget)
    if s == "gas":
        return select_gas(g, config.budget, es_mode=config.es_mode)
    if s == "exact":
        return select_exact(g, config.budget, cap=config.exact_cap,
                            use_kernel=config.use_kernel)
    return select_random(g, config)
