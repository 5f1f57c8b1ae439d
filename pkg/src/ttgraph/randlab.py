"""Seeded random-graph experiments for graph predicates.

Trials use child generators derived from (seed, trial index), so results
do not depend on execution order and are reproducible across platforms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .graphs import Digraph, undirected
from .groups import Cyclic
from .homs import SearchBudgetExceeded, is_nice
from .ttmaps import is_tt_rigid

_MIX = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def _child_seed(seed: int, trial: int) -> int:
    x = (seed * _MIX + trial * 0xBF58476D1CE4E5B9 + 0x94D049BB133111EB) & _MASK
    x ^= x >> 31
    return x


def sample_gnp(n: int, p: float, seed: int) -> Digraph:
    """Undirected G(n,p): each pair is an edge independently with
    probability p; identical output for identical (n, p, seed)."""
    if n < 0:
        raise ValueError("need n >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("need 0 <= p <= 1")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return undirected(f"gnp({n},{p},{seed})", n, edges)


PREDICATES = ("nice", "tt-rigid-bounded")


@dataclass(frozen=True)
class Experiment:
    n: int
    p: float
    trials: int
    seed: int
    predicate: str
    per_trial_budget: int = 500_000

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("need 0 <= p <= 1")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.predicate not in PREDICATES:
            raise ValueError(f"unknown predicate {self.predicate!r}")


@dataclass
class FractionEstimate:
    experiment: Experiment
    hits: int
    misses: int
    unknown: int
    fraction: float
    ci_low: float
    ci_high: float
    failure_witnesses: list[str] = field(default_factory=list)

    @property
    def decided(self) -> int:
        return self.hits + self.misses


def wilson_interval(hits: int, total: int, z: float = 1.96) -> tuple[float, float]:
    if total == 0:
        return (0.0, 1.0)
    phat = hits / total
    denom = 1 + z * z / total
    center = (phat + z * z / (2 * total)) / denom
    half = z * math.sqrt(phat * (1 - phat) / total + z * z / (4 * total * total)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


def estimate_fraction(exp: Experiment, max_witnesses: int = 10) -> FractionEstimate:
    """Run the predicate over seeded samples.  Budget overruns count as
    unknown, never as hits or misses."""
    hits = misses = unknown = 0
    witnesses: list[str] = []
    for trial in range(exp.trials):
        g = sample_gnp(exp.n, exp.p, _child_seed(exp.seed, trial))
        verdict: Optional[bool]
        if exp.predicate == "nice":
            verdict = is_nice(g).ok
        else:
            try:
                verdict = is_tt_rigid(g, Cyclic(2), budget=exp.per_trial_budget)
            except SearchBudgetExceeded:
                verdict = None
        if verdict is None:
            unknown += 1
        elif verdict:
            hits += 1
        else:
            misses += 1
            if len(witnesses) < max_witnesses:
                witnesses.append(g.to_edge_list_text())
    decided = hits + misses
    fraction = hits / decided if decided else 0.0
    lo, hi = wilson_interval(hits, decided)
    return FractionEstimate(exp, hits, misses, unknown, fraction, lo, hi, witnesses)
