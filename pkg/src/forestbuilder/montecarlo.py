"""Seeded Monte Carlo estimation of process statistics.

Every estimator derives one SplitMix64 stream per trial from (seed, index
path), so trials are independent, reproducible, and could be evaluated in
any order or in parallel with identical aggregate results; counts are
aggregated as exact integers before any division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import EmptyGraph, InfeasibleSpec, ParameterOutOfRange
from .families import gnm_random_graph, random_regular_graph
from .graphs import CHEEGER_VERTEX_CAP, Graph, cheeger_constant
from .rng import SplitMix64, derive_seed


@dataclass(frozen=True)
class EstimatedDistribution:
    """Empirical law of the component count over seeded trials."""

    trials: int
    counts: dict[int, int]
    mean_kappa: float
    stderr_kappa: float
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "counts": {str(k): self.counts[k] for k in sorted(self.counts)},
            "mean_kappa": self.mean_kappa,
            "stderr_kappa": self.stderr_kappa,
        }


def _trial_kappa(edges: tuple[tuple[int, int], ...], n: int, rng: SplitMix64) -> int:
    """One process run under a fresh uniform ordering."""
    order = list(range(len(edges)))
    rng.shuffle(order)
    touched = [False] * n
    kappa = 0
    for eid in order:
        u, v = edges[eid]
        if touched[u]:
            if not touched[v]:
                touched[v] = True
        elif touched[v]:
            touched[u] = True
        else:
            touched[u] = touched[v] = True
            kappa += 1
    return kappa


def _moments(counts: dict[int, int], trials: int) -> tuple[float, float]:
    mean = sum(k * c for k, c in counts.items()) / trials
    second = sum(k * k * c for k, c in counts.items()) / trials
    variance = max(second - mean * mean, 0.0)
    return mean, math.sqrt(variance / trials)


def estimate_distribution(g: Graph, trials: int, seed: int) -> EstimatedDistribution:
    """Empirical component-count distribution from `trials` seeded orderings."""
    if g.m == 0:
        raise EmptyGraph("estimation needs at least one edge")
    if trials < 1:
        raise ParameterOutOfRange("needs trials >= 1")
    counts: dict[int, int] = {}
    for t in range(trials):
        kappa = _trial_kappa(g.edges, g.n, SplitMix64(derive_seed(seed, t)))
        counts[kappa] = counts.get(kappa, 0) + 1
    mean, stderr = _moments(counts, trials)
    return EstimatedDistribution(trials, counts, mean, stderr, seed)


def estimate_gnm_expectation(
    n: int, m: int, graph_samples: int, orderings_per_graph: int, seed: int
) -> tuple[float, float]:
    """Estimate E(kappa) over uniform G(n,m) graphs and uniform orderings.

    Each graph draw gets `orderings_per_graph` process runs; the plug-in
    standard error treats all runs as one pooled sample.
    """
    if n < 2 or graph_samples < 1 or orderings_per_graph < 1:
        raise ParameterOutOfRange("needs n >= 2 and positive sample counts")
    if not 1 <= m <= comb(n, 2):
        raise ParameterOutOfRange(f"needs 1 <= m <= {comb(n, 2)}")
    counts: dict[int, int] = {}
    for i in range(graph_samples):
        g = gnm_random_graph(n, m, derive_seed(seed, i, 0))
        for j in range(orderings_per_graph):
            kappa = _trial_kappa(g.edges, g.n, SplitMix64(derive_seed(seed, i, j + 1)))
            counts[kappa] = counts.get(kappa, 0) + 1
    return _moments(counts, graph_samples * orderings_per_graph)


@dataclass(frozen=True)
class DecayRow:
    """One row of the regular-graph one-component decay experiment."""

    n: int
    p1_hat: float
    neg_log_p1_over_n: float
    cheeger: Fraction | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p1_hat": self.p1_hat,
            "neg_log_p1_over_n": self.neg_log_p1_over_n,
            "cheeger": None if self.cheeger is None else
            f"{self.cheeger.numerator}/{self.cheeger.denominator}",
        }


def single_component_decay(
    d: int, n_values: list[int], trials: int, seed: int
) -> list[DecayRow]:
    """Estimate P(G,1) for one random d-regular graph per n.

    Reports -log(p1_hat)/n per row (the exponential decay rate scale) and
    the exact Cheeger constant whenever n is within the exhaustive cap.
    """
    if trials < 1:
        raise ParameterOutOfRange("needs trials >= 1")
    for n in n_values:
        if d >= n or (n * d) % 2 == 1:
            raise InfeasibleSpec(f"no simple {d}-regular graph on {n} vertices")
    rows = []
    for idx, n in enumerate(n_values):
        g = random_regular_graph(n, d, derive_seed(seed, idx))
        ones = 0
        for t in range(trials):
            kappa = _trial_kappa(g.edges, g.n, SplitMix64(derive_seed(seed, idx, t + 1)))
            if kappa == 1:
                ones += 1
        p1 = ones / trials
        rate = -math.log(p1) / n if p1 > 0 else math.inf
        cheeger = cheeger_constant(g) if n <= CHEEGER_VERTEX_CAP else None
        rows.append(DecayRow(n, p1, rate, cheeger))
    return rows


def decay_rows_to_csv(rows: list[DecayRow]) -> str:
    lines = ["n,p1_hat,neg_log_p1_over_n,cheeger"]
    for row in rows:
        cheeger = "" if row.cheeger is None else (
            f"{row.cheeger.numerator}/{row.cheeger.denominator}"
        )
        lines.append(f"{row.n},{row.p1_hat!r},{row.neg_log_p1_over_n!r},{cheeger}")
    return "\n".join(lines) + "\n"
