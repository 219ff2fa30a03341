"""Sequential node-removal attacks with a metrics snapshot per step.

Three strategies: ``adaptive-degree`` re-ranks nodes after every removal
(the automated protocol), ``static-degree`` removes a ranking fixed on the
initial graph (the manual protocol), and ``random`` models plain failures.
Step 0 of every trace is the untouched pre-attack snapshot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .centrality import MEASURES, centrality_scores, top_k
from .errors import DegenerateGraphError
from .graph import DirectedGraph
from .metrics import MetricsSnapshot, compute_snapshot

ADAPTIVE_DEGREE = "adaptive-degree"
STATIC_DEGREE = "static-degree"
RANDOM = "random"
STRATEGY_KINDS = (ADAPTIVE_DEGREE, STATIC_DEGREE, RANDOM)

DEFAULT_TRACE_METRICS = ("density", "apl")


@dataclass(frozen=True)
class AttackStrategy:
    """How victims are chosen: strategy kind, ranking measure, RNG seed.

    The seed is required for (and only used by) the random kind.
    """

    kind: str
    measure: str = "total-degree"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in STRATEGY_KINDS:
            raise ValueError(f"kind must be one of {STRATEGY_KINDS}, got {self.kind!r}")
        if self.measure not in MEASURES:
            raise ValueError(f"measure must be one of {MEASURES}, got {self.measure!r}")
        if self.kind == RANDOM and self.seed is None:
            raise ValueError("random strategy requires a seed")


@dataclass(frozen=True)
class PercolationStep:
    """One trace entry; ``removed_degree`` is the total degree the node had
    at removal time, so m always drops by exactly that amount."""

    index: int
    removed: str | None
    removed_degree: int
    snapshot: MetricsSnapshot


@dataclass(frozen=True)
class PercolationTrace:
    strategy: AttackStrategy
    steps: tuple[PercolationStep, ...]


def static_target_list(graph: DirectedGraph, measure: str, k: int) -> list[str]:
    """Top-k removal order computed once on the initial graph."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > graph.n:
        raise ValueError(f"k={k} exceeds node count n={graph.n}")
    if k == 0:
        return []
    return [label for label, _ in top_k(centrality_scores(graph, measure), k)]


def run_attack(
    graph: DirectedGraph,
    strategy: AttackStrategy,
    steps: int,
    metrics: Iterable[str] = DEFAULT_TRACE_METRICS,
) -> PercolationTrace:
    """Remove ``steps`` nodes under ``strategy``, snapshotting after each.

    Requested metrics must stay valid on every intermediate graph; apl is
    the exception and is recorded as absent once nothing is reachable.
    """
    if graph.n == 0:
        raise DegenerateGraphError("cannot attack an empty graph")
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    if steps >= graph.n:
        raise ValueError(f"steps={steps} must be smaller than node count n={graph.n}")
    metrics = tuple(metrics)

    victims: list[str] = []
    if strategy.kind == STATIC_DEGREE:
        victims = static_target_list(graph, strategy.measure, steps)
    rng = np.random.default_rng(strategy.seed) if strategy.kind == RANDOM else None

    current = graph
    trace = [PercolationStep(0, None, 0, compute_snapshot(current, metrics))]
    for t in range(1, steps + 1):
        if strategy.kind == ADAPTIVE_DEGREE:
            victim = top_k(centrality_scores(current, strategy.measure), 1)[0][0]
        elif strategy.kind == STATIC_DEGREE:
            victim = victims[t - 1]
        else:
            remaining = current.node_order
            victim = remaining[int(rng.integers(len(remaining)))]
        current, removed_in, removed_out = current.remove_node(victim)
        trace.append(
            PercolationStep(t, victim, removed_in + removed_out, compute_snapshot(current, metrics))
        )
    return PercolationTrace(strategy=strategy, steps=tuple(trace))


@dataclass(frozen=True)
class StepDelta:
    index: int
    density_delta: float | None
    apl_delta: float | None


@dataclass(frozen=True)
class TraceComparison:
    steps: tuple[StepDelta, ...]
    max_abs_density_delta: float | None
    max_abs_apl_delta: float | None


def compare_traces(a: PercolationTrace, b: PercolationTrace) -> TraceComparison:
    """Elementwise density/apl differences (a minus b) plus max-|delta| summary."""
    if len(a.steps) != len(b.steps):
        raise ValueError(f"trace lengths differ: {len(a.steps)} vs {len(b.steps)}")

    def diff(x: float | None, y: float | None) -> float | None:
        if x is None or y is None:
            return None
        return x - y

    deltas = tuple(
        StepDelta(
            index=sa.index,
            density_delta=diff(sa.snapshot.density, sb.snapshot.density),
            apl_delta=diff(sa.snapshot.apl, sb.snapshot.apl),
        )
        for sa, sb in zip(a.steps, b.steps)
    )
    dens = [abs(d.density_delta) for d in deltas if d.density_delta is not None]
    apls = [abs(d.apl_delta) for d in deltas if d.apl_delta is not None]
    return TraceComparison(
        steps=deltas,
        max_abs_density_delta=max(dens) if dens else None,
        max_abs_apl_delta=max(apls) if apls else None,
    )


def trace_from_counts(
    n: int,
    m: int,
    removals: Sequence[tuple[str, int]] | Sequence[int],
    strategy: AttackStrategy | None = None,
) -> PercolationTrace:
    """Closed-form density bookkeeping from counts alone.

    Builds the trace a degree-targeted attack would record, given only the
    starting (n, m) and the total degree of each removed node: after step t,
    n drops by one and m by the removed degree, so density is
    (m - sum of degrees) / ((n-t) * (n-t-1)).  Useful for replaying reported
    removal trajectories without the underlying edge list.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if len(removals) >= n - 1:
        raise ValueError("too many removals: density needs at least 2 surviving nodes")
    pairs: list[tuple[str, int]] = []
    for i, item in enumerate(removals):
        if isinstance(item, tuple):
            label, degree = item
        else:
            label, degree = f"removed-{i + 1}", int(item)
        pairs.append((label, int(degree)))

    if strategy is None:
        strategy = AttackStrategy(STATIC_DEGREE)
    steps = [PercolationStep(0, None, 0, MetricsSnapshot(n=n, m=m, density=m / (n * (n - 1))))]
    cur_n, cur_m = n, m
    for t, (label, degree) in enumerate(pairs, start=1):
        cur_n -= 1
        cur_m -= degree
        if cur_m < 0:
            raise ValueError(f"removed degree {degree} exceeds remaining edges at step {t}")
        snapshot = MetricsSnapshot(n=cur_n, m=cur_m, density=cur_m / (cur_n * (cur_n - 1)))
        steps.append(PercolationStep(t, label, degree, snapshot))
    return PercolationTrace(strategy=strategy, steps=tuple(steps))
