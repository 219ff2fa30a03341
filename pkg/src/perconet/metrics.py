"""Whole-graph structural metrics.

Conventions pinned here:

* density is m / (n*(n-1)), the directed loop-free maximum;
* average path length is the mean directed hop count over exactly the
  reachable ordered pairs -- unreachable pairs are excluded, not infinite;
* transitivity is the global clustering coefficient of the undirected
  skeleton (directions and reciprocal arcs collapsed);
* degree centralization is Freeman's index with normalizer 2*(n-1)^2 for
  total degree and (n-1)^2 for in- or out-degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from . import _sweep
from .errors import DegenerateGraphError, NoFinitePathsError
from .graph import DirectedGraph

DEGREE_MODES = ("in", "out", "total")

#: Metric names accepted by :func:`compute_snapshot` and the attack engine.
METRIC_CHOICES = ("density", "apl", "transitivity", "centralization", "components")


def float9(value: float | None) -> float | None:
    """Round to 9 significant digits, the canonical output precision."""
    if value is None:
        return None
    return float(format(value, ".9g"))


@dataclass(frozen=True)
class MetricsSnapshot:
    """One structural reading of a graph; unrequested fields stay None.

    ``apl`` is also None when no ordered pair is reachable (the mean is
    undefined, not zero or infinite).
    """

    n: int
    m: int
    density: float | None = None
    apl: float | None = None
    transitivity: float | None = None
    centralization_total: float | None = None
    largest_wcc: int | None = None
    largest_scc: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "density": float9(self.density),
            "apl": float9(self.apl),
            "transitivity": float9(self.transitivity),
            "centralization_total": float9(self.centralization_total),
            "largest_wcc": self.largest_wcc,
            "largest_scc": self.largest_scc,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class ComponentSummary(NamedTuple):
    largest_wcc: int
    largest_scc: int
    wcc_count: int
    scc_count: int


def density(graph: DirectedGraph) -> float:
    """Fraction of possible directed edges present: m / (n*(n-1))."""
    if graph.n < 2:
        raise DegenerateGraphError(f"density needs at least 2 nodes, got n={graph.n}")
    return graph.m / (graph.n * (graph.n - 1))


def hop_census(graph: DirectedGraph) -> tuple[int, int]:
    """Exact (total hops, reachable ordered pairs) over all u != v.

    The ratio of the two integers is the average path length; exposing them
    separately lets callers compare against an independent all-pairs oracle
    without floating-point slack.
    """
    labels, src, dst = graph.edge_index()
    return _sweep.hop_census(len(labels), src, dst)


def average_path_length(graph: DirectedGraph) -> float:
    """Mean directed shortest-path hops over reachable ordered pairs."""
    total, pairs = hop_census(graph)
    if pairs == 0:
        raise NoFinitePathsError("no ordered pair is connected by a directed path")
    return total / pairs


def _undirected_csr(graph: DirectedGraph) -> sp.csr_matrix:
    labels, src, dst = graph.edge_index()
    n = len(labels)
    lo = np.minimum(src, dst)
    hi = np.maximum(src, dst)
    codes = np.unique(lo * n + hi)
    u = codes // n
    v = codes % n
    rows = np.concatenate([u, v])
    cols = np.concatenate([v, u])
    return sp.csr_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(n, n))


def transitivity(graph: DirectedGraph) -> float:
    """Global clustering of the undirected skeleton.

    3 * triangles / connected triples (length-2 paths); 0.0 when the graph
    has no connected triples at all.
    """
    if graph.n < 3:
        raise DegenerateGraphError(f"transitivity needs at least 3 nodes, got n={graph.n}")
    if graph.m == 0:
        return 0.0
    skel = _undirected_csr(graph)
    deg = np.asarray(skel.sum(axis=1)).ravel()
    triples = int((deg * (deg - 1) // 2).sum())
    if triples == 0:
        return 0.0
    # sum over ordered adjacent pairs of common-neighbor counts = 6 * triangles
    closed = int((skel @ skel).multiply(skel).sum())
    return (closed / 2) / triples


def degree_arrays(graph: DirectedGraph) -> tuple[np.ndarray, np.ndarray]:
    """(in-degree, out-degree) arrays aligned with ``graph.node_order``."""
    labels, src, dst = graph.edge_index()
    n = len(labels)
    out_deg = np.bincount(src, minlength=n)
    in_deg = np.bincount(dst, minlength=n)
    return in_deg, out_deg


def degree_centralization(graph: DirectedGraph, mode: str = "total") -> float:
    """Freeman degree centralization in [0, 1]; 0 iff degree-regular."""
    if mode not in DEGREE_MODES:
        raise ValueError(f"mode must be one of {DEGREE_MODES}, got {mode!r}")
    n = graph.n
    if n < 3:
        raise DegenerateGraphError(f"centralization needs at least 3 nodes, got n={n}")
    in_deg, out_deg = degree_arrays(graph)
    if mode == "in":
        deg = in_deg
        norm = (n - 1) ** 2
    elif mode == "out":
        deg = out_deg
        norm = (n - 1) ** 2
    else:
        deg = in_deg + out_deg
        norm = 2 * (n - 1) ** 2
    gaps = int(deg.max()) * n - int(deg.sum())
    return gaps / norm


def component_summary(graph: DirectedGraph) -> ComponentSummary:
    """Sizes and counts of weakly and strongly connected components."""
    if graph.n == 0:
        raise DegenerateGraphError("component summary needs at least one node")
    labels, src, dst = graph.edge_index()
    n = len(labels)
    adj = sp.csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    wcc_count, wcc_labels = csgraph.connected_components(adj, directed=True, connection="weak")
    scc_count, scc_labels = csgraph.connected_components(adj, directed=True, connection="strong")
    largest_wcc = int(np.bincount(wcc_labels).max())
    largest_scc = int(np.bincount(scc_labels).max())
    return ComponentSummary(largest_wcc, largest_scc, int(wcc_count), int(scc_count))


def compute_snapshot(
    graph: DirectedGraph,
    metrics: Iterable[str] = METRIC_CHOICES,
) -> MetricsSnapshot:
    """Compute the requested metrics into one snapshot.

    ``apl`` degrades to None when no ordered pair is reachable; every other
    requested metric raises on graphs too degenerate to support it.
    """
    wanted = tuple(metrics)
    unknown = [name for name in wanted if name not in METRIC_CHOICES]
    if unknown:
        raise ValueError(f"unknown metric(s) {unknown}; choose from {METRIC_CHOICES}")

    dens = density(graph) if "density" in wanted else None
    apl = None
    if "apl" in wanted:
        try:
            apl = average_path_length(graph)
        except NoFinitePathsError:
            apl = None
    trans = transitivity(graph) if "transitivity" in wanted else None
    central = degree_centralization(graph, "total") if "centralization" in wanted else None
    largest_wcc = largest_scc = None
    if "components" in wanted:
        summary = component_summary(graph)
        largest_wcc = summary.largest_wcc
        largest_scc = summary.largest_scc
    return MetricsSnapshot(
        n=graph.n,
        m=graph.m,
        density=dens,
        apl=apl,
        transitivity=trans,
        centralization_total=central,
        largest_wcc=largest_wcc,
        largest_scc=largest_scc,
    )
