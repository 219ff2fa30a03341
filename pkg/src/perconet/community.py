"""Louvain community detection and modularity on the undirected skeleton.

Directed input is symmetrized first: reciprocal arcs collapse to a single
undirected edge of weight 1.  Runs are reproducible -- the only randomness
is the seeded shuffle of the node visit order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import DegenerateGraphError, PartitionError
from .graph import DirectedGraph

_MAX_LOCAL_PASSES = 1000


@dataclass(frozen=True)
class CommunityPartition:
    """Node -> community assignment with its modularity score.

    Community ids are dense in [0, community_count).  ``phase_modularity``
    records the score after each Louvain phase; it is non-decreasing.
    """

    assignment: dict[str, int]
    community_count: int
    modularity: float
    seed: int
    resolution: float = 1.0
    phase_modularity: tuple[float, ...] = field(default=())


def _skeleton_edges(graph: DirectedGraph) -> tuple[tuple[str, ...], np.ndarray, np.ndarray]:
    """Undirected skeleton as index pairs (u < v), reciprocal arcs collapsed."""
    labels, src, dst = graph.edge_index()
    n = len(labels)
    codes = np.unique(np.minimum(src, dst) * n + np.maximum(src, dst))
    return labels, codes // n, codes % n


def modularity(
    graph: DirectedGraph,
    assignment: Mapping[str, int],
    resolution: float = 1.0,
) -> float:
    """Newman modularity Q = sum_c (e_c - resolution * a_c^2).

    e_c is the fraction of skeleton edges inside community c and a_c the
    fraction of edge endpoints touching c.
    """
    missing = [u for u in graph.node_order if u not in assignment]
    if missing:
        raise PartitionError(f"assignment misses {len(missing)} node(s), e.g. {missing[0]!r}")
    if graph.m == 0:
        raise DegenerateGraphError("modularity is undefined on an edgeless graph")

    labels, u_idx, v_idx = _skeleton_edges(graph)
    comm = np.fromiter((assignment[lab] for lab in labels), dtype=np.int64, count=len(labels))
    total = len(u_idx)

    internal: dict[int, int] = defaultdict(int)
    endpoint: dict[int, int] = defaultdict(int)
    for u, v in zip(comm[u_idx], comm[v_idx]):
        if u == v:
            internal[int(u)] += 1
        endpoint[int(u)] += 1
        endpoint[int(v)] += 1

    q = 0.0
    for c in sorted(endpoint):
        e_c = internal.get(c, 0) / total
        a_c = endpoint[c] / (2 * total)
        q += e_c - resolution * a_c * a_c
    return q


def louvain(graph: DirectedGraph, seed: int, resolution: float = 1.0) -> CommunityPartition:
    """Two-phase Louvain: greedy local moves, then community aggregation.

    Node visit order is shuffled once per phase from the given seed, every
    tie-break is deterministic, and the reported modularity is recomputed
    from the final assignment with :func:`modularity` rather than taken from
    the incremental bookkeeping.
    """
    if graph.m == 0:
        raise DegenerateGraphError("community detection needs at least one edge")
    labels, u_idx, v_idx = _skeleton_edges(graph)
    n = len(labels)
    rng = np.random.default_rng(seed)

    # weighted aggregated graph: neighbor weights + internal self weight
    adj: list[dict[int, float]] = [dict() for _ in range(n)]
    for u, v in zip(u_idx, v_idx):
        adj[int(u)][int(v)] = adj[int(u)].get(int(v), 0.0) + 1.0
        adj[int(v)][int(u)] = adj[int(v)].get(int(u), 0.0) + 1.0
    self_w = [0.0] * n
    total_weight = float(len(u_idx))

    membership = list(range(n))  # original node -> current supernode
    phase_scores: list[float] = []
    prev_q = None

    while True:
        comm, moved = _local_moves(adj, self_w, total_weight, resolution, rng)

        # project current supernode communities back onto original nodes
        projected = {labels[i]: comm[membership[i]] for i in range(n)}
        q = modularity(graph, projected, resolution)
        if prev_q is not None:
            assert q >= prev_q - 1e-12, "modularity regressed across a phase"
        phase_scores.append(q)
        prev_q = q

        if not moved:
            break
        adj, self_w, relabel = _aggregate(adj, self_w, comm)
        membership = [relabel[comm[sup]] for sup in membership]

    raw = {labels[i]: membership[i] for i in range(n)}
    dense: dict[int, int] = {}
    assignment: dict[str, int] = {}
    for lab in labels:  # dense ids by first appearance in label order
        c = raw[lab]
        if c not in dense:
            dense[c] = len(dense)
        assignment[lab] = dense[c]

    return CommunityPartition(
        assignment=assignment,
        community_count=len(dense),
        modularity=modularity(graph, assignment, resolution),
        seed=seed,
        resolution=resolution,
        phase_modularity=tuple(phase_scores),
    )


def _local_moves(
    adj: list[dict[int, float]],
    self_w: list[float],
    total_weight: float,
    resolution: float,
    rng: np.random.Generator,
) -> tuple[list[int], bool]:
    """Greedy modularity-gain moves until a full pass changes nothing."""
    size = len(adj)
    comm = list(range(size))
    k = [sum(adj[i].values()) + 2.0 * self_w[i] for i in range(size)]
    comm_tot = k.copy()
    two_m = 2.0 * total_weight

    order = np.arange(size)
    rng.shuffle(order)

    moved_any = False
    for _ in range(_MAX_LOCAL_PASSES):
        moved_this_pass = False
        for u in order:
            u = int(u)
            cu = comm[u]
            neigh_w: dict[int, float] = defaultdict(float)
            for v, w in adj[u].items():
                neigh_w[comm[v]] += w

            comm_tot[cu] -= k[u]
            best_c = cu
            best_gain = neigh_w.get(cu, 0.0) - resolution * k[u] * comm_tot[cu] / two_m
            for c in sorted(neigh_w):
                if c == cu:
                    continue
                gain = neigh_w[c] - resolution * k[u] * comm_tot[c] / two_m
                if gain > best_gain:
                    best_gain = gain
                    best_c = c
            comm[u] = best_c
            comm_tot[best_c] += k[u]
            if best_c != cu:
                moved_this_pass = True
                moved_any = True
        if not moved_this_pass:
            break
    return comm, moved_any


def _aggregate(
    adj: list[dict[int, float]],
    self_w: list[float],
    comm: list[int],
) -> tuple[list[dict[int, float]], list[float], dict[int, int]]:
    """Collapse communities into supernodes, summing edge weights."""
    relabel: dict[int, int] = {}
    for u in range(len(adj)):
        c = comm[u]
        if c not in relabel:
            relabel[c] = len(relabel)
    size = len(relabel)

    new_adj: list[dict[int, float]] = [dict() for _ in range(size)]
    new_self = [0.0] * size
    for u in range(len(adj)):
        cu = relabel[comm[u]]
        new_self[cu] += self_w[u]
        for v, w in adj[u].items():
            if v <= u:
                continue  # each undirected pair once
            cv = relabel[comm[v]]
            if cu == cv:
                new_self[cu] += w
            else:
                new_adj[cu][cv] = new_adj[cu].get(cv, 0.0) + w
                new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
    return new_adj, new_self, relabel


def filter_communities(
    partition: CommunityPartition,
    min_size: int = 5,
) -> list[tuple[int, list[str]]]:
    """Communities with strictly more than ``min_size`` members.

    Members are sorted lexicographically; communities by descending size,
    then ascending id.
    """
    groups: dict[int, list[str]] = defaultdict(list)
    for label, c in partition.assignment.items():
        groups[c].append(label)
    kept = [(c, sorted(members)) for c, members in groups.items() if len(members) > min_size]
    kept.sort(key=lambda item: (-len(item[1]), item[0]))
    return kept
