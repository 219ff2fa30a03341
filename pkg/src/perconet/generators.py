"""Deterministic synthetic digraph generators for testing and demos.

All models produce simple loop-free digraphs with zero-padded labels
("n0000", "n0001", ...) so lexicographic and numeric node order agree.
Randomness comes from numpy's PCG64: the master seed is split via
SeedSequence.spawn into one stream for structure decisions and one for
edge-direction coins, and every structural draw uses integer sampling, so
a fixed seed reproduces the same graph byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationError
from .graph import DirectedGraph

UNIFORM_RANDOM = "uniform-random"
PREFERENTIAL_ATTACHMENT = "preferential-attachment"
BIDIRECTED_STAR = "bidirected-star"
DIRECTED_CONFIGURATION = "directed-configuration"
MODELS = (UNIFORM_RANDOM, PREFERENTIAL_ATTACHMENT, BIDIRECTED_STAR, DIRECTED_CONFIGURATION)

_RESAMPLE_ROUNDS = 1000
_CONFIG_RESTARTS = 60
_CONFIG_REPAIRS = 200


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative request for one synthetic graph."""

    model: str
    n: int
    m: int | None = None
    in_degrees: tuple[int, ...] | None = None
    out_degrees: tuple[int, ...] | None = None
    seed: int = 0


def generate(spec: GeneratorSpec) -> DirectedGraph:
    """Build the graph described by ``spec``; infeasible requests raise."""
    if spec.model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {spec.model!r}")
    if spec.n < 0:
        raise GenerationError(f"node count must be non-negative, got {spec.n}")
    if spec.model == UNIFORM_RANDOM:
        if spec.m is None:
            raise GenerationError("uniform-random requires an edge budget m")
        return uniform_random(spec.n, spec.m, spec.seed)
    if spec.model == PREFERENTIAL_ATTACHMENT:
        if spec.m is None:
            raise GenerationError("preferential-attachment requires an edge budget m")
        return preferential_attachment(spec.n, spec.m, spec.seed)
    if spec.model == BIDIRECTED_STAR:
        if spec.m is not None and spec.m != 2 * (spec.n - 1):
            raise GenerationError(f"bidirected-star on n={spec.n} has m={2 * (spec.n - 1)}, not {spec.m}")
        return bidirected_star(spec.n)
    if spec.in_degrees is None or spec.out_degrees is None:
        raise GenerationError("directed-configuration requires in_degrees and out_degrees")
    if len(spec.in_degrees) != spec.n:
        raise GenerationError(
            f"degree sequences have length {len(spec.in_degrees)}, expected n={spec.n}"
        )
    return directed_configuration(spec.in_degrees, spec.out_degrees, spec.seed)


def node_labels(n: int) -> list[str]:
    """Zero-padded generator labels; padding keeps label order numeric."""
    width = max(1, len(str(max(n - 1, 0))))
    return [f"n{i:0{width}d}" for i in range(n)]


def _streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    structure, direction = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(structure), np.random.default_rng(direction)


def uniform_random(n: int, m: int, seed: int) -> DirectedGraph:
    """Exactly m distinct non-loop ordered pairs, uniformly at random.

    Sparse requests resample collisions against a seen-set (keeping arrival
    order); dense requests (above half the possible pairs) take a seeded
    permutation of all candidate pairs instead.
    """
    labels = node_labels(n)
    max_m = n * (n - 1)
    if m < 0 or m > max_m:
        raise GenerationError(f"m={m} outside [0, {max_m}] for n={n}")
    if m == 0:
        return DirectedGraph(nodes=labels)
    rng, _ = _streams(seed)

    if 2 * m >= max_m:
        codes = np.delete(np.arange(n * n, dtype=np.int64), np.arange(0, n * n, n + 1))
        codes = rng.permutation(codes)[:m]
    else:
        seen = np.zeros(n * n, dtype=bool)
        chunks: list[np.ndarray] = []
        got = 0
        for _ in range(_RESAMPLE_ROUNDS):
            if got >= m:
                break
            need = m - got
            draw = rng.integers(0, n, size=(2 * need + 32, 2), dtype=np.int64)
            u, v = draw[:, 0], draw[:, 1]
            cand = u[u != v] * n + v[u != v]
            cand = cand[~seen[cand]]
            _, first = np.unique(cand, return_index=True)
            cand = cand[np.sort(first)][:need]
            seen[cand] = True
            chunks.append(cand)
            got += len(cand)
        else:
            raise GenerationError("uniform sampling exhausted its resampling budget")
        codes = np.concatenate(chunks)

    edges = [(labels[int(c) // n], labels[int(c) % n]) for c in codes]
    return DirectedGraph(edges=edges, nodes=labels)


def _attachment_counts(n: int, m: int) -> list[int]:
    """Edges contributed by each arriving node: sums to m, node i adds <= i."""
    base = m // (n - 1)
    counts = [0] + [min(i, base) for i in range(1, n)]
    deficit = m - sum(counts)
    while deficit > 0:
        for i in range(n - 1, 0, -1):
            if deficit == 0:
                break
            if counts[i] < i:
                counts[i] += 1
                deficit -= 1
    return counts


def preferential_attachment(n: int, m: int, seed: int) -> DirectedGraph:
    """Growth model: arriving nodes attach to earlier nodes rich-get-richer.

    Each arriving node draws its partners without replacement with
    probability proportional to (current total degree + 1); the +1 keeps
    isolated nodes reachable.  Every attachment becomes a single arc whose
    direction is a fair coin from the direction stream.
    """
    labels = node_labels(n)
    max_m = n * (n - 1) // 2
    if m < 0 or m > max_m:
        raise GenerationError(
            f"m={m} outside [0, {max_m}] for preferential attachment on n={n}"
        )
    if m == 0:
        return DirectedGraph(nodes=labels)
    structure, direction = _streams(seed)

    counts = _attachment_counts(n, m)
    deg = np.zeros(n, dtype=np.int64)
    edges: list[tuple[str, str]] = []
    for i in range(1, n):
        e = counts[i]
        if e == 0:
            continue
        weights = deg[:i] + 1
        partners: list[int] = []
        for _ in range(e):
            cum = np.cumsum(weights)
            r = int(structure.integers(int(cum[-1])))
            j = int(np.searchsorted(cum, r, side="right"))
            weights[j] = 0
            partners.append(j)
        for j in partners:
            if int(direction.integers(2)) == 0:
                edges.append((labels[i], labels[j]))
            else:
                edges.append((labels[j], labels[i]))
            deg[j] += 1
            deg[i] += 1
    return DirectedGraph(edges=edges, nodes=labels)


def bidirected_star(n: int) -> DirectedGraph:
    """Hub node with reciprocal arcs to every leaf: m = 2*(n-1)."""
    if n < 2:
        raise GenerationError(f"bidirected star needs n >= 2, got {n}")
    labels = node_labels(n)
    hub = labels[0]
    edges = []
    for leaf in labels[1:]:
        edges.append((hub, leaf))
        edges.append((leaf, hub))
    return DirectedGraph(edges=edges, nodes=labels)


def directed_configuration(
    in_degrees,
    out_degrees,
    seed: int,
) -> DirectedGraph:
    """Realize exact in/out degree sequences by seeded stub matching.

    Stubs are shuffled and paired; collisions (self-loops, repeated pairs)
    are repaired by reshuffling the offending targets together with a fresh
    random slice of good positions.  Sequences that survive the sanity
    checks but cannot be realized as a simple loop-free digraph exhaust the
    retry budget and raise.
    """
    in_deg = [int(d) for d in in_degrees]
    out_deg = [int(d) for d in out_degrees]
    n = len(out_deg)
    if len(in_deg) != n:
        raise GenerationError("in/out degree sequences differ in length")
    if any(d < 0 for d in in_deg) or any(d < 0 for d in out_deg):
        raise GenerationError("degrees must be non-negative")
    if sum(in_deg) != sum(out_deg):
        raise GenerationError(f"degree sums differ: in={sum(in_deg)}, out={sum(out_deg)}")
    if n and (max(in_deg) > n - 1 or max(out_deg) > n - 1):
        raise GenerationError("a degree exceeds n-1: not realizable as a simple graph")
    labels = node_labels(n)
    m = sum(out_deg)
    if m == 0:
        return DirectedGraph(nodes=labels)

    out_stubs = np.repeat(np.arange(n, dtype=np.int64), out_deg)
    in_stubs = np.repeat(np.arange(n, dtype=np.int64), in_deg)
    rng, _ = _streams(seed)

    for _ in range(_CONFIG_RESTARTS):
        tgt = in_stubs[rng.permutation(m)]
        for _ in range(_CONFIG_REPAIRS):
            codes = out_stubs * n + tgt
            keep = np.zeros(m, dtype=bool)
            _, first = np.unique(codes, return_index=True)
            keep[first] = True
            keep &= out_stubs != tgt
            bad = np.flatnonzero(~keep)
            if len(bad) == 0:
                edges = [(labels[int(u)], labels[int(v)]) for u, v in zip(out_stubs, tgt)]
                return DirectedGraph(edges=edges, nodes=labels)
            extra = rng.permutation(m)[: 2 * len(bad)]
            pool = np.unique(np.concatenate([bad, extra]))
            sub = tgt[pool]
            rng.shuffle(sub)
            tgt[pool] = sub
    raise GenerationError("degree sequence could not be realized (non-graphical or exhausted)")
