"""Directed-graph core: representation, edge-list ingestion, cleaning, removal.

The graph is a simple (no parallel arcs) loop-free digraph over string node
labels.  Labels are treated as opaque tokens: router contact datasets often
redact address octets ("23.137.254.xxx"), so nothing here parses or
canonicalizes them beyond whitespace trimming.  Graph values are immutable
after construction; node removal returns a fresh snapshot so that attack
traces can keep per-step states around.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, replace
from typing import Iterable, Iterator

import numpy as np

from .errors import DataFormatError, UnknownNodeError

NodeLabel = str

#: Cleaning policies accepted by :func:`clean_records`.
ROW_ONLY = "row-only"
TUNNEL_CASCADE = "tunnel-cascade"
CLEANING_POLICIES = (TUNNEL_CASCADE, ROW_ONLY)


def _normalize(token: str | None) -> str | None:
    if token is None:
        return None
    token = token.strip()
    return token or None


@dataclass(frozen=True)
class EdgeRecord:
    """One raw contact row: source label, destination label, optional tunnel id.

    Labels are whitespace-trimmed on construction; empty strings become
    ``None``.  A record is *anonymous* when either endpoint is missing.
    """

    src: str | None
    dst: str | None
    tunnel_id: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "src", _normalize(self.src))
        object.__setattr__(self, "dst", _normalize(self.dst))
        object.__setattr__(self, "tunnel_id", _normalize(self.tunnel_id))

    @property
    def is_anonymous(self) -> bool:
        return self.src is None or self.dst is None


@dataclass(frozen=True)
class CleaningReport:
    """Audit of what ingestion cleaning and graph assembly dropped.

    ``rows_read`` always equals rows kept plus the two row-level drop
    tallies; duplicate and self-loop counts are charged against kept rows
    (they are discovered at graph-assembly time).
    """

    rows_read: int = 0
    rows_dropped_missing: int = 0
    rows_dropped_cascade: int = 0
    duplicate_edges_collapsed: int = 0
    self_loops_dropped: int = 0

    @property
    def rows_kept(self) -> int:
        return self.rows_read - self.rows_dropped_missing - self.rows_dropped_cascade

    def to_dict(self) -> dict:
        return {
            "rows_read": self.rows_read,
            "rows_kept": self.rows_kept,
            "rows_dropped_missing": self.rows_dropped_missing,
            "rows_dropped_cascade": self.rows_dropped_cascade,
            "duplicate_edges_collapsed": self.duplicate_edges_collapsed,
            "self_loops_dropped": self.self_loops_dropped,
        }


class DirectedGraph:
    """Immutable simple loop-free directed graph over string labels.

    Parameters
    ----------
    edges : iterable of (src, dst) pairs
        Duplicate pairs collapse silently (set semantics); self-loops raise.
    nodes : iterable of labels
        Extra labels to include as isolated nodes.
    """

    __slots__ = ("_succ", "_pred", "_m", "_order", "_edge_arrays")

    def __init__(self, edges: Iterable[tuple[str, str]] = (), nodes: Iterable[str] = ()):
        succ: dict[str, set[str]] = {}
        pred: dict[str, set[str]] = {}

        def intern(label: str) -> str:
            label = label.strip()
            if not label:
                raise ValueError("node labels must be non-empty")
            if label not in succ:
                succ[label] = set()
                pred[label] = set()
            return label

        for label in nodes:
            intern(label)
        m = 0
        for u, v in edges:
            u, v = intern(u), intern(v)
            if u == v:
                raise ValueError(f"self-loop on {u!r} not allowed")
            if v not in succ[u]:
                succ[u].add(v)
                pred[v].add(u)
                m += 1
        self._succ = succ
        self._pred = pred
        self._m = m
        self._order: tuple[str, ...] | None = None
        self._edge_arrays: tuple[np.ndarray, np.ndarray] | None = None

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        """Node count."""
        return len(self._succ)

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    @property
    def node_order(self) -> tuple[str, ...]:
        """Nodes in lexicographic order (the canonical index order)."""
        if self._order is None:
            self._order = tuple(sorted(self._succ))
        return self._order

    def has_node(self, label: str) -> bool:
        return label in self._succ

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._succ and v in self._succ[u]

    def successors(self, u: str) -> frozenset[str]:
        try:
            return frozenset(self._succ[u])
        except KeyError:
            raise UnknownNodeError(f"unknown node {u!r}") from None

    def predecessors(self, u: str) -> frozenset[str]:
        try:
            return frozenset(self._pred[u])
        except KeyError:
            raise UnknownNodeError(f"unknown node {u!r}") from None

    def out_degree(self, u: str) -> int:
        try:
            return len(self._succ[u])
        except KeyError:
            raise UnknownNodeError(f"unknown node {u!r}") from None

    def in_degree(self, u: str) -> int:
        try:
            return len(self._pred[u])
        except KeyError:
            raise UnknownNodeError(f"unknown node {u!r}") from None

    def total_degree(self, u: str) -> int:
        return self.in_degree(u) + self.out_degree(u)

    def edges(self) -> Iterator[tuple[str, str]]:
        """Edges in lexicographic (src, dst) order."""
        for u in self.node_order:
            for v in sorted(self._succ[u]):
                yield (u, v)

    def edge_index(self) -> tuple[tuple[str, ...], np.ndarray, np.ndarray]:
        """Integer-indexed edge arrays against :attr:`node_order`.

        Returns ``(labels, src_idx, dst_idx)`` with edges sorted by
        (src, dst); the arrays are cached since the graph is immutable.
        """
        if self._edge_arrays is None:
            labels = self.node_order
            index = {label: i for i, label in enumerate(labels)}
            src = np.empty(self._m, dtype=np.int64)
            dst = np.empty(self._m, dtype=np.int64)
            for k, (u, v) in enumerate(self.edges()):
                src[k] = index[u]
                dst[k] = index[v]
            self._edge_arrays = (src, dst)
        return self.node_order, self._edge_arrays[0], self._edge_arrays[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self._succ == other._succ

    def __hash__(self) -> int:  # frozen-by-convention value type
        return hash((self.node_order, self._m))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"

    # -- removal -----------------------------------------------------------

    def remove_node(self, node: str) -> tuple["DirectedGraph", int, int]:
        """Return a new graph without ``node`` plus its (in, out) degree.

        The original graph is untouched; untouched adjacency sets are shared
        between snapshots and never mutated.
        """
        if node not in self._succ:
            raise UnknownNodeError(f"unknown node {node!r}")
        removed_out = len(self._succ[node])
        removed_in = len(self._pred[node])

        g = DirectedGraph.__new__(DirectedGraph)
        succ = dict(self._succ)
        pred = dict(self._pred)
        del succ[node]
        del pred[node]
        for u in self._pred[node]:
            succ[u] = succ[u] - {node}
        for w in self._succ[node]:
            pred[w] = pred[w] - {node}
        g._succ = succ
        g._pred = pred
        g._m = self._m - removed_in - removed_out
        g._order = None
        g._edge_arrays = None
        return g, removed_in, removed_out


# -- cleaning and assembly ---------------------------------------------------


def clean_records(
    records: Iterable[EdgeRecord],
    policy: str = TUNNEL_CASCADE,
) -> tuple[list[EdgeRecord], CleaningReport]:
    """Drop anonymous rows, optionally cascading through shared tunnels.

    Under ``row-only`` every record with a missing endpoint is dropped.
    Under ``tunnel-cascade`` (the default) any record sharing a tunnel id
    with an anonymous record is dropped as well: a redacted router poisons
    the whole tunnel it appears in.  Records without a tunnel id never
    cascade.
    """
    if policy not in CLEANING_POLICIES:
        raise ValueError(f"policy must be one of {CLEANING_POLICIES}, got {policy!r}")
    records = list(records)
    tainted: set[str] = set()
    if policy == TUNNEL_CASCADE:
        tainted = {r.tunnel_id for r in records if r.is_anonymous and r.tunnel_id is not None}

    kept: list[EdgeRecord] = []
    dropped_missing = 0
    dropped_cascade = 0
    for rec in records:
        if rec.is_anonymous:
            dropped_missing += 1
        elif rec.tunnel_id is not None and rec.tunnel_id in tainted:
            dropped_cascade += 1
        else:
            kept.append(rec)
    report = CleaningReport(
        rows_read=len(records),
        rows_dropped_missing=dropped_missing,
        rows_dropped_cascade=dropped_cascade,
    )
    return kept, report


def build_graph(
    records: Iterable[EdgeRecord],
    report: CleaningReport | None = None,
) -> tuple[DirectedGraph, CleaningReport]:
    """Assemble a simple loop-free digraph from cleaned records.

    Duplicate (src, dst) rows collapse to one edge and (u, u) rows are
    dropped, with both tallies recorded on the returned report (an amended
    copy of ``report`` when given).  Endpoints of every record become nodes
    even when their only row was a self-loop.

    Raises ``ValueError`` if any record is still anonymous: cleaning must
    run first.
    """
    records = list(records)
    if report is None:
        report = CleaningReport(rows_read=len(records))

    seen: set[tuple[str, str]] = set()
    nodes: set[str] = set()
    duplicates = 0
    loops = 0
    for rec in records:
        if rec.is_anonymous:
            raise ValueError("anonymous record passed to build_graph; run clean_records first")
        u, v = rec.src, rec.dst
        nodes.add(u)
        nodes.add(v)
        if u == v:
            loops += 1
        elif (u, v) in seen:
            duplicates += 1
        else:
            seen.add((u, v))
    graph = DirectedGraph(edges=seen, nodes=nodes)
    report = replace(report, duplicate_edges_collapsed=duplicates, self_loops_dropped=loops)
    return graph, report


# -- CSV ingestion ------------------------------------------------------------


def read_edge_records(
    path,
    src_col: str = "Src IP",
    dst_col: str = "Dst IP",
    tunnel_col: str | None = None,
) -> list[EdgeRecord]:
    """Read contact rows from a UTF-8 CSV file with a header row.

    Column names are configurable; missing or empty cells become missing
    endpoints (anonymous records), left for :func:`clean_records` to drop.
    """
    with open(path, encoding="utf-8-sig", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise DataFormatError(f"{path}: empty file, header row required")
        missing = [c for c in (src_col, dst_col) if c not in reader.fieldnames]
        if tunnel_col is not None and tunnel_col not in reader.fieldnames:
            missing.append(tunnel_col)
        if missing:
            raise DataFormatError(f"{path}: missing column(s) {missing}, found {reader.fieldnames}")
        records = []
        for row in reader:
            records.append(
                EdgeRecord(
                    src=row.get(src_col),
                    dst=row.get(dst_col),
                    tunnel_id=row.get(tunnel_col) if tunnel_col is not None else None,
                )
            )
    return records


def ingest_csv(
    path,
    src_col: str = "Src IP",
    dst_col: str = "Dst IP",
    tunnel_col: str | None = None,
    policy: str = TUNNEL_CASCADE,
) -> tuple[DirectedGraph, CleaningReport]:
    """Read, clean, and assemble a graph from a contact CSV in one step."""
    records = read_edge_records(path, src_col=src_col, dst_col=dst_col, tunnel_col=tunnel_col)
    kept, report = clean_records(records, policy=policy)
    return build_graph(kept, report)


# -- JSON graph format ---------------------------------------------------------


def graph_to_json(graph: DirectedGraph) -> str:
    """Serialize to the canonical JSON document.

    Nodes are sorted lexicographically and edges by (src, dst), so equal
    graphs always produce byte-identical output.
    """
    doc = {"nodes": list(graph.node_order), "edges": [[u, v] for u, v in graph.edges()]}
    return json.dumps(doc, separators=(",", ":"))


def graph_from_json(text: str) -> DirectedGraph:
    """Parse the canonical JSON graph document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"invalid graph JSON: {exc}") from exc
    if not isinstance(doc, dict) or "nodes" not in doc or "edges" not in doc:
        raise DataFormatError('graph JSON must be an object with "nodes" and "edges"')
    try:
        return DirectedGraph(edges=[(u, v) for u, v in doc["edges"]], nodes=doc["nodes"])
    except (TypeError, ValueError) as exc:
        raise DataFormatError(f"invalid graph JSON: {exc}") from exc


def save_graph(graph: DirectedGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(graph_to_json(graph))
        handle.write("\n")


def load_graph(path) -> DirectedGraph:
    with open(path, encoding="utf-8") as handle:
        return graph_from_json(handle.read())
