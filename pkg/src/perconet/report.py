"""Report emitters: trace series, degree tables, country aggregation.

All emitters are byte-stable: fixed column/key order, floats rounded to 9
significant digits, rows in deterministic sort order.  Trace JSON
round-trips: parse then re-emit reproduces the bytes.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from typing import Mapping

from .centrality import centrality_scores, top_k
from .errors import DataFormatError
from .graph import DirectedGraph
from .metrics import MetricsSnapshot, float9
from .percolation import AttackStrategy, PercolationStep, PercolationTrace

UNKNOWN_COUNTRY = "UNKNOWN"

TRACE_CSV_COLUMNS = ("step", "removed", "removed_degree", "n", "m", "density", "apl")


def load_country_mapping(path) -> dict[str, str]:
    """Read a label -> country CSV (columns ``label``, ``country``).

    Labels must be unique; unmapped nodes aggregate under UNKNOWN later.
    """
    with open(path, encoding="utf-8-sig", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise DataFormatError(f"{path}: empty file, header row required")
        for col in ("label", "country"):
            if col not in reader.fieldnames:
                raise DataFormatError(f"{path}: missing column {col!r}, found {reader.fieldnames}")
        mapping: dict[str, str] = {}
        for line, row in enumerate(reader, start=2):
            label = (row.get("label") or "").strip()
            country = (row.get("country") or "").strip()
            if not label:
                raise DataFormatError(f"{path}:{line}: empty label")
            if label in mapping:
                raise DataFormatError(f"{path}:{line}: duplicate label {label!r}")
            mapping[label] = country or UNKNOWN_COUNTRY
    return mapping


def degree_by_country(
    graph: DirectedGraph,
    mapping: Mapping[str, str],
    k: int = 10,
) -> list[tuple[str, int]]:
    """Total degree of the global top-k nodes, summed per country.

    Nodes missing from the mapping count under UNKNOWN.  Rows sort by
    descending degree sum, then country code.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    sums: dict[str, int] = defaultdict(int)
    for label, deg in top_k(centrality_scores(graph, "total-degree"), k):
        sums[mapping.get(label, UNKNOWN_COUNTRY)] += int(deg)
    return sorted(sums.items(), key=lambda kv: (-kv[1], kv[0]))


def top_degree_table(graph: DirectedGraph, k: int = 10) -> list[dict]:
    """Rows (label, in_degree, out_degree, total_degree) for the top-k by total degree."""
    in_scores = centrality_scores(graph, "in-degree").scores
    out_scores = centrality_scores(graph, "out-degree").scores
    total = centrality_scores(graph, "total-degree")
    return [
        {
            "label": label,
            "in_degree": int(in_scores[label]),
            "out_degree": int(out_scores[label]),
            "total_degree": int(deg),
        }
        for label, deg in top_k(total, k)
    ]


# -- percolation trace serialization ------------------------------------------


def _snapshot_from_dict(doc: dict) -> MetricsSnapshot:
    return MetricsSnapshot(
        n=doc["n"],
        m=doc["m"],
        density=doc.get("density"),
        apl=doc.get("apl"),
        transitivity=doc.get("transitivity"),
        centralization_total=doc.get("centralization_total"),
        largest_wcc=doc.get("largest_wcc"),
        largest_scc=doc.get("largest_scc"),
    )


def trace_to_json(trace: PercolationTrace) -> str:
    """Canonical JSON for a trace; floats at 9 significant digits."""
    doc = {
        "strategy": {
            "kind": trace.strategy.kind,
            "measure": trace.strategy.measure,
            "seed": trace.strategy.seed,
        },
        "steps": [
            {
                "step": step.index,
                "removed": step.removed,
                "removed_degree": step.removed_degree,
                **step.snapshot.to_dict(),
            }
            for step in trace.steps
        ],
    }
    return json.dumps(doc)


def trace_from_json(text: str) -> PercolationTrace:
    """Parse trace JSON produced by :func:`trace_to_json`."""
    try:
        doc = json.loads(text)
        strategy = AttackStrategy(
            kind=doc["strategy"]["kind"],
            measure=doc["strategy"]["measure"],
            seed=doc["strategy"]["seed"],
        )
        steps = tuple(
            PercolationStep(
                index=entry["step"],
                removed=entry["removed"],
                removed_degree=entry["removed_degree"],
                snapshot=_snapshot_from_dict(entry),
            )
            for entry in doc["steps"]
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise DataFormatError(f"invalid trace JSON: {exc}") from exc
    return PercolationTrace(strategy=strategy, steps=steps)


def trace_to_csv(trace: PercolationTrace) -> str:
    """Fixed-column CSV of the per-step series, ready to plot."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRACE_CSV_COLUMNS)
    for step in trace.steps:
        snap = step.snapshot
        writer.writerow(
            [
                step.index,
                step.removed if step.removed is not None else "",
                step.removed_degree,
                snap.n,
                snap.m,
                format(snap.density, ".9g") if snap.density is not None else "",
                format(snap.apl, ".9g") if snap.apl is not None else "",
            ]
        )
    return buffer.getvalue()


def emit_trace_series(trace: PercolationTrace, format: str = "csv") -> str:
    """Emit the per-step series as ``csv`` or ``json``."""
    if not trace.steps:
        raise ValueError("trace has no steps")
    if format == "csv":
        return trace_to_csv(trace)
    if format == "json":
        return trace_to_json(trace)
    raise ValueError(f"format must be 'csv' or 'json', got {format!r}")


def report_document(
    graph: DirectedGraph,
    snapshot: MetricsSnapshot,
    mapping: Mapping[str, str] | None = None,
    k: int = 10,
) -> dict:
    """Combined report: summary metrics, top-degree table, country rollup."""
    doc = {
        "summary": snapshot.to_dict(),
        "top_degree": top_degree_table(graph, k),
        "degree_by_country": None,
    }
    if mapping is not None:
        doc["degree_by_country"] = [
            {"country": country, "total_degree": deg}
            for country, deg in degree_by_country(graph, mapping, k)
        ]
    return doc
