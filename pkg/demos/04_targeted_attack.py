#!/usr/bin/env python3
"""The core experiment: percolation under targeted vs random node removal.

Removes nodes one at a time while tracing density and average path length,
contrasting the adaptive protocol (re-rank after every removal), the static
protocol (rank once up front), and seeded random failure.
"""

from perconet import AttackStrategy, compare_traces, emit_trace_series, run_attack, trace_from_counts
from perconet.generators import preferential_attachment

graph = preferential_attachment(n=200, m=800, seed=9)
print(f"attack target: preferential-attachment graph n={graph.n}, m={graph.m}\n")

traces = {}
for kind, seed in (("adaptive-degree", None), ("static-degree", None), ("random", 13)):
    strategy = AttackStrategy(kind, measure="total-degree", seed=seed)
    traces[kind] = run_attack(graph, strategy, steps=10, metrics=("density", "apl"))

for kind, trace in traces.items():
    print(f"--- {kind}")
    print(emit_trace_series(trace, "csv"))

delta = compare_traces(traces["adaptive-degree"], traces["random"])
print("adaptive vs random:  max |d density| ="
      f" {delta.max_abs_density_delta:.3e}, max |d apl| = {delta.max_abs_apl_delta:.3f}")
delta = compare_traces(traces["adaptive-degree"], traces["static-degree"])
print("adaptive vs static:  max |d density| ="
      f" {delta.max_abs_density_delta:.3e}, max |d apl| = {delta.max_abs_apl_delta:.3f}")

# Replay a reported three-step hub removal purely from counts: a 3081-node,
# 101105-edge contact snapshot losing its top hubs of degree 5112, 3009, 2237.
print("\nclosed-form replay of a reported hub-removal trajectory:")
replay = trace_from_counts(3081, 101105, [5112, 3009, 2237])
print(emit_trace_series(replay, "csv"))
print("density falls ~10% in three removals; on the real snapshot the mean "
      "path length climbed ~33% over the same steps.")
