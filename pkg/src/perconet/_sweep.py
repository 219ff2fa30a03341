"""Bit-parallel all-sources reachability sweep.

Unweighted directed BFS from every node at once: each node row carries one
reachability bit per source packed into uint64 words, and one synchronized
level step ORs those words along every edge.  A level costs O(m * n/64)
word operations, so the whole sweep is O(diameter * m * n/64) with exact
integer hop counts throughout.  The bitset is dense (n^2/8 bytes), which is
the right trade for graphs up to a few tens of thousands of nodes.
"""

from __future__ import annotations

import sys
from typing import Iterator

import numpy as np


def _seed_bits(n: int) -> np.ndarray:
    words = (n + 63) // 64
    cur = np.zeros((n, words), dtype=np.uint64)
    idx = np.arange(n)
    cur[idx, idx // 64] = np.left_shift(
        np.ones(n, dtype=np.uint64), (idx % 64).astype(np.uint64)
    )
    return cur


def _level_bits(n: int, src: np.ndarray, dst: np.ndarray) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (level, new) where bit s of row v is set iff dist(s, v) == level."""
    if n == 0 or len(src) == 0:
        return
    order = np.argsort(dst, kind="stable")
    src_s = src[order]
    dst_s = dst[order]
    starts = np.flatnonzero(np.diff(dst_s, prepend=-1))
    group_dst = dst_s[starts]

    cur = _seed_bits(n)
    level = 0
    while True:
        level += 1
        agg = np.bitwise_or.reduceat(cur[src_s], starts, axis=0)
        nxt = cur.copy()
        nxt[group_dst] |= agg
        new = nxt & ~cur
        if not new.any():
            return
        yield level, new
        cur = nxt


def _unpack(new: np.ndarray, n: int) -> np.ndarray:
    """Expand packed source bits to a (nodes, sources) boolean byte matrix."""
    words = new if sys.byteorder == "little" else new.byteswap()
    return np.unpackbits(words.view(np.uint8), axis=1, count=n, bitorder="little")


def hop_census(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[int, int]:
    """Total directed hops and count over all reachable ordered pairs (u != v)."""
    total = 0
    pairs = 0
    for level, new in _level_bits(n, src, dst):
        count = int(np.bitwise_count(new).sum())
        total += level * count
        pairs += count
    return total, pairs


def harmonic_sums(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Per-source sum of 1/dist(s, v) over reachable targets v != s."""
    harm = np.zeros(n, dtype=np.float64)
    for level, new in _level_bits(n, src, dst):
        counts = _unpack(new, n).sum(axis=0, dtype=np.int64)
        harm += counts / level
    return harm


def hop_matrix(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Dense (source, target) hop-count matrix; -1 marks unreachable pairs."""
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    for level, new in _level_bits(n, src, dst):
        v_idx, s_idx = np.nonzero(_unpack(new, n))
        dist[s_idx, v_idx] = level
    return dist
