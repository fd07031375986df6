"""Brute-force oracle tier: every subset of V, evaluated in numpy blocks.

Subsets are visited in increasing bitmask order and ties are broken toward
the smallest mask, so results are deterministic. Practical up to roughly
n = 20; tests use it for n <= 12.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

import numpy as np

from .graph import Graph

MAX_EXHAUSTIVE_N = 24
_BLOCK = 1 << 15


def _adjacency(masks: tuple[int, ...], n: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.int16)
    for u, m in enumerate(masks):
        for v in range(n):
            if m >> v & 1:
                a[u, v] = 1
    return a


def _blocks(n: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    if n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive tier refuses n = {n} > {MAX_EXHAUSTIVE_N}")
    total = 1 << n
    shifts = np.arange(n, dtype=np.int64)
    for start in range(0, total, _BLOCK):
        masks = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int16)
        yield masks, bits


def _best(n: int, score: Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]], maximise: bool) -> Optional[int]:
    """Scan all subsets; ``score`` returns (feasible flags, sizes) per block."""
    best_size, best_mask = None, None
    for masks, bits in _blocks(n):
        ok, sizes = score(masks, bits)
        if not ok.any():
            continue
        cand = sizes[ok]
        target = cand.max() if maximise else cand.min()
        idx = np.flatnonzero(ok & (sizes == target))[0]
        better = best_size is None or (target > best_size if maximise else target < best_size)
        if better:
            best_size, best_mask = int(target), int(masks[idx])
    return best_mask


def exhaustive_max_limited(g: Graph, k: int) -> int:
    a = _adjacency(g.closed_masks, g.n)

    def score(masks, bits):
        counts = bits @ a
        return counts.max(axis=1, initial=0) <= k, bits.sum(axis=1)

    return _best(g.n, score, maximise=True)


def exhaustive_min_maximal_limited(g: Graph, k: int) -> int:
    a = _adjacency(g.closed_masks, g.n)

    def score(masks, bits):
        counts = bits @ a
        feasible = counts.max(axis=1, initial=0) <= k
        # v outside B is addable iff every u in N[v] still has counts[u] < k
        blocked = ((counts == k).astype(np.int16) @ a) > 0
        maximal = np.all((bits == 1) | blocked, axis=1)
        return feasible & maximal, bits.sum(axis=1)

    return _best(g.n, score, maximise=False)


def exhaustive_max_open(g: Graph) -> int:
    a = _adjacency(g.open_masks, g.n)

    def score(masks, bits):
        counts = bits @ a
        return counts.max(axis=1, initial=0) <= 1, bits.sum(axis=1)

    return _best(g.n, score, maximise=True)


def exhaustive_min_cover(cover: tuple[int, ...], n: int) -> Optional[int]:
    """Smallest subset whose ``cover`` masks union to V (domination / total domination)."""
    a = _adjacency(cover, n)

    def score(masks, bits):
        counts = bits @ a
        return np.all(counts > 0, axis=1), bits.sum(axis=1)

    return _best(n, score, maximise=False)


def exhaustive_anchored(g: Graph, need: int, size: int, valid: Callable[[int], bool]) -> Optional[int]:
    """Smallest-mask set of the given size that contains ``need`` and satisfies ``valid``."""
    for masks, _ in _blocks(g.n):
        for m in masks.tolist():
            if m & need == need and m.bit_count() == size and valid(m):
                return m
    return None
