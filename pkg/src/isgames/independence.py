"""Independence number, matchings, edge covers and the Koenig-Egervary test."""

from __future__ import annotations

import threading
from typing import Iterable

from .errors import InstanceTooLargeError, IsolatedVertexError
from .graph import Graph, mask_of

MAX_ALPHA_VERTICES = 24
MAX_MATCHING_EDGES = 24


def alpha_search(adj, mask: int, memo: dict[int, int]) -> int:
    """Independence number of the vertex set ``mask`` under neighbour masks ``adj``.

    Branches on the lowest vertex ``v``: ``max(alpha(S - v), 1 + alpha(S - N[v]))``.
    ``memo`` is filled in place and must map 0 to 0 or be empty.
    """
    memo.setdefault(0, 0)
    # explicit stack: 24-bit masks nest too deep for recursion
    stack = [mask]
    while stack:
        s = stack[-1]
        if s in memo:
            stack.pop()
            continue
        low = s & -s
        skip = s ^ low
        take = skip & ~adj[low.bit_length() - 1]
        a, b = memo.get(skip), memo.get(take)
        if a is None:
            stack.append(skip)
        if b is None:
            stack.append(take)
        if a is not None and b is not None:
            memo[s] = a if a > b + 1 else b + 1
            stack.pop()
    return memo[mask]


class AlphaCache:
    """Memoised ``alpha(G[U])`` over vertex subsets ``U`` of one host graph.

    Safe to share between threads: searches that write run under a lock,
    and entries are never overwritten.
    """

    def __init__(self, host: Graph):
        if host.n > MAX_ALPHA_VERTICES:
            raise InstanceTooLargeError("vertex count", host.n, MAX_ALPHA_VERTICES)
        self.host = host
        self._adj = host.adj_masks
        self._memo: dict[int, int] = {0: 0}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def alpha_mask(self, mask: int) -> int:
        hit = self._memo.get(mask)
        if hit is not None:
            return hit
        with self._lock:
            return alpha_search(self._adj, mask, self._memo)

    def alpha(self, U: Iterable[int] | None = None) -> int:
        """``alpha(G[U])``; ``U=None`` means the whole vertex set."""
        if U is None:
            return self.alpha_mask((1 << self.host.n) - 1)
        U = list(U)
        for v in U:
            if not 0 <= v < self.host.n:
                raise ValueError(f"vertex {v} outside 0..{self.host.n - 1}")
        return self.alpha_mask(mask_of(U))


def alpha(g: Graph, U: Iterable[int] | None = None) -> int:
    return AlphaCache(g).alpha(U)


def _require_no_isolated(g: Graph) -> None:
    iso = g.isolated_vertices()
    if iso:
        raise IsolatedVertexError(iso)


def max_matching_size(g: Graph) -> int:
    """Maximum matching size by include/skip branching over the edge list."""
    if g.m > MAX_MATCHING_EDGES:
        raise InstanceTooLargeError("edge count", g.m, MAX_MATCHING_EDGES)
    ends = [(1 << u) | (1 << v) for u, v in g.edges]
    best = 0

    def branch(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == len(ends):
            return
        free = g.n - used.bit_count()
        if size + min(len(ends) - i, free // 2) <= best:
            return
        if not ends[i] & used:
            branch(i + 1, used | ends[i], size + 1)
        branch(i + 1, used, size)

    branch(0, 0, 0)
    return best


def min_edge_cover_size(g: Graph) -> int:
    """Minimum edge cover size via Gallai's identity ``n - mu``."""
    _require_no_isolated(g)
    return g.n - max_matching_size(g)


def is_koenig_egervary(g: Graph) -> bool:
    _require_no_isolated(g)
    return alpha(g) == min_edge_cover_size(g)
