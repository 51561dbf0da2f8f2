"""Connected graphs up to isomorphism, and the per-order census of game properties."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .games import GameSpec, Variant
from .graph import CanonKey, Graph, code_to_key, canonical_codes
from .independence import is_koenig_egervary
from .oracle import classify
from .recognizers import relaxed_convex, strict_additive, strict_convex

MIN_VERTICES = 2
MAX_VERTICES = 6

CLASSES = ("convex", "additive", "relaxed-convex", "balanced")


def _check_order(n: int) -> None:
    if not MIN_VERTICES <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in {MIN_VERTICES}..{MAX_VERTICES}, got {n}")


def _connected(n: int, mask: int, pairs) -> bool:
    adj = [0] * n
    for p, (u, v) in enumerate(pairs):
        if mask >> p & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in range(n):
            if frontier >> v & 1:
                nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def labelled_classes(n: int) -> dict[CanonKey, int]:
    """Number of labelled connected graphs on ``n`` vertices in each isomorphism class."""
    _check_order(n)
    pairs = list(itertools.combinations(range(n), 2))
    masks = np.array(
        [mask for mask in range(1 << len(pairs)) if _connected(n, mask, pairs)], dtype=np.int64
    )
    codes, counts = np.unique(canonical_codes(n, masks), return_counts=True)
    return {code_to_key(n, c): int(k) for c, k in zip(codes.tolist(), counts.tolist())}


def enumerate_connected(n: int) -> list[Graph]:
    """One representative per isomorphism class, in canonical-key order.

    Each representative is the labelling spelled out by its canonical key.
    """
    return [key.to_graph() for key in sorted(labelled_classes(n))]


@dataclass
class CensusRow:
    n: int
    total_connected: int = 0
    strict_convex: int = 0
    strict_additive: int = 0
    relaxed_convex: int = 0
    balanced: int = 0
    representatives: dict[str, list[list[list[int]]]] = field(
        default_factory=lambda: {c: [] for c in CLASSES}
    )

    def counts(self) -> dict[str, int]:
        return {
            "total_connected": self.total_connected,
            "strict_convex": self.strict_convex,
            "strict_additive": self.strict_additive,
            "relaxed_convex": self.relaxed_convex,
            "balanced": self.balanced,
        }


def census(n: int, method: str = "recognizers") -> CensusRow:
    """Tally convexity, additivity and balancedness over connected graphs on ``n`` vertices.

    ``method="oracle"`` replaces the structural recognizers with exhaustive
    enumeration (balancedness is always the Koenig-Egervary test).
    """
    if method not in ("recognizers", "oracle"):
        raise ValueError(f"unknown census method {method!r}")
    row = CensusRow(n)
    for g in enumerate_connected(n):
        if method == "recognizers":
            flags = {
                "convex": strict_convex(g).decision,
                "additive": strict_additive(g).decision,
                "relaxed-convex": relaxed_convex(g).decision,
            }
        else:
            strict = classify(GameSpec(g, Variant.STRICT))
            flags = {
                "convex": strict.convex,
                "additive": strict.additive,
                "relaxed-convex": classify(GameSpec(g, Variant.RELAXED)).convex,
            }
        flags["balanced"] = is_koenig_egervary(g)
        row.total_connected += 1
        row.strict_convex += flags["convex"]
        row.strict_additive += flags["additive"]
        row.relaxed_convex += flags["relaxed-convex"]
        row.balanced += flags["balanced"]
        edges = [list(e) for e in g.edges]
        for c in CLASSES:
            if flags[c]:
                row.representatives[c].append(edges)
    return row
