"""Characteristic functions of the strict and relaxed independent set games.

Players are the edges of the host graph. The strict game values a
coalition ``F`` by the independence number of the subgraph induced on the
vertices all of whose edges lie in ``F``; the relaxed game uses the
subgraph formed by the edges of ``F`` themselves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InstanceTooLargeError, IsolatedVertexError
from .graph import (
    Coalition,
    CoalitionLike,
    Graph,
    coalition_bits,
    edge_induced_subgraph,
    exclusive_mask,
    iter_bits,
)
from .independence import AlphaCache, alpha, alpha_search

MAX_TABLE_EDGES = 20


class Variant(str, enum.Enum):
    STRICT = "strict"
    RELAXED = "relaxed"


@dataclass(frozen=True, eq=False)
class GameSpec:
    """An independent set game on ``graph``; isolated vertices are rejected."""

    graph: Graph
    variant: Variant = Variant.STRICT

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        iso = self.graph.isolated_vertices()
        if iso:
            raise IsolatedVertexError(iso)

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def grand(self) -> int:
        return (1 << self.graph.m) - 1

    @cached_property
    def alpha_cache(self) -> AlphaCache:
        return AlphaCache(self.graph)

    def value(self, F: int) -> int:
        """Characteristic value of the bitmask coalition ``F`` (no validation)."""
        if self.variant is Variant.STRICT:
            return self.alpha_cache.alpha_mask(exclusive_mask(self.graph, F))
        return alpha(edge_induced_subgraph(self.graph, F).graph)

    @cached_property
    def table(self) -> "ValueTable":
        """The full value table, built on first access."""
        return value_table(self)


def gamma(game: GameSpec, F: CoalitionLike) -> int:
    return game.value(coalition_bits(F, game.m))


def marginal(game: GameSpec, F: CoalitionLike, e: int) -> int:
    bits = coalition_bits(F, game.m)
    if not 0 <= e < game.m:
        raise ValueError(f"edge index {e} outside 0..{game.m - 1}")
    if bits >> e & 1:
        raise ValueError(f"edge {e} already belongs to the coalition")
    return game.value(bits | 1 << e) - game.value(bits)


@dataclass(frozen=True, eq=False)
class ValueTable:
    """``values[F]`` for every bitmask coalition ``F`` of one game."""

    game: GameSpec
    values: np.ndarray

    def __getitem__(self, F: CoalitionLike) -> int:
        return int(self.values[coalition_bits(F, self.game.m)])

    def __len__(self) -> int:
        return len(self.values)

    def items(self):
        for F, v in enumerate(self.values.tolist()):
            yield Coalition(F, self.game.m), v


def _strict_values(game: GameSpec) -> np.ndarray:
    g = game.graph
    coalitions = np.arange(1 << g.m, dtype=np.int64)
    vmask = np.zeros_like(coalitions)
    for v, inc in enumerate(g.inc_masks):
        vmask |= ((coalitions & inc) == inc).astype(np.int64) << v
    uniq, inverse = np.unique(vmask, return_inverse=True)
    cache = game.alpha_cache
    alphas = np.array([cache.alpha_mask(int(u)) for u in uniq], dtype=np.int16)
    return alphas[inverse.ravel()]


def _relaxed_values(game: GameSpec) -> np.ndarray:
    # Direct per-coalition search on the edge-induced adjacency; independent
    # of the Graph/AlphaCache route taken by ``gamma``.
    g = game.graph
    n = g.n
    ends = g.edges
    out = np.zeros(1 << g.m, dtype=np.int16)
    for F in range(1, 1 << g.m):
        adj = [0] * n
        cover = 0
        for e in iter_bits(F):
            u, v = ends[e]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            cover |= (1 << u) | (1 << v)
        out[F] = alpha_search(adj, cover, {})
    return out


def value_table(game: GameSpec, max_edges: int = MAX_TABLE_EDGES) -> ValueTable:
    if game.m > max_edges:
        raise InstanceTooLargeError("edge count for a value table", game.m, max_edges)
    if game.variant is Variant.STRICT:
        values = _strict_values(game)
    else:
        values = _relaxed_values(game)
    values.setflags(write=False)
    return ValueTable(game, values)
