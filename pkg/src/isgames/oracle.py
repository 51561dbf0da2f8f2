"""Exhaustive ground truth for convexity, concavity and additivity.

The incremental form compares ``v(S+e) - v(S)`` with ``v(T+e) - v(T)`` for
every edge ``e`` and every chain ``S <= T <= E - e``; all ``m * 3^(m-1)``
triples are materialised as index arrays and checked against the value
table. The pairwise form over all ``4^m`` pairs is kept for cross-checks
on small games.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import InstanceTooLargeError
from .games import GameSpec
from .graph import Coalition, CoalitionLike, coalition_bits

MAX_ORACLE_EDGES = 15
MAX_PAIR_EDGES = 10


@dataclass(frozen=True)
class Counterexample:
    """A violated inequality.

    ``kind="incremental"``: ``lhs = v(S+e) - v(S)`` and ``rhs = v(T+e) - v(T)``.
    ``kind="pair"``: ``lhs = v(S) + v(T)`` and ``rhs = v(S&T) + v(S|T)``; ``edge`` is None.
    """

    kind: str
    S: int
    T: int
    lhs: int
    rhs: int
    edge: Optional[int] = None

    def to_dict(self, m: int) -> dict:
        out = {
            "kind": self.kind,
            "S": Coalition(self.S, m).to_list(),
            "T": Coalition(self.T, m).to_list(),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.edge is not None:
            out["edge"] = self.edge
        return out


@dataclass(frozen=True)
class Classification:
    convex: bool
    concave: bool
    additive: bool
    counterexamples: dict = field(default_factory=dict)

    def to_dict(self, m: int) -> dict:
        return {
            "convex": self.convex,
            "concave": self.concave,
            "additive": self.additive,
            "counterexamples": {
                k: (None if c is None else c.to_dict(m))
                for k, c in sorted(self.counterexamples.items())
            },
        }


@lru_cache(maxsize=4)
def _chains(k: int) -> tuple[np.ndarray, np.ndarray]:
    """All pairs ``S <= T`` of ``k``-bit masks, sorted by ``T`` then ``S``."""
    S = np.zeros(1, dtype=np.int64)
    T = np.zeros(1, dtype=np.int64)
    for bit in range(k):
        b = np.int64(1) << bit
        # each position is out of T, in T only, or in both
        S = np.concatenate([S, S, S | b])
        T = np.concatenate([T, T | b, T | b])
    order = np.lexsort((S, T))
    S, T = S[order], T[order]
    S.setflags(write=False)
    T.setflags(write=False)
    return S, T


def _insert_zero_bit(x: np.ndarray, pos: int) -> np.ndarray:
    low = (np.int64(1) << pos) - 1
    return (x & low) | ((x & ~low) << 1)


def _first(mask: np.ndarray) -> Optional[int]:
    idx = int(np.argmax(mask))
    return idx if mask[idx] else None


def classify(game: GameSpec, max_edges: int = MAX_ORACLE_EDGES) -> Classification:
    """Decide convexity, concavity and additivity by full enumeration.

    The reported counterexample for each property is the first violation
    in the order: edge ascending, then ``T`` by bit value, then ``S``.
    """
    m = game.m
    if m > max_edges:
        raise InstanceTooLargeError("edge count for the oracle", m, max_edges)
    values = game.table.values.astype(np.int64)
    S0, T0 = _chains(m - 1) if m else (None, None)
    found: dict[str, Optional[Counterexample]] = {"convex": None, "concave": None, "additive": None}
    for e in range(m):
        if all(found.values()):
            break
        S = _insert_zero_bit(S0, e)
        T = _insert_zero_bit(T0, e)
        bit = np.int64(1) << e
        inc_s = values[S | bit] - values[S]
        inc_t = values[T | bit] - values[T]
        for prop, bad in (
            ("convex", inc_s > inc_t),
            ("concave", inc_s < inc_t),
            ("additive", inc_s != inc_t),
        ):
            if found[prop] is not None:
                continue
            i = _first(bad)
            if i is not None:
                found[prop] = Counterexample(
                    "incremental", int(S[i]), int(T[i]), int(inc_s[i]), int(inc_t[i]), edge=e
                )
    return Classification(
        convex=found["convex"] is None,
        concave=found["concave"] is None,
        additive=found["additive"] is None,
        counterexamples=found,
    )


def classify_pairwise(game: GameSpec, max_edges: int = MAX_PAIR_EDGES) -> Classification:
    """Same decisions from ``v(S) + v(T)`` against ``v(S&T) + v(S|T)`` over all pairs.

    Counterexamples are the first pair in ``(S, T)`` bit-value order.
    """
    m = game.m
    if m > max_edges:
        raise InstanceTooLargeError("edge count for the pairwise oracle", m, max_edges)
    values = game.table.values.astype(np.int64)
    allf = np.arange(1 << m, dtype=np.int64)
    found: dict[str, Optional[Counterexample]] = {"convex": None, "concave": None, "additive": None}
    for s in range(1 << m):
        lhs = values[s] + values
        rhs = values[s & allf] + values[s | allf]
        for prop, bad in (("convex", lhs > rhs), ("concave", lhs < rhs), ("additive", lhs != rhs)):
            if found[prop] is None:
                t = _first(bad)
                if t is not None:
                    found[prop] = Counterexample("pair", s, t, int(lhs[t]), int(rhs[t]))
        if all(found.values()):
            break
    return Classification(
        convex=found["convex"] is None,
        concave=found["concave"] is None,
        additive=found["additive"] is None,
        counterexamples=found,
    )


def check_pair(game: GameSpec, S: CoalitionLike, T: CoalitionLike) -> int:
    """``v(S&T) + v(S|T) - v(S) - v(T)``; negative means convexity fails at ``(S, T)``."""
    s = coalition_bits(S, game.m)
    t = coalition_bits(T, game.m)
    return game.value(s & t) + game.value(s | t) - game.value(s) - game.value(t)
