"""Marginal vectors, Shapley values and core membership, in exact rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import AllocationError, InstanceTooLargeError
from .games import GameSpec
from .graph import Coalition, iter_bits

MAX_SHAPLEY_EDGES = 14
MAX_CORE_EDGES = 20

Allocation = tuple  # tuple[Fraction, ...], indexed by edge


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_allocation(text: str) -> Allocation:
    """One payoff per non-blank line, as ``p/q`` or an integer ``p``."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token or token.startswith("#"):
            continue
        try:
            num, sep, den = token.partition("/")
            out.append(Fraction(int(num), int(den)) if sep else Fraction(int(num)))
        except (ValueError, ZeroDivisionError):
            raise AllocationError(f"line {lineno}: not a rational 'p/q' or integer: {token!r}") from None
    return tuple(out)


def marginal_vector(game: GameSpec, order: Sequence[int]) -> Allocation:
    m = game.m
    if sorted(order) != list(range(m)):
        raise ValueError(f"order {list(order)} is not a permutation of 0..{m - 1}")
    payoff = [Fraction(0)] * m
    prefix = 0
    prev = 0
    for e in order:
        prefix |= 1 << e
        cur = game.value(prefix)
        payoff[e] = Fraction(cur - prev)
        prev = cur
    return tuple(payoff)


def shapley(game: GameSpec, max_edges: int = MAX_SHAPLEY_EDGES) -> Allocation:
    """Subset-formula Shapley value over the full value table."""
    m = game.m
    if m > max_edges:
        raise InstanceTooLargeError("edge count for Shapley", m, max_edges)
    if m == 0:
        return ()
    values = game.table.values.astype(np.int64)
    coalitions = np.arange(1 << m, dtype=np.int64)
    sizes = np.array([int(c).bit_count() for c in range(1 << m)], dtype=np.int64)
    # |S|! (m-|S|-1)! per coalition size; the common factor 1/m! is applied last
    weights = np.array(
        [math.factorial(s) * math.factorial(m - s - 1) for s in range(m)], dtype=np.int64
    )
    total = math.factorial(m)
    phi = []
    for i in range(m):
        bit = 1 << i
        without = coalitions[(coalitions & bit) == 0]
        deltas = values[without | bit] - values[without]
        phi.append(Fraction(int((weights[sizes[without]] * deltas).sum()), total))
    return tuple(phi)


@dataclass(frozen=True)
class CoreVerdict:
    efficient: bool
    rational: bool
    total: Fraction
    grand_value: int
    violating_coalition: Optional[int] = None
    deficit: Optional[Fraction] = None

    @property
    def in_core(self) -> bool:
        return self.efficient and self.rational

    def to_dict(self, m: int) -> dict:
        return {
            "efficient": self.efficient,
            "rational": self.rational,
            "in_core": self.in_core,
            "total": format_rational(self.total),
            "grand_value": self.grand_value,
            "violating_coalition": (
                None if self.violating_coalition is None
                else Coalition(self.violating_coalition, m).to_list()
            ),
            "deficit": None if self.deficit is None else format_rational(self.deficit),
        }


def _subset_sums(x: Sequence[int], m: int) -> np.ndarray:
    sums = np.zeros(1 << m, dtype=object if max(map(abs, x), default=0) > 1 << 40 else np.int64)
    for i in range(m):
        half = 1 << i
        sums[half:2 * half] = sums[:half] + x[i]
    return sums


def core_check(game: GameSpec, x: Sequence, max_edges: int = MAX_CORE_EDGES) -> CoreVerdict:
    """Efficiency and coalitional rationality of ``x`` against every coalition.

    The violating coalition reported is the one with the smallest bit value.
    """
    m = game.m
    if len(x) != m:
        raise AllocationError(f"allocation has {len(x)} entries, the game has {m} players")
    if m > max_edges:
        raise InstanceTooLargeError("edge count for core check", m, max_edges)
    x = [Fraction(v) for v in x]
    scale = math.lcm(*(v.denominator for v in x)) if x else 1
    scaled = [int(v * scale) for v in x]
    values = game.table.values
    sums = _subset_sums(scaled, m)
    short = sums < values.astype(sums.dtype) * scale
    total = Fraction(sum(scaled), scale)
    grand = int(values[-1])
    bad = np.flatnonzero(short)
    if len(bad):
        F = int(bad[0])
        deficit = Fraction(int(values[F]) * scale - int(sums[F]), scale)
        return CoreVerdict(total == grand, False, total, grand, F, deficit)
    return CoreVerdict(total == grand, True, total, grand)


def coalition_payoff(x: Sequence, F: int) -> Fraction:
    return sum((Fraction(x[i]) for i in iter_bits(F)), Fraction(0))
