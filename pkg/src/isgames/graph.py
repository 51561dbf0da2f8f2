"""Simple undirected graphs, edge coalitions and the structural helpers
the games are built on.

Vertices are ``0..n-1`` and edges are indexed ``0..m-1`` in input order.
Vertex and edge sets travel through the hot paths as Python ``int``
bitmasks; the public functions return sorted tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

import numpy as np

from .errors import (
    DuplicateEdgeError,
    EdgeCountError,
    HeaderError,
    InstanceTooLargeError,
    NotAComponentError,
    SelfLoopError,
    VertexRangeError,
)

MAX_CANON_VERTICES = 8


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with a stable edge indexing.

    Build instances through :meth:`from_edges` (or :func:`parse_graph`);
    it normalises every pair to ``(u, v)`` with ``u < v`` and rejects
    self-loops, duplicates and out-of-range endpoints.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        normalised = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            normalised.append(pair)
        return cls(n, tuple(normalised))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a vertex bitmask."""
        return tuple(mask_of(nb) for nb in self.adjacency)

    @cached_property
    def inc_masks(self) -> tuple[int, ...]:
        """Incident edges of each vertex as an edge bitmask."""
        return tuple(mask_of(inc) for inc in self.incidence)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.degrees) if d == 0)

    def edge_index(self, u: int, v: int) -> int:
        pair = (u, v) if u < v else (v, u)
        return self.edges.index(pair)

    def to_text(self) -> str:
        """Render in the edge-list format accepted by :func:`parse_graph`."""
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Coalition:
    """A set of edge indices of a host graph with ``width`` edges."""

    bits: int
    width: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"coalition bits {self.bits:#x} exceed width {self.width}")

    @classmethod
    def of(cls, edges: Iterable[int], width: int) -> "Coalition":
        return cls(mask_of(edges), width)

    @classmethod
    def full(cls, width: int) -> "Coalition":
        return cls((1 << width) - 1, width)

    @classmethod
    def empty(cls, width: int) -> "Coalition":
        return cls(0, width)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.width and bool(self.bits >> e & 1)

    def __int__(self) -> int:
        return self.bits

    def _other(self, other: "Coalition") -> int:
        if other.width != self.width:
            raise ValueError("coalitions of different widths")
        return other.bits

    def __or__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits | self._other(other), self.width)

    def __and__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits & self._other(other), self.width)

    def __sub__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits & ~self._other(other), self.width)

    def issubset(self, other: "Coalition") -> bool:
        return self.bits & ~self._other(other) == 0

    def with_edge(self, e: int) -> "Coalition":
        return Coalition(self.bits | 1 << e, self.width)

    def to_list(self) -> list[int]:
        return list(self)


CoalitionLike = Union[Coalition, int, Iterable[int]]


def coalition_bits(F: CoalitionLike, m: int) -> int:
    """Normalise a coalition given as ``Coalition``, bitmask or index list."""
    if isinstance(F, Coalition):
        if F.width != m:
            raise ValueError(f"coalition width {F.width} does not match m={m}")
        bits = F.bits
    elif isinstance(F, (int, np.integer)):
        bits = int(F)
    else:
        bits = 0
        for e in F:
            if not 0 <= e < m:
                raise ValueError(f"edge index {e} outside 0..{m - 1}")
            bits |= 1 << e
    if bits < 0 or bits >> m:
        raise ValueError(f"coalition {bits:#x} is not a subset of the {m} edges")
    return bits


# -- parsing ---------------------------------------------------------------


def _ints(tokens: list[str], lineno: int, what: str) -> list[int]:
    try:
        return [int(t, 10) for t in tokens]
    except ValueError:
        raise (HeaderError if what == "header" else VertexRangeError)(
            f"{what} must be base-10 integers, got {' '.join(tokens)!r}", lineno
        ) from None


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    The first non-comment line is ``"n m"``; exactly ``m`` lines ``"u v"``
    follow. Lines starting with ``#`` and blank lines are ignored.
    """
    lines = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise HeaderError("missing 'n m' header")
    lineno, tokens = lines[0]
    if len(tokens) != 2:
        raise HeaderError(f"header must be 'n m', got {' '.join(tokens)!r}", lineno)
    n, m = _ints(tokens, lineno, "header")
    if n < 0 or m < 0:
        raise HeaderError("header values must be non-negative", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise EdgeCountError(f"header declares {m} edges, found {len(body)}", where)

    seen: dict[tuple[int, int], int] = {}
    edges = []
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise VertexRangeError(f"edge line must be 'u v', got {' '.join(tokens)!r}", lineno)
        u, v = _ints(tokens, lineno, "edge endpoints")
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexRangeError(f"vertex {x} outside 0..{n - 1}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise DuplicateEdgeError(f"duplicate edge {u} {v} (first on line {seen[pair]})", lineno)
        seen[pair] = lineno
        edges.append(pair)
    return Graph(n, tuple(edges))


# -- degree structure ------------------------------------------------------


def pendant_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v, d in enumerate(g.degrees) if d == 1)


def pendant_edge_mask(g: Graph) -> int:
    deg = g.degrees
    return mask_of(i for i, (u, v) in enumerate(g.edges) if deg[u] == 1 or deg[v] == 1)


def pendant_edges(g: Graph) -> Coalition:
    return Coalition(pendant_edge_mask(g), g.m)


def exclusive_mask(g: Graph, F: int) -> int:
    """Vertex bitmask of the vertices whose incident edges all lie in ``F``.

    Isolated vertices are always included (their incident set is empty).
    """
    out = 0
    for v, inc in enumerate(g.inc_masks):
        if inc & F == inc:
            out |= 1 << v
    return out


def exclusive_vertices(g: Graph, F: CoalitionLike) -> tuple[int, ...]:
    return tuple(iter_bits(exclusive_mask(g, coalition_bits(F, g.m))))


# -- subgraphs -------------------------------------------------------------


class Subgraph(NamedTuple):
    graph: Graph
    labels: tuple[int, ...]  # labels[i] is the host vertex of subgraph vertex i


def induced_subgraph(g: Graph, U: Iterable[int]) -> Subgraph:
    verts = sorted(set(U))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Subgraph(Graph(len(verts), edges), tuple(verts))


def edge_induced_subgraph(g: Graph, F: CoalitionLike) -> Subgraph:
    bits = coalition_bits(F, g.m)
    chosen = [g.edges[i] for i in iter_bits(bits)]
    verts = sorted({x for e in chosen for x in e})
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple((index[u], index[v]) for u, v in chosen)
    return Subgraph(Graph(len(verts), edges), tuple(verts))


def components(g: Graph) -> list[tuple[int, ...]]:
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj_masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_star(g: Graph, U: Iterable[int]) -> bool:
    """Whether the component ``U`` of ``g`` induces a star ``K_{1,k}``, k >= 1."""
    verts = tuple(sorted(set(U)))
    if verts not in components(g):
        raise NotAComponentError(f"{list(verts)} is not a connected component")
    if len(verts) < 2:
        return False
    members = set(verts)
    comp_edges = [e for e in g.edges if e[0] in members]
    if len(comp_edges) != len(verts) - 1:
        return False
    return any(all(c in e for e in comp_edges) for c in comp_edges[0])


# -- canonical form --------------------------------------------------------


class CanonKey(NamedTuple):
    """Lexicographically minimal upper-triangle adjacency string.

    ``code`` lists the pairs ``(0,1), (0,2), ..., (n-2,n-1)`` row by row.
    Keys order by ``(n, code)``.
    """

    n: int
    code: str

    def to_graph(self) -> Graph:
        pairs = itertools.combinations(range(self.n), 2)
        return Graph(self.n, tuple(p for p, c in zip(pairs, self.code) if c == "1"))


def _pair_position(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def _permutation_weights(n: int) -> np.ndarray:
    """``W[p, k]``: weight of labelled pair ``p`` in the code under permutation ``k``.

    Codes put pair position 0 in the most significant bit, so the integer
    minimum over permutations is the lexicographic minimum string.
    """
    npairs = n * (n - 1) // 2
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    w = np.zeros((npairs, len(perms)), dtype=np.float64)
    for k, pi in enumerate(perms):
        for p, (i, j) in enumerate(pairs):
            w[p, k] = float(1 << (npairs - 1 - _pair_position(n, pi[i], pi[j])))
    return w


def canonical_codes(n: int, masks: np.ndarray, chunk: int = 4096) -> np.ndarray:
    """Canonical code integers for a batch of labelled graphs on ``n`` vertices.

    Bit ``p`` of each input mask marks pair position ``p``. Returns the
    minimum code integer over all ``n!`` relabelings, per mask.
    """
    if n > MAX_CANON_VERTICES:
        raise InstanceTooLargeError("vertex count for canonical form", n, MAX_CANON_VERTICES)
    masks = np.asarray(masks, dtype=np.int64)
    npairs = n * (n - 1) // 2
    if npairs == 0:
        return np.zeros(len(masks), dtype=np.int64)
    w = _permutation_weights(n)
    shifts = np.arange(npairs, dtype=np.int64)
    out = np.empty(len(masks), dtype=np.int64)
    for start in range(0, len(masks), chunk):
        block = masks[start:start + chunk]
        bits = ((block[:, None] >> shifts[None, :]) & 1).astype(np.float64)
        out[start:start + chunk] = (bits @ w).min(axis=1).astype(np.int64)
    return out


def code_to_key(n: int, code: int) -> CanonKey:
    npairs = n * (n - 1) // 2
    return CanonKey(n, format(int(code), f"0{npairs}b") if npairs else "")


def pair_mask(g: Graph) -> int:
    """Labelled adjacency as a bitmask over upper-triangle pair positions."""
    return mask_of(_pair_position(g.n, u, v) for u, v in g.edges)


def canonical_form(g: Graph) -> CanonKey:
    if g.n > MAX_CANON_VERTICES:
        raise InstanceTooLargeError("vertex count for canonical form", g.n, MAX_CANON_VERTICES)
    code = canonical_codes(g.n, np.array([pair_mask(g)]))[0]
    return code_to_key(g.n, code)
