"""Structural recognizers for convexity, additivity and balancedness.

Each recognizer is a degree/adjacency scan; when the answer is negative
it returns a certificate that can be re-checked against the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import IsolatedVertexError
from .graph import Graph, components, is_star
from .independence import is_koenig_egervary


@dataclass(frozen=True)
class Verdict:
    """A yes/no decision with a witness whenever the answer is no.

    ``kind`` is ``"edge"`` (``witness`` = edge index), ``"vertex"``
    (vertex id), ``"K3"`` or ``"P4"`` (vertex tuple; for ``P4`` in path
    order), or ``None`` for positive decisions.
    """

    decision: bool
    kind: Optional[str] = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.decision

    def certificate(self, g: Graph) -> Optional[dict]:
        if self.kind is None:
            return None
        if self.kind == "edge":
            return {"kind": "edge", "edge": self.witness, "endpoints": list(g.edges[self.witness])}
        if self.kind == "vertex":
            return {"kind": "vertex", "vertex": self.witness}
        return {"kind": self.kind, "vertices": list(self.witness)}

    def describe(self, g: Graph) -> str:
        if self.kind is None:
            return ""
        if self.kind == "edge":
            u, v = g.edges[self.witness]
            return f"edge {self.witness} ({u}-{v})"
        if self.kind == "vertex":
            return f"vertex {self.witness}"
        return f"{self.kind} {'-'.join(map(str, self.witness))}"


YES = Verdict(True)


def _check(g: Graph) -> None:
    iso = g.isolated_vertices()
    if iso:
        raise IsolatedVertexError(iso)


def _has_pendant_neighbour(g: Graph, v: int) -> bool:
    deg = g.degrees
    return any(deg[w] == 1 for w in g.adjacency[v])


def strict_convex(g: Graph) -> Verdict:
    """Every non-pendant edge must share an endpoint with a pendant edge."""
    _check(g)
    deg = g.degrees
    for i, (u, v) in enumerate(g.edges):
        if deg[u] == 1 or deg[v] == 1:
            continue
        # e is non-pendant, so any pendant edge at u or v ends in a degree-1 neighbour
        if not (_has_pendant_neighbour(g, u) or _has_pendant_neighbour(g, v)):
            return Verdict(False, "edge", i)
    return YES


def strict_additive(g: Graph) -> Verdict:
    """Every non-pendant vertex must be adjacent to a pendant vertex."""
    _check(g)
    for v, d in enumerate(g.degrees):
        if d >= 2 and not _has_pendant_neighbour(g, v):
            return Verdict(False, "vertex", v)
    return YES


def forbidden_subgraph(g: Graph) -> Optional[tuple[str, tuple[int, ...]]]:
    """A ``K3`` or ``P4`` subgraph of ``g``, or ``None`` if every component is a star.

    Scans edges by index inside non-star components; for each edge a
    closing triangle is tried before a path through it as the middle edge.
    """
    bad = set()
    for comp in components(g):
        if len(comp) > 1 and not is_star(g, comp):
            bad.update(comp)
    if not bad:
        return None
    adj = g.adjacency
    for u, v in g.edges:
        if u not in bad:
            continue
        common = sorted(set(adj[u]) & set(adj[v]))
        if common:
            return "K3", tuple(sorted((u, v, common[0])))
        for a in adj[u]:
            if a == v:
                continue
            for b in adj[v]:
                if b != u and b != a:
                    return "P4", (a, u, v, b)
    raise AssertionError("non-star component without K3 or P4")  # pragma: no cover


def relaxed_convex(g: Graph) -> Verdict:
    _check(g)
    found = forbidden_subgraph(g)
    if found is None:
        return YES
    return Verdict(False, *found)


def relaxed_additive(g: Graph) -> Verdict:
    # additivity and convexity of the relaxed game share the same characterization
    return relaxed_convex(g)


def strict_balanced(g: Graph) -> bool:
    _check(g)
    return is_koenig_egervary(g)
