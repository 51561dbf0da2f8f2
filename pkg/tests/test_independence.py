import itertools
import threading

import pytest
from hypothesis import given, settings, strategies as st

from isgames.errors import InstanceTooLargeError, IsolatedVertexError
from isgames.graph import Graph, components, induced_subgraph, is_star
from isgames.independence import (
    AlphaCache,
    alpha,
    is_koenig_egervary,
    max_matching_size,
    min_edge_cover_size,
)

from brute import brute_alpha, brute_edge_cover, brute_matching
from conftest import C4, K14, K3, P4, complete, path


def test_alpha_examples():
    assert alpha(K3) == 1
    assert alpha(P4) == 2
    assert alpha(C4, []) == 0
    assert alpha(Graph(0, ())) == 0


def test_alpha_rejects_foreign_vertices():
    with pytest.raises(ValueError):
        alpha(P4, [4])


def test_alpha_matches_enumeration_on_all_small_graphs():
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        step = 1 if n <= 5 else 37  # every graph up to n=5, a stride through n=6
        for mask in range(0, 1 << len(pairs), step):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            assert alpha(Graph(n, tuple(edges))) == brute_alpha(range(n), edges)


@settings(max_examples=200)
@given(st.integers(1, 7), st.data())
def test_alpha_monotone_in_vertex_set(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph.from_edges(n, edges)
    u2 = data.draw(st.sets(st.integers(0, n - 1)))
    u1 = data.draw(st.sets(st.sampled_from(sorted(u2)))) if u2 else set()
    cache = AlphaCache(g)
    assert cache.alpha(u1) <= cache.alpha(u2)
    assert cache.alpha(u2) == alpha(induced_subgraph(g, u2).graph)


def test_alpha_of_disjoint_union_is_sum():
    g = Graph.from_edges(9, [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 7), (7, 4), (8, 4)])
    total = sum(alpha(induced_subgraph(g, c).graph) for c in components(g))
    assert alpha(g) == total


def test_alpha_of_star_components_is_edge_count():
    g = Graph.from_edges(8, [(0, 1), (0, 2), (0, 3), (4, 5), (6, 7)])
    assert all(is_star(g, c) for c in components(g))
    assert alpha(g) == g.m


def test_alpha_cache_reuses_entries():
    cache = AlphaCache(complete(6))
    cache.alpha()
    size = len(cache)
    cache.alpha()
    assert len(cache) == size


def test_alpha_cache_concurrent_readers_agree():
    g = path(16)
    cache = AlphaCache(g)
    results = []

    def work():
        results.append(cache.alpha())

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [8] * 8


def test_alpha_size_guard():
    with pytest.raises(InstanceTooLargeError):
        AlphaCache(Graph(25, ()))


@pytest.mark.parametrize("g, expected", [(C4, 2), (K3, 1), (K14, 1)])
def test_matching_examples(g, expected):
    assert max_matching_size(g) == expected == brute_matching(g.edges)


@pytest.mark.parametrize("g, expected", [(K3, 2), (C4, 2), (K14, 4)])
def test_edge_cover_examples(g, expected):
    assert min_edge_cover_size(g) == expected == brute_edge_cover(g.n, g.edges)


def test_edge_cover_rejects_isolated_vertices():
    with pytest.raises(IsolatedVertexError):
        min_edge_cover_size(Graph.from_edges(3, [(0, 1)]))


def test_matching_size_guard():
    with pytest.raises(InstanceTooLargeError):
        max_matching_size(path(26))


def test_matching_matches_enumeration_on_random_graphs():
    import random

    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 9)
        pairs = list(itertools.combinations(range(n), 2))
        edges = [p for p in pairs if rng.random() < 0.4][:12]
        g = Graph.from_edges(n, edges)
        assert max_matching_size(g) == brute_matching(edges)


@pytest.mark.parametrize(
    "g, expected", [(P4, True), (K3, False), (C4, True), (K14, True), (complete(4), False)]
)
def test_koenig_egervary(g, expected):
    assert is_koenig_egervary(g) is expected
    assert (brute_alpha(range(g.n), g.edges) == brute_edge_cover(g.n, g.edges)) is expected
