import itertools

import pytest

from isgames.errors import InstanceTooLargeError
from isgames.games import GameSpec
from isgames.graph import Coalition
from isgames.oracle import Counterexample, check_pair, classify, classify_pairwise

from brute import brute_is_additive, brute_is_convex, brute_value
from conftest import C4, K3, P4, complete, path


def first_incremental_violation(g, variant, bad):
    """Reference scan in the documented order, on plain Python sets."""
    m = g.m
    val = {F: brute_value(g, variant, [i for i in range(m) if F >> i & 1]) for F in range(1 << m)}
    for e in range(m):
        rest = [i for i in range(m) if i != e]
        masks = sorted(sum(1 << i for i in c) for k in range(m) for c in itertools.combinations(rest, k))
        for T in masks:
            for S in masks:
                if S & ~T:
                    continue
                lhs = val[S | 1 << e] - val[S]
                rhs = val[T | 1 << e] - val[T]
                if bad(lhs, rhs):
                    return Counterexample("incremental", S, T, lhs, rhs, edge=e)
    return None


def test_c4_strict():
    result = classify(GameSpec(C4))
    assert not result.convex and not result.concave and not result.additive
    # e = {0,1}, S = {{1,2}}, T = {{1,2},{2,3}}: increments 1 and 0
    assert result.counterexamples["convex"] == Counterexample("incremental", 0b0010, 0b0110, 1, 0, edge=0)


def test_c4_other_listed_violation_replays():
    game = GameSpec(C4)
    e, S, T = 3, 0b0001, 0b0011  # e = {0,3}, S = {{0,1}}, T = {{0,1},{1,2}}
    assert game.value(S | 1 << e) - game.value(S) == 1
    assert game.value(T | 1 << e) - game.value(T) == 0


def test_p4_strict_is_additive():
    result = classify(GameSpec(P4))
    assert (result.convex, result.concave, result.additive) == (True, True, True)
    assert all(c is None for c in result.counterexamples.values())


def test_k3_relaxed_not_convex():
    assert not classify(GameSpec(K3, "relaxed")).convex


@pytest.mark.parametrize("g", [C4, P4, K3, path(5), complete(4)])
@pytest.mark.parametrize("variant", ["strict", "relaxed"])
def test_first_counterexample_matches_reference_scan(g, variant):
    result = classify(GameSpec(g, variant))
    for prop, bad in (
        ("convex", lambda a, b: a > b),
        ("concave", lambda a, b: a < b),
        ("additive", lambda a, b: a != b),
    ):
        assert result.counterexamples[prop] == first_incremental_violation(g, variant, bad)


def test_check_pair_examples():
    game = GameSpec(C4)
    delta0, delta1 = Coalition.of([0, 3], 4), Coalition.of([0, 1], 4)
    assert check_pair(game, delta0, delta1) == -1
    for F in range(16):
        assert check_pair(game, F, F) == 0
    # vertex 0 of C4 has no pendant neighbour: split its two edges
    assert check_pair(game, [0], [3]) == 1


def test_pairwise_and_incremental_agree(corpus):
    for g in corpus:
        if g.m > 8:
            continue
        for variant in ("strict", "relaxed"):
            game = GameSpec(g, variant)
            inc, pair = classify(game), classify_pairwise(game)
            assert (inc.convex, inc.concave, inc.additive) == (pair.convex, pair.concave, pair.additive)
            assert inc.additive == (inc.convex and inc.concave)


def test_agrees_with_frozenset_reference(corpus):
    for g in corpus:
        if g.m > 6:
            continue
        for variant in ("strict", "relaxed"):
            def value(F, g=g, variant=variant):
                return brute_value(g, variant, sorted(F))

            result = classify(GameSpec(g, variant))
            assert result.convex == brute_is_convex(g.m, value)
            assert result.additive == brute_is_additive(g.m, value)


def test_counterexamples_replay_fresh(corpus):
    for g in corpus:
        if g.m > 9:
            continue
        for variant in ("strict", "relaxed"):
            result = classify(GameSpec(g, variant))
            for c in result.counterexamples.values():
                if c is None:
                    continue
                assert c.S & ~c.T == 0 and not (c.T >> c.edge & 1)
                S, T, e = c.S, c.T, c.edge
                bits = lambda F: [i for i in range(g.m) if F >> i & 1]  # noqa: E731
                lhs = brute_value(g, variant, bits(S | 1 << e)) - brute_value(g, variant, bits(S))
                rhs = brute_value(g, variant, bits(T | 1 << e)) - brute_value(g, variant, bits(T))
                assert (lhs, rhs) == (c.lhs, c.rhs)


def test_pair_counterexample_replays():
    result = classify_pairwise(GameSpec(C4))
    c = result.counterexamples["convex"]
    assert c.kind == "pair"
    assert check_pair(GameSpec(C4), c.S, c.T) == c.rhs - c.lhs < 0


def test_to_dict():
    d = classify(GameSpec(C4)).to_dict(4)
    assert d["convex"] is False
    assert d["counterexamples"]["convex"] == {"kind": "incremental", "S": [1], "T": [1, 2], "lhs": 1, "rhs": 0, "edge": 0}


def test_size_guards():
    with pytest.raises(InstanceTooLargeError):
        classify(GameSpec(path(17)))
    with pytest.raises(InstanceTooLargeError):
        classify_pairwise(GameSpec(path(12)))
