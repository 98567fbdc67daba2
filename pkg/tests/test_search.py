from itertools import combinations

import numpy as np
import pytest

from transub.bounds import best_bound
from transub.digraph import (Digraph, directed_cycle, paley_tournament, random_oriented_graph,
                             transitive_tournament)
from transub.search import (balance_check, is_transitive_set, max_transitive_bb,
                            max_transitive_brute, transitive_order, verify_transitive)
from transub.spectral import quadratic_form_SS


def naive_max(g):
    """Largest subset that passes the order-free definition, checked by itertools."""
    for k in range(g.v, 0, -1):
        for sub in combinations(range(g.v), k):
            if is_transitive_set(g, sub):
                return k
    return 0


def test_verify_transitive_examples():
    assert not verify_transitive(directed_cycle(3), [0, 1, 2])
    assert not is_transitive_set(directed_cycle(3), [0, 1, 2])
    g = paley_tournament(7)
    for x, y in combinations(range(7), 2):
        order = [y, x] if g.adj[x, y] else [x, y]
        assert verify_transitive(g, order)
    assert verify_transitive(transitive_tournament(6), range(6))
    assert not verify_transitive(transitive_tournament(6), [1, 0])


def test_verify_transitive_errors():
    g = transitive_tournament(3)
    with pytest.raises(ValueError):
        verify_transitive(g, [0, 0])
    with pytest.raises(ValueError):
        verify_transitive(g, [0, 5])


def test_non_adjacent_pair_not_transitive():
    g = Digraph(np.zeros((2, 2), dtype=bool))
    assert not is_transitive_set(g, [0, 1])
    assert is_transitive_set(g, [1])


def test_transitive_order_sorts_sink_first():
    g = transitive_tournament(5)
    assert transitive_order(g, [3, 0, 4, 1]) == [0, 1, 3, 4]


@pytest.mark.parametrize("q,expected", [(7, 3), (11, 4), (19, 5)])
def test_brute_paley(paley, q, expected):
    res = max_transitive_brute(paley[q])
    assert res.max_size == expected and res.method == "brute"
    assert verify_transitive(paley[q], res.witness)


@pytest.mark.parametrize("q,expected", [(7, 3), (11, 4), (19, 5), (23, 5), (27, 5), (31, 7)])
def test_bb_paley(paley, q, expected):
    res = max_transitive_bb(paley[q])
    assert res.max_size == expected and not res.time_limited
    assert verify_transitive(paley[q], res.witness)


def test_brute_guard():
    with pytest.raises(ValueError):
        max_transitive_brute(paley_tournament(23))


def test_brute_matches_naive_definition(random_tournaments, random_digraphs):
    for g in [*random_tournaments[:40], *random_digraphs]:
        if g.v <= 9:
            assert max_transitive_brute(g).max_size == naive_max(g)


def test_bb_matches_brute_on_tournaments(random_tournaments, paley):
    mismatches = 0
    for g in [*random_tournaments, paley[7], paley[11], paley[19]]:
        a, b = max_transitive_bb(g), max_transitive_brute(g)
        mismatches += a.max_size != b.max_size
        assert verify_transitive(g, a.witness) and verify_transitive(g, b.witness)
    assert mismatches == 0


@pytest.mark.parametrize("use_bounds", [True, False])
def test_bb_matches_brute_on_oriented_graphs(random_digraphs, use_bounds):
    for g in random_digraphs:
        a = max_transitive_bb(g, use_bounds=use_bounds)
        assert a.max_size == max_transitive_brute(g).max_size
        assert verify_transitive(g, a.witness)


def test_bb_is_deterministic(paley):
    assert max_transitive_bb(paley[27]) == max_transitive_bb(paley[27])


def test_bb_time_limit_marks_result():
    rng = np.random.default_rng(1)
    g = random_oriented_graph(90, rng, density=0.9)
    res = max_transitive_bb(g, time_limit=0.0, use_bounds=False)
    assert res.time_limited
    assert verify_transitive(g, res.witness)


def test_deleting_vertex_never_increases(random_tournaments):
    for g in random_tournaments[:30]:
        if g.v < 2:
            continue
        full = max_transitive_brute(g).max_size
        for x in range(g.v):
            assert max_transitive_brute(g.delete_vertex(x)).max_size <= full


def test_search_respects_bounds(random_tournaments, paley):
    for g in [*random_tournaments, *paley.values()]:
        assert max_transitive_bb(g, use_bounds=False).max_size <= best_bound(g).best


def test_balance_check_regular_tournament(paley):
    for q in (7, 11, 19):
        g = paley[q]
        res = max_transitive_bb(g)
        rep = balance_check(g, res.witness)
        assert all(a + b == res.max_size for a, b in rep.counts.values())
        if res.max_size % 2:
            assert not rep.all_balanced


def test_balance_equality_matches_quadratic_form(random_tournaments):
    seen_balanced = 0
    for g in random_tournaments:
        for sub in ([0, 1], [0, 1, 2]):
            if g.v <= max(sub) or not is_transitive_set(g, sub):
                continue
            order = transitive_order(g, sub)
            rep = balance_check(g, order)
            s = len(order)
            eq = quadratic_form_SS(g, order) == s * (s * s - 1) // 3
            assert eq == rep.all_balanced
            seen_balanced += rep.all_balanced
    assert seen_balanced > 0


def test_balance_check_rejects_bad_witness():
    with pytest.raises(ValueError):
        balance_check(directed_cycle(3), [0, 1, 2])


def test_result_json(paley):
    import json
    d = json.loads(max_transitive_bb(paley[7]).to_json())
    assert set(d) == {"max_size", "witness", "nodes_explored", "method", "time_limited"}
