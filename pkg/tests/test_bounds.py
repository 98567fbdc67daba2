import math

import numpy as np
import pytest

from transub.bounds import (BoundReport, best_bound, drt_bound_exact, drt_upper_bound,
                            exact_integer_eigenvalue_sq, hoffman_general, hoffman_regular,
                            hoffman_value, interlacing_bound, interlacing_value, parity_refine)
from transub.digraph import (Digraph, classify, directed_cycle, paley_tournament,
                             random_oriented_graph, random_tournament, transitive_tournament)
from transub.search import max_transitive
from transub.spectral import spectrum

TABLE1 = {7: 4.346, 11: 5.363, 15: 6.216, 19: 6.965, 23: 7.641, 27: 8.261, 31: 8.839, 35: 9.380}


def quadratic_root_oracle(alpha, gamma, v):
    """Largest root of v s^2 - 3(alpha^2 - gamma^2) s - v(3 gamma^2 + 1)."""
    roots = np.roots([v, -3 * (alpha ** 2 - gamma ** 2), -v * (3 * gamma ** 2 + 1)])
    return max(roots.real)


@pytest.mark.parametrize("v,value", TABLE1.items())
def test_table1_values(v, value):
    raw = interlacing_value(math.sqrt(v))
    assert abs(raw - value) < 1e-3
    assert math.floor(raw * 1000) / 1000 == pytest.approx(value)


@pytest.mark.parametrize("q", [7, 11, 19, 23, 27, 31])
def test_interlacing_on_drt(paley, q):
    rep = interlacing_bound(spectrum(paley[q]))
    assert rep.raw_value == pytest.approx(interlacing_value(math.sqrt(q)), abs=1e-9)
    assert rep.integer_bound == math.floor(rep.raw_value)


def test_interlacing_table1_columns_agree():
    # spectrum of any DRT of order v is {sqrt v, 0, -sqrt v}; 15 and 35 have no Paley graph,
    # so build a stand-in spectrum check from the closed form
    for v, value in TABLE1.items():
        assert math.floor(interlacing_value(math.sqrt(v))) == math.floor(value)


@pytest.mark.parametrize("s", range(1, 13))
def test_interlacing_tight_on_transitive(s):
    assert interlacing_bound(spectrum(transitive_tournament(s))).integer_bound >= s


def test_interlacing_empty_graph():
    rep = interlacing_bound(spectrum(Digraph(np.zeros((4, 4), dtype=bool))))
    assert rep.integer_bound == 1 and rep.raw_value == pytest.approx(1)


def test_hoffman_general_regular_reduces():
    g = paley_tournament(11)
    sp = spectrum(g)
    gen = hoffman_general(sp, 11)
    reg = hoffman_regular(math.sqrt(11), 11)
    assert gen.applicable and gen.raw_value == pytest.approx(reg.raw_value, rel=1e-12)


def test_hoffman_general_vertex_deleted_paley7():
    g = paley_tournament(7).delete_vertex(0)
    rep = hoffman_general(spectrum(g), g.v)
    assert rep.applicable
    assert rep.raw_value == pytest.approx((-3 + math.sqrt(97)) / 2, abs=1e-9)
    assert rep.raw_value == pytest.approx(quadratic_root_oracle(1, math.sqrt(7), 6), abs=1e-9)
    assert rep.integer_bound == 3


def test_hoffman_value_matches_quadratic_oracle():
    rng = np.random.default_rng(5)
    for _ in range(200):
        gamma = rng.uniform(0, 10)
        alpha = rng.uniform(0, gamma)
        v = int(rng.integers(2, 500))
        assert hoffman_value(alpha, gamma, v) == pytest.approx(quadratic_root_oracle(alpha, gamma, v), rel=1e-9)


def test_hoffman_alpha_equals_gamma():
    for gamma in (0.0, 1.0, 2.5):
        assert hoffman_value(gamma, gamma, 17) == pytest.approx(math.sqrt(1 + 3 * gamma ** 2))


def test_hoffman_general_not_applicable_when_all_main():
    # transitive tournament on 2 vertices: both eigenvalues +-1 are main
    rep = hoffman_general(spectrum(transitive_tournament(2)))
    assert not rep.applicable and rep.integer_bound is None


def test_hoffman_general_flags_alpha_above_gamma():
    found = False
    rng = np.random.default_rng(0)
    for _ in range(200):
        g = random_tournament(int(rng.integers(3, 9)), rng)
        sp = spectrum(g)
        if sp.non_main_set.size and sp.main_set.max() > sp.non_main_set.max():
            assert not hoffman_general(sp).applicable
            found = True
    assert found


def test_hoffman_regular_examples():
    assert hoffman_regular(0.0, 9).raw_value == pytest.approx(1)
    v = 7
    rep = hoffman_regular(math.sqrt(v), v, v)
    assert rep.raw_value == pytest.approx((-3 + math.sqrt(97)) / 2)
    assert rep.integer_bound == 3 and not rep.exact
    for v in (7, 23, 31, 71):
        assert hoffman_regular(math.sqrt(v), v).raw_value == pytest.approx((-3 + math.sqrt(13 + 12 * v)) / 2)


@pytest.mark.parametrize("v,expected", [(7, 3), (11, 4), (15, 5), (19, 6), (23, 7), (27, 7), (31, 8), (35, 8)])
def test_drt_bound_exact(v, expected):
    assert drt_bound_exact(v).integer_bound == expected


def test_drt_bound_exact_23_is_exact_integer():
    rep = drt_bound_exact(23)
    assert rep.exact and rep.integer_bound == 7  # 13 + 276 = 289 = 17^2


def test_drt_bound_rejects_bad_v():
    with pytest.raises(ValueError):
        drt_bound_exact(9)


def test_drt_exact_agrees_with_float_floor():
    prev = 0
    for v in range(3, 100_001, 4):
        exact = drt_bound_exact(v)
        assert exact.integer_bound == math.floor(hoffman_regular(math.sqrt(v), v).raw_value + 1e-9)
        assert exact.integer_bound == hoffman_regular(math.sqrt(v), v, v).integer_bound
        assert exact.integer_bound >= prev
        prev = exact.integer_bound


def test_parity_refine():
    assert parity_refine(drt_bound_exact(23), True).integer_bound == 6
    assert "parity" in parity_refine(drt_bound_exact(23), True).notes
    assert parity_refine(drt_bound_exact(23), False).integer_bound == 7
    assert parity_refine(drt_bound_exact(7), True).integer_bound == 3
    even = BoundReport("drt", 8.0, 8, True, exact=True)
    assert parity_refine(even, True).integer_bound == 8


def test_exact_integer_eigenvalue():
    assert exact_integer_eigenvalue_sq(paley_tournament(11), math.sqrt(11)) == 11
    # rotational tournament on 5 vertices has irrational Seidel eigenvalues
    a = np.zeros((5, 5), dtype=bool)
    for i in range(5):
        a[i, (i + 1) % 5] = a[i, (i + 2) % 5] = True
    g = Digraph(a)
    assert exact_integer_eigenvalue_sq(g, spectrum(g).theta_max) is None


def test_best_bound_examples():
    assert best_bound(paley_tournament(7)).best == 3
    s27 = best_bound(paley_tournament(27))
    assert s27.best == 7
    assert s27.by_method("thm54").integer_bound == 7
    assert s27.by_method("bip").integer_bound == 7
    assert best_bound(Digraph([[0]])).best == 1


def test_best_bound_paley23_parity():
    s = best_bound(paley_tournament(23))
    assert s.by_method("drt").integer_bound == 6
    assert s.by_method("hoffman_regular").integer_bound == 6
    assert s.best == 6


def test_best_bound_method_filter():
    s = best_bound(paley_tournament(7), ["interlacing"])
    assert [r.method for r in s.reports] == ["interlacing"] and s.best == 4
    s = best_bound(transitive_tournament(5), ["drt", "bip"])
    assert not any(r.applicable for r in s.reports) and s.best == 5
    with pytest.raises(ValueError):
        best_bound(transitive_tournament(3), ["nope"])


def test_drt_upper_bound_table2_row():
    assert [drt_upper_bound(v).best for v in range(7, 36, 4)] == [3, 4, 5, 6, 6, 7, 8, 8]


def test_soundness_small_graphs(paley):
    rng = np.random.default_rng(99)
    graphs = [random_tournament(int(rng.integers(2, 16)), rng) for _ in range(60)]
    graphs += [random_oriented_graph(int(rng.integers(2, 14)), rng) for _ in range(30)]
    graphs += [directed_cycle(n) for n in range(3, 10)]
    graphs += [paley[q] for q in (3, 7, 11)]
    graphs += [paley[7].delete_vertex(0), paley[11].delete_vertex(5)]
    for g in graphs:
        exact = max_transitive(g).max_size
        summary = best_bound(g)
        for r in summary.reports:
            if r.applicable:
                assert r.integer_bound >= exact, (r, g.adj)
                assert r.integer_bound <= math.floor(r.raw_value + 1e-9)
        assert exact <= summary.best <= g.v


def test_parity_refine_needs_an_outside_vertex():
    # single vertex: regular tournament with exact bound 1 = v, nothing to balance
    rep = hoffman_regular(0.0, 1, 0)
    assert rep.exact and rep.integer_bound == 1
    assert parity_refine(rep, True, v=1).integer_bound == 1
    assert parity_refine(drt_bound_exact(23), True, v=23).integer_bound == 6
