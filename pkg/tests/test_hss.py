import copy

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reedlab.exact import chromatic_number_of
from reedlab.graph import Graph, complete, cycle, empty, gnp, max_degree, star
from reedlab.hss import MalformedTrace, Pick, run_hss, union_s, verify_trace

from helpers import graphs


def test_k5_hand_execution():
    t = run_hss(complete(5), 2)
    assert t.stable_sets == [[0], [1], [2], [3]]
    assert t.remainders[-1] == [4]
    # Δ(G_r) = 4 - r for every recorded pick round
    assert [p.degree for p in t.pick_log] == [4, 3, 2, 1]
    assert union_s(t) == [0, 1, 2, 3]
    assert verify_trace(complete(5), t) == []


def test_c5_hand_execution():
    # vertices 1..5 in the hand run are 0..4 here
    t = run_hss(cycle(5), 1)
    assert t.stable_sets == [[0, 2], [3]]
    assert t.remainders == [[0, 1, 2, 3, 4], [1, 3, 4], [1, 4]]
    assert union_s(t) == [0, 2, 3]


def test_edgeless_absorbed_in_round_zero():
    t = run_hss(empty(4), 1)
    assert t.stable_sets == [[0, 1, 2, 3], []]
    assert t.remainders[-1] == []
    assert verify_trace(empty(4), t) == []


def test_star_round_one_is_empty():
    t = run_hss(star(3), 1)
    assert t.stable_sets == [[0], []]
    assert verify_trace(star(3), t) == []


def test_empty_trace_union():
    t = run_hss(Graph(0, ()), 2)
    assert union_s(t) == []
    assert t.stable_sets == [[], [], [], []]


def test_tie_break_prefers_higher_g_degree():
    g = Graph.from_edges(6, [(0, 2), (0, 3), (0, 4), (2, 5), (3, 5)])
    t = run_hss(g, 2)
    assert t.stable_sets == [[0], [5], [], [1, 2, 3, 4]]
    # round 3: 1, 2, 3, 4 all have degree 0; G-degrees 0, 2, 2, 1
    assert [p.vertex for p in t.pick_log if p.round == 3] == [2, 3, 4, 1]
    assert verify_trace(g, t) == []


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        run_hss(cycle(5), 0)


@given(graphs(max_n=10), st.integers(1, 4))
def test_run_hss_always_verifies(g, k):
    t = run_hss(g, k)
    assert verify_trace(g, t) == []
    assert run_hss(g, k) == t


@given(graphs(max_n=10), st.integers(1, 4))
def test_degree_floor(g, k):
    t = run_hss(g, k)
    delta = max_degree(g)
    for j, s in enumerate(t.stable_sets[: 2 * k - 2]):
        for v in s:
            assert len(g.adj[v]) >= delta - j


@given(graphs(max_n=9), st.integers(1, 3))
def test_decomposition_inequality(g, k):
    t = run_hss(g, k)
    u = union_s(t)
    rest = [v for v in range(g.n) if v not in set(u)]
    assert chromatic_number_of(g, range(g.n)) <= chromatic_number_of(g, rest) + chromatic_number_of(g, u)


def test_verify_flags_unstable_set():
    g = cycle(5)
    t = run_hss(g, 1)
    bad = copy.deepcopy(t)
    bad.stable_sets[0] = [0, 1, 2]
    bad.remainders[1] = [3, 4]
    bad.remainders[2] = [4]
    bad.stable_sets[1] = [3]
    problems = verify_trace(g, bad)
    assert any(p.startswith("stable:") for p in problems)


def test_verify_flags_wrong_remainder():
    g = cycle(5)
    t = run_hss(g, 1)
    bad = copy.deepcopy(t)
    bad.remainders[2] = [1]
    problems = verify_trace(g, bad)
    assert any(p.startswith("remainder:") for p in problems)


def test_verify_flags_wrong_tie_break():
    g = cycle(5)
    t = run_hss(g, 1)
    bad = copy.deepcopy(t)
    # pick 3 before 0 in round 0: 3 has degree 2 too, but 0 has the lower id
    bad.stable_sets = [[0, 3], [1]]
    bad.remainders = [[0, 1, 2, 3, 4], [1, 2, 4], [2, 4]]
    bad.pick_log = [Pick(0, 3, 2, 2), Pick(0, 0, 2, 2), Pick(1, 1, 1, 2)]
    problems = verify_trace(g, bad)
    assert any(p.startswith("tie-break:") for p in problems)


def test_verify_flags_neighbor_count():
    g = gnp(12, 0.5, seed=4)
    t = run_hss(g, 2)
    bad = copy.deepcopy(t)
    # drop the last round's set from the remainders: neighbour counts change
    bad.stable_sets[0] = bad.stable_sets[0][:-1]
    assert verify_trace(g, bad)


def test_verify_rejects_malformed():
    g = cycle(5)
    t = run_hss(g, 1)
    short = copy.deepcopy(t)
    short.stable_sets = short.stable_sets[:1]
    with pytest.raises(MalformedTrace):
        verify_trace(g, short)
    nested = copy.deepcopy(t)
    nested.remainders[2] = [0, 1, 4]
    with pytest.raises(MalformedTrace):
        verify_trace(g, nested)


def test_trace_records():
    recs = run_hss(cycle(5), 1).to_records()
    assert recs[0] == '{"pick": {"round": 0, "vertex": 0, "degree": 2, "g_degree": 2}}'
    assert recs[-1] == '{"round": 1, "stable_set": [3], "remainder": [1, 4]}'
