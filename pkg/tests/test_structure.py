import pytest
from hypothesis import given

from reedlab.graph import Graph, OddCycle, check_odd_cycle, chvatal, complete, cycle, path, petersen, star
from reedlab.structure import (
    CertificateKind,
    GraphClass,
    certificate_problems,
    find_heavy_edges,
    find_heavy_odd_cycle,
    membership_problems,
    recognize_odd_cycle_low_degree,
    recognize_stable_high_degree,
    refute_minimal_counterexample,
)

from helpers import graphs
from oracles import has_odd_cycle_through, induced_odd_cycles


def bowtie():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def k4_plus_pendant():
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])


def test_heavy_edges():
    assert find_heavy_edges(complete(5)) == complete(5).edges()
    assert find_heavy_edges(star(3)) == []
    assert find_heavy_edges(bowtie()) == []


def test_heavy_odd_cycle_examples():
    c = find_heavy_odd_cycle(cycle(5))
    assert c is not None and sorted(c.vertices) == [0, 1, 2, 3, 4]
    assert find_heavy_odd_cycle(path(6)) is None
    assert find_heavy_odd_cycle(cycle(8)) is None
    c = find_heavy_odd_cycle(k4_plus_pendant())
    assert c is not None and len(c) == 3 and 4 not in c.vertices


@given(graphs(min_n=1, max_n=8))
def test_heavy_odd_cycle_matches_enumeration(g):
    delta = max(g.degrees())
    heavy = {v for v in range(g.n) if len(g.adj[v]) >= delta - 1}
    found = find_heavy_odd_cycle(g)
    assert (found is not None) == has_odd_cycle_through(g, heavy)
    if found is not None:
        assert check_odd_cycle(g, found.vertices) is None
        assert all(v in heavy for v in found.vertices)


def test_stable_high_degree_examples():
    m = recognize_stable_high_degree(petersen(), 4)
    assert m.verdict and m.witness == []
    m = recognize_stable_high_degree(complete(6), 4)
    assert not m.verdict and complete(6).has_edge(*m.witness)
    m = recognize_stable_high_degree(star(6), 4)
    assert m.verdict and m.witness == [0]
    with pytest.raises(ValueError):
        recognize_stable_high_degree(star(6), 0)


def test_odd_cycle_low_degree_examples():
    assert recognize_odd_cycle_low_degree(cycle(9), 4).verdict
    m = recognize_odd_cycle_low_degree(complete(5), 4)
    assert not m.verdict and isinstance(m.witness, OddCycle) and len(m.witness) == 3
    assert recognize_odd_cycle_low_degree(chvatal(), 5).verdict
    assert not recognize_odd_cycle_low_degree(chvatal(), 4).verdict


@given(graphs(max_n=8))
def test_recognizers_agree_with_brute_force(g):
    cycles = induced_odd_cycles(g)
    deg = g.degrees()
    for d0 in range(2, 7):
        m = recognize_odd_cycle_low_degree(g, d0)
        assert m.verdict == all(min(deg[v] for v in c) <= d0 - 1 for c in cycles)
        assert membership_problems(g, m) == []
        s = recognize_stable_high_degree(g, d0)
        high = [v for v in range(g.n) if deg[v] > d0]
        assert s.verdict == all(not g.has_edge(u, v) for u in high for v in high)
        assert membership_problems(g, s) == []


def test_membership_problems_catch_forged_witness():
    m = recognize_odd_cycle_low_degree(complete(5), 4)
    forged = type(m)(m.class_id, m.delta0, False, OddCycle([0, 1, 2, 3]))
    assert membership_problems(complete(5), forged)


@pytest.mark.parametrize(
    "g, kind",
    [
        (chvatal(), CertificateKind.BOUND_HOLDS),
        (cycle(7), CertificateKind.BOUND_HOLDS),
        (petersen(), CertificateKind.BOUND_HOLDS),
    ],
)
def test_refutation_with_exact_solver(g, kind):
    cert = refute_minimal_counterexample(g)
    assert cert.kind is kind
    assert certificate_problems(g, cert) == []


@pytest.mark.parametrize("g", [cycle(7), petersen()])
def test_refutation_delta_at_most_4(g):
    # with the exact check switched off the degree certificate comes first
    cert = refute_minimal_counterexample(g, exact_limit=0)
    assert cert.kind is CertificateKind.DELTA_AT_MOST_4
    assert certificate_problems(g, cert) == []


def test_refutation_structural_certificates():
    s = star(6)
    cert = refute_minimal_counterexample(s, exact_limit=0)
    assert cert.kind is CertificateKind.NO_HEAVY_EDGE
    # K_6: Δ = 5, heavy edges and heavy triangles everywhere
    k = complete(6)
    cert = refute_minimal_counterexample(k, exact_limit=0)
    assert cert.kind is CertificateKind.NOT_REFUTED
    assert certificate_problems(k, cert) == []
    # K_{5,5}: heavy edges but no odd cycle at all
    k55 = Graph.from_edges(10, [(u, v) for u in range(5) for v in range(5, 10)])
    cert = refute_minimal_counterexample(k55, exact_limit=0)
    assert cert.kind is CertificateKind.NO_HEAVY_ODD_CYCLE
    assert certificate_problems(k55, cert) == []


def test_certificate_record():
    rec = refute_minimal_counterexample(cycle(5)).to_record()
    assert rec.startswith('{"certificate": "BoundHolds"')
