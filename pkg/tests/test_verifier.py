from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from pancycle.base_graph import (
    ExplicitGraph,
    base_explicit_graph,
    circulant_graph,
    complete_bipartite_graph,
    cycle_graph,
)
from pancycle.certificate import CycleCertificate
from pancycle.chain_extension import certificate_for
from pancycle.verifier import (
    CoverageReport,
    ErrorKind,
    LengthResult,
    Status,
    VerificationError,
    brute_force_cycle,
    brute_force_pancyclic,
    coverage_check,
    is_valid_cycle,
    verify_cycle,
)

from .oracles import has_cycle_of_length


def kind_of(cert):
    with pytest.raises(VerificationError) as info:
        verify_cycle(cert)
    return info.value.kind


def test_seed_cycle_n2_verifies():
    verify_cycle(certificate_for(2, 4))


def test_fault_kinds():
    good = certificate_for(2, 12)
    vs = list(good.vertices)
    dup = CycleCertificate(2, 12, tuple(vs[:-1] + [vs[3]]))
    assert kind_of(dup) is ErrorKind.DUPLICATE_VERTEX

    broken = CycleCertificate(2, 3, ((1, 1), (3, 5), (3, 7)))
    assert kind_of(broken) is ErrorKind.NON_ADJACENT_STEP

    assert kind_of(CycleCertificate(2, 13, good.vertices)) is ErrorKind.LENGTH_MISMATCH
    assert kind_of(CycleCertificate(2, 2, ((1, 1), (1, 5)))) is ErrorKind.LENGTH_MISMATCH

    # (1,1)-(1,5)-(1,2) is a path but 2 and 1 are consecutive on the deleted cycle
    assert kind_of(CycleCertificate(2, 3, ((1, 1), (1, 5), (1, 2)))) is ErrorKind.BAD_WRAPAROUND
    assert kind_of(CycleCertificate(2, 3, ((1, 1), (1, 5), (1,)))) is ErrorKind.INVALID_VERTEX


def test_error_detail_has_witness():
    with pytest.raises(VerificationError) as info:
        verify_cycle(CycleCertificate(2, 3, ((1, 1), (3, 5), (3, 7))))
    assert info.value.detail == {"position": 0, "from": (1, 1), "to": (3, 5)}


@pytest.mark.parametrize("length", [3, 4, 17, 50, 81])
def test_dihedral_invariance(length):
    cert = certificate_for(2, length)
    vs = cert.vertices
    for r in range(length):
        rot = vs[r:] + vs[:r]
        assert is_valid_cycle(CycleCertificate(2, length, rot))
        assert is_valid_cycle(CycleCertificate(2, length, rot[::-1]))


def test_dihedral_invariance_of_rejection():
    bad = CycleCertificate(2, 4, ((1, 1), (1, 5), (1, 2), (1, 9)))
    assert not is_valid_cycle(bad)
    for r in range(4):
        rot = bad.vertices[r:] + bad.vertices[:r]
        assert not is_valid_cycle(CycleCertificate(2, 4, rot))
        assert not is_valid_cycle(CycleCertificate(2, 4, rot[::-1]))


def test_brute_force_examples():
    base = base_explicit_graph()
    ham = brute_force_cycle(base, 9)
    assert sorted(ham) == list(range(9))
    assert brute_force_cycle(cycle_graph(4), 3) is None
    c10 = circulant_graph(10, [1, 2])
    assert all(brute_force_cycle(c10, L) is not None for L in range(3, 11))


def test_brute_force_rejects_range():
    with pytest.raises(ValueError):
        brute_force_cycle(cycle_graph(4), 5)
    with pytest.raises(ValueError):
        brute_force_cycle(cycle_graph(4), 2)


def test_brute_force_pancyclic():
    assert brute_force_pancyclic(base_explicit_graph())
    assert brute_force_pancyclic(circulant_graph(10, [1, 2]))
    assert not brute_force_pancyclic(complete_bipartite_graph(3, 3))


def test_c10_cross_checked_with_networkx():
    g = circulant_graph(10, [1, 2])
    G = nx.Graph(list(g.edges))
    lengths = {len(c) for c in nx.simple_cycles(G, length_bound=10)}
    assert lengths == set(range(3, 11))


def test_base_brute_force_cycles_verify_as_certificates():
    base = base_explicit_graph()
    lengths = set()
    for L in range(3, 10):
        found = brute_force_cycle(base, L)
        verify_cycle(CycleCertificate.from_vertices(1, [(v + 1,) for v in found]))
        lengths.add(L)
    assert lengths == set(range(3, 10))


@st.composite
def tiny_graphs(draw):
    n = draw(st.integers(3, 8))
    pairs = list(combinations(range(n), 2))
    return ExplicitGraph(n, frozenset(draw(st.lists(st.sampled_from(pairs), unique=True))))


@settings(max_examples=120, deadline=None)
@given(tiny_graphs())
def test_brute_force_is_exhaustive(g):
    for L in range(3, g.vertex_count + 1):
        found = brute_force_cycle(g, L)
        assert (found is not None) == has_cycle_of_length(g.vertex_count, g.edges, L)
        if found is not None:
            assert len(set(found)) == L
            assert all(g.has_edge(found[t], found[(t + 1) % L]) for t in range(L))


def test_coverage_report_missing_and_failed():
    certs = [certificate_for(2, L) for L in range(3, 82) if L != 50]
    report = coverage_check(2, certs)
    assert not report.pancyclic
    assert report.results[50].status is Status.MISSING
    assert report.summary == {"Verified": 78, "Failed": 0, "Missing": 1}

    bad = CycleCertificate(2, 50, certificate_for(2, 51).vertices)
    report = coverage_check(2, certs[:-1] + [bad])
    assert report.results[50].status is Status.FAILED
    assert "LengthMismatch" in report.results[50].reason
    assert report.results[81].status is Status.MISSING
    assert report.to_dict()["verdict"] == "NOT-PANCYCLIC"


def test_coverage_domain_is_exact():
    report = CoverageReport.build(1, [(2, LengthResult(Status.VERIFIED)), (10, LengthResult(Status.VERIFIED))])
    assert list(report.results) == list(range(3, 10))
    assert report.lengths_with(Status.MISSING) == list(range(3, 10))


def test_coverage_n1():
    certs = [certificate_for(1, L) for L in range(3, 10)]
    assert coverage_check(1, certs).pancyclic
