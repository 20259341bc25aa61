import math

import pytest

import zdgraph


def test_ring_and_zero_divisors():
    assert zdgraph.ring_mul((0, 1, 0), (0, 1, 0), 3) == (0, 0, 1)
    zd = zdgraph.zero_divisors(3)
    assert len(zd) == 8
    assert zdgraph.classify(zd[0], 3) == "Au"
    assert zdgraph.is_prime(13) and not zdgraph.is_prime(9)


def test_graph_p3():
    g = zdgraph.graph(3)
    assert g["vertex_count"] == 8
    assert g["edge_count"] == 13
    assert len(zdgraph.edges(3)) == 13
    assert zdgraph.graph_dot(3).startswith("graph zero_divisor_graph_p3 {")


def test_invariants_and_indices():
    inv = zdgraph.invariants(5)
    assert inv["diameter"] == 2 and inv["girth"] == 3
    assert inv["clique_number"] == inv["chromatic_number"] == 5
    assert inv["vertex_connectivity"] == inv["edge_connectivity"] == 4
    idx = zdgraph.indices(3)
    assert idx["wiener"] == 43
    assert idx["zagreb_first"] == 122
    assert idx["zagreb_second"] == 217


def test_spectra():
    lap = zdgraph.laplacian_spectrum(5)
    assert {(e["rendered"], e["multiplicity"]) for e in lap} == {("0", 1), ("4", 19), ("24", 4)}
    summary = zdgraph.spectral_summary(5)
    assert summary["energy"]["exact"] == "3+sqrt(329)"
    assert summary["laplacian_energy"]["exact"] == "404/3"
    numeric = zdgraph.numeric_adjacency_spectrum(5)
    assert math.isclose(max(numeric), (3 + math.sqrt(329)) / 2, rel_tol=1e-12)


def test_codes():
    assert zdgraph.code_parameters(3) == (13, 7, 2, "enumerate")
    assert zdgraph.code_parameters(7)[:3] == (267, 47, 6)
    rows = zdgraph.incidence_matrix(3).splitlines()
    assert len(rows) == 8 and all(len(r) == 13 for r in rows)
    with pytest.raises(zdgraph.CapacityError):
        zdgraph.code_parameters(7, "enumerate")


def test_verify():
    report = zdgraph.verify([3, 5])
    claims = {c["id"]: c for c in report["claims"]}
    assert len(claims) == 20
    assert claims["C09_wiener"]["summary"] == "MISMATCH for all"
    assert claims["C14_adj_energy"]["summary"] == "MATCH only at {3}"
    assert claims["C20_code_params"]["summary"] == "MATCH for all"
    with pytest.raises(ValueError):
        zdgraph.verify([2])
