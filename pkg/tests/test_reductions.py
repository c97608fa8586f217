"""Covering families and the two clique-hardness constructions."""

import json
import random

import pytest

from dspath import InvalidGraphError
from dspath.graph import sssp
from dspath.instances import random_clique_parts
from dspath.oracle import (
    brute_kdp,
    brute_kdsp,
    enum_shortest_paths,
    min_covering_family_size,
)
from dspath.reductions import (
    CliqueInstance,
    clique_to_kdsp,
    clique_to_pdp,
    covering_family,
    format_clique,
    load_clique,
    validate_covering_family,
)

TRIANGLE = CliqueInstance.from_edges(
    3, 2, [(0, 0, 1, 0), (0, 0, 2, 0), (1, 0, 2, 0)]
)


def random_clique(rng, k=3, n=2, p=0.5):
    return CliqueInstance.from_edges(k, n, random_clique_parts(rng, k, n, p))


# -- covering families ----------------------------------------------------


def test_family_k3():
    fam = covering_family(3)
    assert set(fam.lists) == {(1, 2, 3), (1, 3)}
    validate_covering_family(fam)


def test_family_k4_size():
    fam = covering_family(4)
    assert len(fam.lists) == 4
    validate_covering_family(fam)


def test_family_invariants_up_to_120():
    for k in range(2, 121):
        validate_covering_family(covering_family(k))


def test_family_is_minimum_for_small_k():
    for k in range(2, 8):
        assert min_covering_family_size(k) == (k * k) // 4


def test_family_rejects_tiny_k():
    with pytest.raises(ValueError):
        covering_family(1)


# -- clique instance I/O ----------------------------------------------------


def test_clique_roundtrip(rng):
    c = random_clique(rng, k=3, n=3)
    assert load_clique(format_clique(c)) == c


def test_clique_validation():
    with pytest.raises(InvalidGraphError):
        CliqueInstance.from_edges(3, 2, [(0, 0, 0, 1)])  # intra-part
    with pytest.raises(InvalidGraphError):
        CliqueInstance.from_edges(3, 2, [(0, 0, 1, 5)])  # out of range


def test_clique_adjacency_symmetric():
    assert TRIANGLE.adjacent(1, 0, 0, 0)
    assert TRIANGLE.adjacent(0, 0, 1, 0)
    assert not TRIANGLE.adjacent(0, 1, 1, 1)
    assert TRIANGLE.has_clique()


# -- clique -> k-DSP --------------------------------------------------------


def test_kdsp_reduction_triangle():
    inst = clique_to_kdsp(TRIANGLE)
    g = inst.graph
    assert g.is_dag and g.k == 3
    assert g.n <= inst.certification["node_bound"]
    assert brute_kdsp(g)  # the triangle maps to a disjoint family


def test_kdsp_reduction_empty_adjacency():
    c = CliqueInstance.from_edges(3, 2, [])
    inst = clique_to_kdsp(c)
    # every crossing node merged; all path pairs collide
    assert not brute_kdsp(inst.graph)


def test_kdsp_reduction_equivalence(rng):
    for trial in range(50):
        n = 2 if trial % 2 == 0 else 3
        c = random_clique(rng, n=n)
        inst = clique_to_kdsp(c)
        g = inst.graph
        assert g.n <= inst.certification["node_bound"]
        assert brute_kdsp(g) == c.has_clique()


def test_kdsp_reduction_canonical_shortest_paths(rng):
    """Per terminal pair: exactly n shortest paths, all of length (k-1)n+1,
    and the certificate distances match a fresh shortest-path run."""
    for trial in range(20):
        n = 2 if trial % 2 == 0 else 3
        c = random_clique(rng, n=n)
        inst = clique_to_kdsp(c)
        g = inst.graph
        for i, (s, t) in enumerate(g.terminals):
            d = sssp(g, s).dist[t]
            assert d == inst.certification["expected_dist"][i] == (c.k - 1) * n + 1
            paths = enum_shortest_paths(g, s, t)
            assert len(paths) == n
            assert all(len(p) - 1 == (c.k - 1) * n + 1 for p in paths)


# -- clique -> p-DP ----------------------------------------------------------


def test_pdp_reduction_triangle():
    inst = clique_to_pdp(TRIANGLE)
    g = inst.graph
    cert = inst.certification
    assert cert["p"] == 5 and g.k == 5
    assert g.is_dag
    assert g.n <= cert["node_bound"]
    assert brute_kdp(g) and brute_kdsp(g)


def test_pdp_row_column_counts():
    inst = clique_to_pdp(TRIANGLE)
    cert = inst.certification
    # rows one and three have two columns (their part index sits in both
    # lists), row two has one; canonical row distance is (n-1)*l(i) + 1
    assert cert["lists"] == [[1, 2, 3], [1, 3]]
    assert cert["canonical_dist"][:3] == [3, 2, 3]
    # list pairs: 2*(last-first) + 3
    assert cert["canonical_dist"][3:] == [7, 7]


def test_pdp_rejects_small_parts():
    c = CliqueInstance.from_edges(3, 1, [])
    with pytest.raises(InvalidGraphError):
        clique_to_pdp(c)


def test_pdp_reduction_equivalence(rng):
    for trial in range(50):
        n = 2 if trial % 2 == 0 else 3
        c = random_clique(rng, n=n)
        inst = clique_to_pdp(c)
        g = inst.graph
        want = c.has_clique()
        assert brute_kdp(g) == want
        assert brute_kdsp(g) == want


def test_reductions_hold_at_k4(rng):
    # larger part count exercises length-3 crossing chains and 8 terminal
    # pairs; correctness must not be special to k = 3
    for _ in range(10):
        c = random_clique(rng, k=4, n=2, p=0.55)
        want = c.has_clique()
        pdp = clique_to_pdp(c)
        assert pdp.certification["p"] == 8
        assert brute_kdp(pdp.graph) == want
        assert brute_kdsp(pdp.graph) == want
        grid = clique_to_kdsp(c)
        assert brute_kdsp(grid.graph) == want


def test_pdp_certificate_roundtrip(rng):
    for trial in range(20):
        n = 2 if trial % 2 == 0 else 3
        c = random_clique(rng, n=n)
        inst = clique_to_pdp(c)
        g = inst.graph
        cert = inst.certification
        json.dumps(cert)  # JSON-serializable sidecar
        for i, (s, t) in enumerate(g.terminals):
            assert sssp(g, s).dist[t] == cert["expected_dist"][i]
        for i in range(c.k):
            assert cert["expected_dist"][i] == cert["canonical_dist"][i]
        if c.has_clique():
            assert cert["expected_dist"] == cert["canonical_dist"]
