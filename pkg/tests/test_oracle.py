"""The brute-force oracle itself: classification, partitions, solvers."""

import random

import pytest

from dspath import EnumerationLimitError, load_graph
from dspath.oracle import (
    AGREE,
    DISJOINT,
    REVERSING,
    SINGLE,
    Brute2dsp,
    brute_2dsp,
    brute_kdp,
    brute_kedsp,
    brute_clique,
    classify_pair,
    enum_shortest_paths,
    min_covering_family_size,
)
from dspath.instances import random_instance

from conftest import CROSS_S1, CROSS_T1, PARA_TEXT


def test_classify_basic():
    assert classify_pair([0, 1, 2], [3, 4, 5]) == DISJOINT
    assert classify_pair([0, 1, 2], [3, 1, 5]) == SINGLE
    # shared edge, same direction
    assert classify_pair([0, 1, 2, 3], [9, 1, 2, 8]) == AGREE
    # traversed in opposite order
    assert classify_pair([0, 1, 2, 3], [8, 2, 1, 9]) == REVERSING


def test_classification_is_exhaustive_on_shortest_paths(rng):
    checked = 0
    for _ in range(200):
        g = random_instance(rng, "undirected", n=9, edge_prob=0.5)
        brute = Brute2dsp(g)
        for _, _, _, _, cls in brute.pairs:
            assert cls in (DISJOINT, SINGLE, AGREE, REVERSING)
            checked += 1
    assert checked > 200  # the stress actually exercised pairs


def test_enum_shortest_paths_cross(cross):
    assert enum_shortest_paths(cross, CROSS_S1, CROSS_T1) == [(0, 2, 3)]


def test_enum_shortest_paths_triangle_tie():
    g = load_graph("3 3 undirected 1\n0 2\n0 1 1\n1 2 1\n0 2 2\n")
    assert enum_shortest_paths(g, 0, 2) == [(0, 1, 2), (0, 2)]


def test_enum_limit():
    # layered blowup: 2^8 shortest paths from 0 to 19
    lines = ["20 38 dag 1", "0 19"]
    for layer in range(9):
        a, b = 2 * layer, 2 * layer + 1
        c, d = 2 * layer + 2, 2 * layer + 3
        for x in (a, b):
            for y in (c, d):
                lines.append(f"{x} {y} 1")
    lines += ["0 1 1", "18 19 1"]
    # vertices 0..19; fix: join 0->1 so everything is connected
    g = load_graph("\n".join(lines) + "\n")
    with pytest.raises(EnumerationLimitError):
        enum_shortest_paths(g, 0, 19, limit=10)


def test_partition_identities(rng):
    """all-standard = disjoint + intersecting and intersecting = agree +
    disagree, as exact field values at random assignments."""
    for trial in range(40):
        mode = "dag" if trial % 2 == 0 else "undirected"
        g = random_instance(rng, mode, n=9)
        brute = Brute2dsp(g)
        values = [rng.getrandbits(64) for _ in range(g.m)]
        alls = brute.eval_family("all-standard", values)
        dis = brute.eval_family("disjoint", values)
        cap = brute.eval_family("intersecting", values)
        agree = brute.eval_family("agree", values)
        disagree = brute.eval_family("disagree", values)
        assert alls == dis ^ cap
        assert cap == agree ^ disagree


def test_nonzero_disjoint_value_implies_yes(rng):
    for trial in range(60):
        mode = "dag" if trial % 2 == 0 else "undirected"
        g = random_instance(rng, mode, n=8)
        brute = Brute2dsp(g)
        values = [rng.getrandbits(64) for _ in range(g.m)]
        if brute.eval_family("disjoint", values) != 0:
            assert brute.has_disjoint_pair()


def test_brute_2dsp_fixtures(cross, para, share):
    assert not brute_2dsp(cross)
    assert brute_2dsp(para)
    assert not brute_2dsp(share)
    assert brute_kedsp(cross)


def test_brute_clique():
    adj = {(0, 0, 1, 0), (0, 0, 2, 0), (1, 0, 2, 0)}

    def adjacent(i, a, j, b):
        if i > j:
            i, a, j, b = j, b, i, a
        return (i, a, j, b) in adj

    assert brute_clique(adjacent, 3, 2)
    adj.discard((1, 0, 2, 0))
    assert not brute_clique(adjacent, 3, 2)


def test_brute_kdp_and_kedsp(para):
    assert brute_kdp(para)
    assert brute_kedsp(para)
    # PARA with both pairs rerouted through the shared bridge is vertex-bound
    g = load_graph(PARA_TEXT)
    assert brute_kdp(g, p=2)


def test_min_covering_small():
    assert min_covering_family_size(2) == 1
    assert min_covering_family_size(3) == 2
    assert min_covering_family_size(4) == 4
    assert min_covering_family_size(5) == 6
