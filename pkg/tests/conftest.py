"""Shared fixtures: the three canonical tiny instances.

CROSS  dag: s1->v, s2->v, v->t1, v->t2 (unit weights).  Both pairs must cross
       at v, so there is no vertex-disjoint solution, but edge-disjoint
       shortest paths exist.
PARA   dag: two parallel unit paths s1->a->t1 and s2->b->t2, plus one heavy
       bridge b->a (weight 5) that lies on no shortest path and exists only
       to keep the graph weakly connected.  Unique disjoint solution.
SHARE  undirected analog of CROSS; no solution.
"""

import random

import pytest

from dspath import load_graph

CROSS_TEXT = """\
5 4 dag 2
0 3
1 4
0 2 1
1 2 1
2 3 1
2 4 1
"""

PARA_TEXT = """\
6 5 dag 2
0 2
3 5
0 1 1
1 2 1
3 4 1
4 5 1
4 1 5
"""

SHARE_TEXT = """\
5 4 undirected 2
0 3
1 4
0 2 1
2 3 1
1 2 1
2 4 1
"""

# vertex names for readability in tests
CROSS_S1, CROSS_S2, CROSS_V, CROSS_T1, CROSS_T2 = 0, 1, 2, 3, 4
PARA_S1, PARA_A, PARA_T1, PARA_S2, PARA_B, PARA_T2 = 0, 1, 2, 3, 4, 5


@pytest.fixture
def cross():
    return load_graph(CROSS_TEXT)


@pytest.fixture
def para():
    return load_graph(PARA_TEXT)


@pytest.fixture
def share():
    return load_graph(SHARE_TEXT)


@pytest.fixture
def rng():
    return random.Random(0xD5BA7)
