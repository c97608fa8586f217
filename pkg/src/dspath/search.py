"""Extract an explicit 2-DSP solution in O(mn) via partial derivatives.

The partial derivative of the disjoint-pair value with respect to an edge
variable is nonzero (as a polynomial) exactly when that edge appears in some
solution.  For an edge leaving the current source of path one, any solution
containing it must use it as the first edge (the other path cannot touch the
source at all), so the search commits one edge at a time: evaluate all
partials in one reverse sweep, pick an out-edge of the current endpoint with
a nonzero partial, delete the superseded vertex, and repeat on the restricted
instance.  Restricted instances reuse the original shortest-path DAGs
induced on the surviving vertices, so every committed path stays a shortest
path of the original graph.

The result is Las Vegas: candidate output is always verified, and the whole
search restarts with fresh randomness on any failure, so a returned pair is
never wrong.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from . import dsp2
from .circuit import build_circuit_from_dags, eval_all_partials
from .errors import InvalidGraphError
from .graph import Graph, sssp

SearchResult = Optional[tuple[list[int], list[int]]]


def verify_solution(g: Graph, p1: Sequence[int], p2: Sequence[int]) -> bool:
    """True iff p1, p2 are vertex-disjoint paths of g connecting the terminal
    pairs with total weight equal to the true shortest-path distance."""
    if g.k < 2:
        return False
    from .graph import path_weight

    (s1, t1), (s2, t2) = g.terminals[0], g.terminals[1]
    for path, s, t in ((p1, s1, t1), (p2, s2, t2)):
        if len(path) < 1 or path[0] != s or path[-1] != t:
            return False
        if len(set(path)) != len(path):
            return False
        w = path_weight(g, path)
        if w is None:
            return False
        d = sssp(g, s).dist[t]
        if d is None or w != d:
            return False
    return not (set(p1) & set(p2))


def _path_in_dag(dag, start: int, goal: int, blocked: set[int]) -> Optional[list[int]]:
    """Any start-to-goal path of the DAG avoiding ``blocked`` vertices."""
    if start in blocked or goal in blocked:
        return None
    parent: dict[int, int] = {start: start}
    stack = [start]
    while stack:
        v = stack.pop()
        if v == goal:
            path = [goal]
            while path[-1] != start:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        for w, _ in dag.out_adj[v]:
            if w not in blocked and w not in parent:
                parent[w] = v
                stack.append(w)
    return None


def find_2dsp(
    g: Graph,
    rng: Optional[random.Random] = None,
    seed: Optional[int] = None,
    max_attempts: int = 32,
) -> SearchResult:
    """Return a verified solution pair (vertex lists), or None if the
    decision procedure reports that none exists."""
    if g.k < 2:
        raise InvalidGraphError("2-DSP needs two terminal pairs")
    if rng is None:
        rng = random.Random(seed)

    verdict = dsp2.decide_2dsp(g, rng=rng, engine="reference")
    if not verdict.is_yes:
        return None

    dag1, t1, dag2, t2 = dsp2.build_instance_dags(g)
    s2 = g.terminals[1][0]
    branch = "dag" if g.is_dag else "undirected"

    for _ in range(max_attempts):
        result = _attempt(g, dag1, t1, dag2, t2, s2, branch, rng)
        if result is not None and verify_solution(g, result[0], result[1]):
            return result
    raise AssertionError(
        "search failed to verify a solution despite a YES decision; "
        "the probability of this is at most ~n^2/2^63 per attempt"
    )


def _attempt(g, dag1, t1, dag2, t2, s2, branch, rng):
    n = g.n
    alive = [True] * n
    p1 = [g.terminals[0][0]]
    # Commit <= n edges; each stage costs one circuit evaluation with all
    # partials, so the whole attempt is O(mn).
    while p1[-1] != t1:
        cur = p1[-1]
        view1 = dag1.restricted(alive, source=cur)
        view2 = dag2.restricted(alive)
        circuit = build_circuit_from_dags(view1, t1, view2, t2, g.m, branch)
        values = [rng.getrandbits(64) for _ in range(g.m)]
        grad = eval_all_partials(circuit, values)
        step = None
        for w, eid in view1.out_adj[cur]:
            if grad.partials[eid] != 0:
                step = w
                break
        if step is None:
            return None  # unlucky assignment (or stale YES); retry
        alive[cur] = False
        p1.append(step)
    blocked = set(p1)
    p2 = _path_in_dag(dag2, s2, t2, blocked)
    if p2 is None:
        return None
    return p1, list(p2)
