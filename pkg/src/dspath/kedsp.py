"""k edge-disjoint shortest paths on weighted DAGs via an implicit product
graph.

A node of the product graph is a k-tuple of vertices; an edge advances every
*unfinished* coordinate currently holding the earliest vertex (in a fixed
topological order) along its own shortest-path DAG, to pairwise-distinct
successors; coordinates that have reached their targets stay frozen.  Paths
from (s_1..s_k) to (t_1..t_k) correspond exactly to k pairwise edge-disjoint
shortest paths.  Freezing finished coordinates is essential: a target can be
topologically earlier than the other coordinates' positions, and forcing it
to keep stepping would walk it off its own target and lose real solutions.
The product graph is never materialized: breadth-first search expands
successors lazily, visiting at most n^k tuples and k*m*n^(k-1) edges.

Also provides the two standard reductions between problem variants:
edge-disjoint to vertex-disjoint (splitting edges into nodes), and plain
disjoint paths to disjoint *shortest* paths (reweighting a DAG so that every
path becomes shortest).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidGraphError, UnsupportedInputError
from .graph import MODE_DAG, Graph, build_sp_dag, topological_order

DEFAULT_MAX_K = 4
DEFAULT_MAX_PRODUCT_NODES = 10**8


@dataclass
class ProductSearchStats:
    """Counters from one product-graph search."""

    visited: int = 0
    expansions: int = 0  # total successors generated over visited nodes


def product_successors(
    coords: Sequence[int],
    spdags: Sequence,
    topo_pos: Sequence[int],
    targets: Sequence[int],
) -> list[tuple[int, ...]]:
    """Successor tuples of a product node.

    Among coordinates that have not yet reached their targets, the ones at
    the earliest vertex under the topological order all step along their own
    DAG's out-edges, to pairwise-distinct vertices; every other coordinate
    (later ones, and finished ones) stays put.
    """
    k = len(coords)
    active = [i for i in range(k) if coords[i] != targets[i]]
    if not active:
        return []
    early_pos = min(topo_pos[coords[i]] for i in active)
    moving = [i for i in active if topo_pos[coords[i]] == early_pos]
    options = []
    for i in moving:
        nbrs = [w for w, _ in spdags[i].out_adj[coords[i]]]
        if not nbrs:
            return []
        options.append(nbrs)

    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def backtrack(idx: int) -> None:
        if idx == len(moving):
            nxt = list(coords)
            for pos, i in enumerate(moving):
                nxt[i] = chosen[pos]
            out.append(tuple(nxt))
            return
        for w in options[idx]:
            if w not in chosen:
                chosen.append(w)
                backtrack(idx + 1)
                chosen.pop()

    backtrack(0)
    return out


def _pack_key(coords: tuple[int, ...], n: int, packable: bool):
    if not packable:
        return coords
    key = 0
    for c in coords:
        key = key * n + c
    return key


def solve_kedsp(
    g: Graph,
    max_k: int = DEFAULT_MAX_K,
    max_product_nodes: int = DEFAULT_MAX_PRODUCT_NODES,
    topo: Optional[Sequence[int]] = None,
    stats: Optional[ProductSearchStats] = None,
) -> Optional[list[list[int]]]:
    """Find k pairwise edge-disjoint shortest paths on a weighted DAG, or
    None.  k is the number of terminal pairs of the graph."""
    if not g.is_dag:
        raise UnsupportedInputError("edge-disjoint product search needs a DAG")
    if g.has_parallel_edges():
        raise UnsupportedInputError(
            "parallel edges are not supported: distinct product successors "
            "cannot tell parallel edges apart"
        )
    k = g.k
    if k < 1:
        raise InvalidGraphError("need at least one terminal pair")
    if k > max_k:
        raise UnsupportedInputError(f"k={k} exceeds the configured maximum {max_k}")
    if g.n**k > max_product_nodes:
        raise UnsupportedInputError(
            f"product state space n^k = {g.n ** k} exceeds cap {max_product_nodes}"
        )
    if topo is None:
        topo = topological_order(g)
        assert topo is not None
    topo_pos = [0] * g.n
    for pos, v in enumerate(topo):
        topo_pos[v] = pos

    spdags = []
    for s, t in g.terminals:
        dag = build_sp_dag(g, s)
        if dag.dist[t] is None:
            return None
        spdags.append(dag)

    if stats is None:
        stats = ProductSearchStats()
    start = tuple(s for s, _ in g.terminals)
    goal = tuple(t for _, t in g.terminals)
    targets = [t for _, t in g.terminals]
    packable = g.n**k < (1 << 62)
    parents: dict = {_pack_key(start, g.n, packable): None}
    queue = deque([start])
    stats.visited = 1
    found = start == goal
    while queue and not found:
        node = queue.popleft()
        succs = product_successors(node, spdags, topo_pos, targets)
        stats.expansions += len(succs)
        for nxt in succs:
            key = _pack_key(nxt, g.n, packable)
            if key in parents:
                continue
            parents[key] = node
            stats.visited += 1
            if nxt == goal:
                found = True
                break
            queue.append(nxt)
    if not found:
        return None

    # walk parent links back to the start, then read off coordinate changes
    chain = [goal]
    while True:
        prev = parents[_pack_key(chain[-1], g.n, packable)]
        if prev is None:
            break
        chain.append(prev)
    chain.reverse()
    paths = [[s] for s, _ in g.terminals]
    for a, b in zip(chain, chain[1:]):
        for i in range(k):
            if b[i] != a[i]:
                paths[i].append(b[i])
    return paths


def decide_kedsp(
    g: Graph,
    max_k: int = DEFAULT_MAX_K,
    max_product_nodes: int = DEFAULT_MAX_PRODUCT_NODES,
    topo: Optional[Sequence[int]] = None,
) -> bool:
    return solve_kedsp(g, max_k=max_k, max_product_nodes=max_product_nodes, topo=topo) is not None


def verify_kedsp(g: Graph, paths: Sequence[Sequence[int]]) -> bool:
    """Each path connects its terminal pair with shortest total weight, and
    no directed edge is used twice across the collection."""
    from .graph import path_weight, sssp

    if len(paths) != g.k:
        return False
    used: set[tuple[int, int]] = set()
    for (s, t), path in zip(g.terminals, paths):
        if len(path) < 1 or path[0] != s or path[-1] != t:
            return False
        if len(set(path)) != len(path):
            return False
        w = path_weight(g, path)
        d = sssp(g, s).dist[t]
        if w is None or d is None or w != d:
            return False
        for a, b in zip(path, path[1:]):
            if (a, b) in used:
                return False
            used.add((a, b))
    return True


# ---------------------------------------------------------------------------
# reductions between variants
# ---------------------------------------------------------------------------


def reduce_edsp_to_dsp(g: Graph) -> Graph:
    """Edge-disjoint to vertex-disjoint: k copies of every vertex, one node
    per edge, fresh terminals.

    Output has exactly m + k(n+2) nodes and 2k(m+1) edges.  Paths between the
    fresh terminals have weight 2*dist+2, and vertex-disjointness at the edge
    nodes is exactly edge-disjointness of the originals.
    """
    k = g.k
    n, m = g.n, g.m

    def copy_id(v: int, i: int) -> int:
        return v * k + i

    def edge_node(eid: int) -> int:
        return n * k + eid

    def src_id(i: int) -> int:
        return n * k + m + i

    def tgt_id(i: int) -> int:
        return n * k + m + k + i

    edges = []
    for eid, (u, v, w) in enumerate(g.edges):
        for i in range(k):
            edges.append((copy_id(u, i), edge_node(eid), w))
            edges.append((edge_node(eid), copy_id(v, i), w))
    terminals = []
    for i, (s, t) in enumerate(g.terminals):
        edges.append((src_id(i), copy_id(s, i), 1))
        edges.append((copy_id(t, i), tgt_id(i), 1))
        terminals.append((src_id(i), tgt_id(i)))
    return Graph(n=n * k + m + 2 * k, mode=g.mode, edges=edges, terminals=terminals)


def reduce_dp_to_dsp(g: Graph) -> Graph:
    """Reweight a DAG so every path becomes a shortest path: edge (u, v) gets
    weight pos(v) - pos(u) in a topological order, so any path's weight
    telescopes to the endpoint gap."""
    if not g.is_dag:
        raise InvalidGraphError("reweighting reduction needs a DAG")
    order = topological_order(g)
    assert order is not None
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    edges = [(u, v, pos[v] - pos[u]) for u, v, _ in g.edges]
    return Graph(n=g.n, mode=MODE_DAG, edges=edges, terminals=g.terminals)
