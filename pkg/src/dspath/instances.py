"""Random instance generators (library + CLI + benchmarks).

All generators take an explicit ``random.Random`` and are deterministic given
its seed.  Connectivity is repaired rather than resampled: a random backbone
spanning the vertex set is added first, so every emitted graph passes the
loader's weak-connectivity check.
"""

from __future__ import annotations

import random
from typing import Optional

from .graph import MODE_DAG, MODE_UNDIRECTED, Graph


def _pick_terminals(rng: random.Random, n: int, k: int) -> list[tuple[int, int]]:
    picks = rng.sample(range(n), 2 * k)
    return [(picks[2 * i], picks[2 * i + 1]) for i in range(k)]


def random_dag(
    rng: random.Random,
    n: int,
    edge_prob: float = 0.4,
    max_weight: int = 5,
    k: int = 2,
    parallel_prob: float = 0.0,
) -> Graph:
    """Random DAG: edges point forward along a random vertex permutation.

    A forward backbone path keeps the graph weakly connected.  With
    ``parallel_prob`` each chosen edge is duplicated (same endpoints, fresh
    random weight) to exercise multigraph handling.
    """
    if n < 2 * k:
        raise ValueError("need at least 2k vertices")
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    for i in range(n - 1):
        edges.append((perm[i], perm[i + 1], rng.randint(1, max_weight)))
    for i in range(n):
        for j in range(i + 2, n):
            if rng.random() < edge_prob:
                edges.append((perm[i], perm[j], rng.randint(1, max_weight)))
                if parallel_prob and rng.random() < parallel_prob:
                    edges.append((perm[i], perm[j], rng.randint(1, max_weight)))
    terminals = _pick_terminals(rng, n, k)
    return Graph(n=n, mode=MODE_DAG, edges=edges, terminals=terminals)


def random_undirected(
    rng: random.Random,
    n: int,
    edge_prob: float = 0.4,
    max_weight: int = 5,
    k: int = 2,
    parallel_prob: float = 0.0,
) -> Graph:
    """Erdos-Renyi-style undirected graph plus a random spanning backbone."""
    if n < 2 * k:
        raise ValueError("need at least 2k vertices")
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    used = set()
    for i in range(n - 1):
        a, b = perm[i], perm[i + 1]
        edges.append((a, b, rng.randint(1, max_weight)))
        used.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in used:
                continue
            if rng.random() < edge_prob:
                edges.append((u, v, rng.randint(1, max_weight)))
                if parallel_prob and rng.random() < parallel_prob:
                    edges.append((u, v, rng.randint(1, max_weight)))
    terminals = _pick_terminals(rng, n, k)
    return Graph(n=n, mode=MODE_UNDIRECTED, edges=edges, terminals=terminals)


def layered_graph(
    rng: random.Random,
    layers: int,
    width: int,
    avg_degree: int = 8,
    max_weight: int = 4,
    k: int = 2,
    mode: str = MODE_DAG,
) -> Graph:
    """Random layered graph: vertices in ``layers`` ranks of ``width``, edges
    only between consecutive ranks.

    The bounded number of distance levels makes these the natural shape for
    scaling benchmarks of the level-batched fast engine; they are valid in
    either mode.
    """
    if width < 2 * k:
        raise ValueError("width must be at least 2k")
    n = layers * width

    def vid(layer: int, i: int) -> int:
        return layer * width + i

    edges = []
    for layer in range(layers - 1):
        # backbone keeps consecutive ranks connected
        for i in range(width):
            edges.append(
                (vid(layer, i), vid(layer + 1, i), rng.randint(1, max_weight))
            )
        extra = max(0, avg_degree - 1) * width
        for _ in range(extra):
            a = rng.randrange(width)
            b = rng.randrange(width)
            edges.append((vid(layer, a), vid(layer + 1, b), rng.randint(1, max_weight)))
    # dedupe parallel duplicates introduced by the random extras
    seen = set()
    unique_edges = []
    for u, v, w in edges:
        key = (u, v) if mode == MODE_DAG else (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        unique_edges.append((u, v, w))
    sources = rng.sample(range(width), k)
    targets = rng.sample(range(width), k)
    terminals = [
        (vid(0, sources[i]), vid(layers - 1, targets[i])) for i in range(k)
    ]
    return Graph(n=n, mode=mode, edges=unique_edges, terminals=terminals)


def random_clique_parts(
    rng: random.Random, k: int, n: int, edge_prob: float = 0.5
):
    """Random k-partite adjacency as a set of ((i, a), (j, b)) cross edges."""
    edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            for a in range(n):
                for b in range(n):
                    if rng.random() < edge_prob:
                        edges.add((i, a, j, b))
    return edges


def random_instance(
    rng: random.Random,
    mode: str,
    n: int,
    edge_prob: float = 0.4,
    max_weight: int = 5,
    k: int = 2,
    parallel_prob: float = 0.0,
) -> Graph:
    maker = random_dag if mode == MODE_DAG else random_undirected
    return maker(
        rng,
        n,
        edge_prob=edge_prob,
        max_weight=max_weight,
        k=k,
        parallel_prob=parallel_prob,
    )


def graph_with_terminals(g: Graph, terminals) -> Graph:
    """Same graph, different terminal pairs."""
    return Graph(n=g.n, mode=g.mode, edges=g.edges, terminals=terminals)


def random_yes_biased_terminals(
    rng: random.Random, g: Graph, k: int = 2
) -> Optional[Graph]:
    """Re-pick terminals so that t_i is reachable from s_i (best effort)."""
    from .graph import sssp

    for _ in range(40):
        terms = _pick_terminals(rng, g.n, k)
        ok = True
        for s, t in terms:
            if sssp(g, s).dist[t] is None:
                ok = False
                break
        if ok:
            return graph_with_terminals(g, terms)
    return None
