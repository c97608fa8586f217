"""Graph representation, I/O, shortest paths, and shortest-path DAGs.

Graphs are weighted multigraphs in one of two modes: ``dag`` (directed
acyclic) or ``undirected``.  All weights are strictly positive integers and
the 2k terminal vertices are pairwise distinct; both are validated on
construction, as is weak connectivity and (in dag mode) acyclicity.

The s-shortest-path DAG keeps exactly the edges (u, v) with
dist(s, v) = dist(s, u) + w(u, v); a vertex sequence is a shortest path from
s if and only if it is a path of that DAG.  Distances are computed with exact
integer arithmetic throughout (Python ints never overflow), so the equality
test above is never subject to rounding.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import GraphFormatError, InvalidGraphError

MODE_DAG = "dag"
MODE_UNDIRECTED = "undirected"


class Graph:
    """Immutable weighted graph with k terminal pairs.

    ``edges[i] = (u, v, w)``; in undirected mode the pair is unordered but
    stored as given.  Adjacency lists carry edge indices so that parallel
    edges keep distinct identities.
    """

    __slots__ = ("n", "m", "mode", "edges", "terminals", "_out", "_in")

    def __init__(
        self,
        n: int,
        mode: str,
        edges: Sequence[tuple[int, int, int]],
        terminals: Sequence[tuple[int, int]],
    ):
        if mode not in (MODE_DAG, MODE_UNDIRECTED):
            raise InvalidGraphError(f"unknown mode {mode!r}")
        self.n = n
        self.m = len(edges)
        self.mode = mode
        self.edges = tuple((int(u), int(v), int(w)) for u, v, w in edges)
        self.terminals = tuple((int(s), int(t)) for s, t in terminals)
        self._out: Optional[list] = None
        self._in: Optional[list] = None
        self._validate()

    # -- properties ------------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.terminals)

    @property
    def is_dag(self) -> bool:
        return self.mode == MODE_DAG

    def out_edges(self, u: int) -> list[tuple[int, int, int]]:
        """(v, w, edge_id) triples leaving u (both directions if undirected)."""
        if self._out is None:
            self._build_adjacency()
        return self._out[u]

    def in_edges(self, v: int) -> list[tuple[int, int, int]]:
        """(u, w, edge_id) triples entering v (both directions if undirected)."""
        if self._in is None:
            self._build_adjacency()
        return self._in[v]

    def has_parallel_edges(self) -> bool:
        seen = set()
        for u, v, _ in self.edges:
            key = (u, v) if self.is_dag else (min(u, v), max(u, v))
            if key in seen:
                return True
            seen.add(key)
        return False

    # -- internals -------------------------------------------------------

    def _build_adjacency(self) -> None:
        out: list = [[] for _ in range(self.n)]
        inc: list = [[] for _ in range(self.n)]
        for eid, (u, v, w) in enumerate(self.edges):
            out[u].append((v, w, eid))
            inc[v].append((u, w, eid))
            if self.mode == MODE_UNDIRECTED and u != v:
                out[v].append((u, w, eid))
                inc[u].append((v, w, eid))
        self._out = out
        self._in = inc

    def _validate(self) -> None:
        if self.n <= 0:
            raise InvalidGraphError("graph must have at least one vertex")
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge endpoint out of range: ({u}, {v})")
            if w <= 0:
                raise InvalidGraphError(f"nonpositive weight {w} on edge ({u}, {v})")
        seen: set[int] = set()
        for s, t in self.terminals:
            for x in (s, t):
                if not 0 <= x < self.n:
                    raise InvalidGraphError(f"terminal {x} out of range")
                if x in seen:
                    raise InvalidGraphError(f"duplicate terminal {x}")
                seen.add(x)
        if self.is_dag:
            if topological_order(self) is None:
                raise InvalidGraphError("cycle detected in dag-mode graph")
        if not self._weakly_connected():
            raise InvalidGraphError("graph is not weakly connected")

    def _weakly_connected(self) -> bool:
        if self.n == 1:
            return True
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = self.n
        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
        return components == 1


def topological_order(g: Graph) -> Optional[list[int]]:
    """Kahn's algorithm with min-vertex-id tie-breaking (deterministic).

    Works on the stored directed edge set (mode-independent) and returns
    None when it has a cycle.  Only meaningful for dag-mode graphs.
    """
    indeg = [0] * g.n
    out: list[list[int]] = [[] for _ in range(g.n)]
    for u, v, _ in g.edges:
        indeg[v] += 1
        out[u].append(v)
    heap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) != g.n:
        return None
    return order


@dataclass(frozen=True)
class DistanceMap:
    """Exact shortest distances from a fixed source; None marks unreachable."""

    source: int
    dist: tuple

    def is_reachable(self, v: int) -> bool:
        return self.dist[v] is not None


def sssp(g: Graph, source: int) -> DistanceMap:
    """Single-source shortest paths.

    Dag mode runs dynamic programming over a topological order (O(m + n));
    undirected mode a binary-heap Dijkstra (O(m log n)).  Both rely on the
    positive-weight assumption validated at load.
    """
    if not 0 <= source < g.n:
        raise InvalidGraphError(f"source {source} out of range")
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    if g.is_dag:
        order = topological_order(g)
        assert order is not None  # validated at construction
        for u in order:
            du = dist[u]
            if du is None:
                continue
            for v, w, _ in g.out_edges(u):
                nd = du + w
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
    else:
        heap = [(0, source)]
        done = [False] * g.n
        while heap:
            d, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for v, w, _ in g.out_edges(u):
                nd = d + w
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
    return DistanceMap(source=source, dist=tuple(dist))


class ShortestPathDag:
    """The source-rooted shortest-path DAG of a graph.

    ``order`` lists the reachable vertices by nondecreasing distance, ties
    broken by vertex id.  Every retained edge strictly increases the distance
    (weights are positive), so that ordering is topological for the retained
    edges, in both input modes.
    """

    __slots__ = ("source", "n", "dist", "out_adj", "in_adj", "order")

    def __init__(self, source, n, dist, out_adj, in_adj, order):
        self.source = source
        self.n = n
        self.dist = dist
        self.out_adj = out_adj  # v -> [(w, edge_id)]
        self.in_adj = in_adj  # v -> [(u, edge_id)]
        self.order = order

    def restricted(self, alive: Sequence[bool], source: Optional[int] = None) -> "ShortestPathDag":
        """The sub-DAG induced on ``alive`` vertices, optionally re-rooted.

        Distances are kept from the original graph: any path of the
        restriction is still a shortest path there, which is what the
        search-stage instances require.
        """
        out_adj = [
            [(w, e) for (w, e) in self.out_adj[v] if alive[w]] if alive[v] else []
            for v in range(self.n)
        ]
        in_adj = [
            [(u, e) for (u, e) in self.in_adj[v] if alive[u]] if alive[v] else []
            for v in range(self.n)
        ]
        order = [v for v in self.order if alive[v]]
        return ShortestPathDag(
            source=self.source if source is None else source,
            n=self.n,
            dist=self.dist,
            out_adj=out_adj,
            in_adj=in_adj,
            order=order,
        )


def build_sp_dag(g: Graph, source: int) -> ShortestPathDag:
    """Keep exactly the edges with dist(v) = dist(u) + w; undirected edges are
    tested in both orientations (at most one can qualify)."""
    dm = sssp(g, source)
    dist = dm.dist
    out_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    in_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]

    def try_orientation(u: int, v: int, w: int, eid: int) -> None:
        if dist[u] is not None and dist[v] is not None and dist[u] + w == dist[v]:
            out_adj[u].append((v, eid))
            in_adj[v].append((u, eid))

    for eid, (u, v, w) in enumerate(g.edges):
        try_orientation(u, v, w, eid)
        if g.mode == MODE_UNDIRECTED and u != v:
            try_orientation(v, u, w, eid)

    order = sorted(
        (v for v in range(g.n) if dist[v] is not None),
        key=lambda v: (dist[v], v),
    )
    return ShortestPathDag(
        source=source, n=g.n, dist=dist, out_adj=out_adj, in_adj=in_adj, order=order
    )


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------
#
# Line 1:            n m mode k      (mode is "dag" or "undirected")
# next k lines:      s_i t_i
# next m lines:      u v w           (0-based vertex ids, positive integer w)
# '#' starts a comment; blank lines are skipped.


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def load_graph(text: str) -> Graph:
    """Parse and validate a graph file (format above)."""
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 4:
        raise GraphFormatError("header must be 'n m mode k'")
    try:
        n, m, k = int(head[0]), int(head[1]), int(head[3])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {exc}") from None
    mode = head[2]
    if mode not in (MODE_DAG, MODE_UNDIRECTED):
        raise GraphFormatError(f"mode must be 'dag' or 'undirected', got {mode!r}")
    if len(lines) != 1 + k + m:
        raise GraphFormatError(
            f"expected {1 + k + m} content lines, found {len(lines)}"
        )
    terminals = []
    for line in lines[1 : 1 + k]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad terminal line: {line!r}")
        try:
            terminals.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad terminal line: {line!r}") from None
    edges = []
    for line in lines[1 + k :]:
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(f"bad edge line: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1]), int(parts[2])))
        except ValueError:
            raise GraphFormatError(f"bad edge line: {line!r}") from None
    return Graph(n=n, mode=mode, edges=edges, terminals=terminals)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m} {g.mode} {g.k}"]
    for s, t in g.terminals:
        out.append(f"{s} {t}")
    for u, v, w in g.edges:
        out.append(f"{u} {v} {w}")
    return "\n".join(out) + "\n"


def path_weight(g: Graph, path: Sequence[int]) -> Optional[int]:
    """Total weight of a vertex path, or None if some hop has no edge.

    With parallel edges the cheapest edge per hop is charged, which is the
    right reading when checking whether a path is shortest.
    """
    if len(path) < 1:
        return None
    total = 0
    for a, b in zip(path, path[1:]):
        best = None
        for v, w, _ in g.out_edges(a):
            if v == b and (best is None or w < best):
                best = w
        if best is None:
            return None
        total += best
    return total


def is_simple_path(g: Graph, path: Sequence[int]) -> bool:
    if len(path) == 0 or len(set(path)) != len(path):
        return False
    return all(0 <= v < g.n for v in path) and path_weight(g, path) is not None
