"""Brute-force ground truth for small instances.

Everything here is independent of the fast modules: families of paths and
path pairs are materialized explicitly (over the shortest-path DAG, so only
shortest paths are ever generated) and summed term by term.  These functions
exist solely as test oracles; count guards protect against pathological
blowup rather than making enumeration scale.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

import numpy as np

from .errors import EnumerationLimitError
from .gf2 import Assignment, mul_raw
from .graph import Graph, ShortestPathDag, build_sp_dag

DEFAULT_LIMIT = 10**6

DISJOINT = "disjoint"
SINGLE = "single-intersection"
AGREE = "agree"
REVERSING = "reversing"


def classify_pair(p1: Sequence[int], p2: Sequence[int]) -> str:
    """Classify how two shortest paths overlap.

    Keyed by the first vertex of p1 in the intersection: a lone common vertex
    is a single intersection; otherwise that vertex is either the first or
    the last of p2 in the intersection (agreeing / reversing).  Any other
    configuration would contradict the ordering structure of shortest paths,
    so it raises.
    """
    common = set(p1) & set(p2)
    if not common:
        return DISJOINT
    if len(common) == 1:
        return SINGLE
    first_p2 = next(v for v in p2 if v in common)
    last_p2 = next(v for v in reversed(p2) if v in common)
    v = next(v for v in p1 if v in common)
    if v == first_p2:
        return AGREE
    if v == last_p2:
        return REVERSING
    raise AssertionError(
        f"unclassifiable shortest-path pair: {p1!r} / {p2!r}"
    )


def _collect_forward(dag: ShortestPathDag, start: int, limit: int):
    """All paths of the DAG starting at ``start``, grouped by endpoint.

    Returns {v: [(vertices, edge_ids), ...]}.  Raises when more than
    ``limit`` paths would be produced.
    """
    out: dict[int, list] = {}
    count = 0

    def visit(v: int, verts: tuple, eids: tuple) -> None:
        nonlocal count
        count += 1
        if count > limit:
            raise EnumerationLimitError(f"more than {limit} paths enumerated")
        out.setdefault(v, []).append((verts, eids))
        for w, eid in dag.out_adj[v]:
            visit(w, verts + (w,), eids + (eid,))

    visit(start, (start,), ())
    return out


def _collect_backward(dag: ShortestPathDag, target: int, limit: int):
    """All paths of the DAG ending at ``target``, grouped by start vertex."""
    out: dict[int, list] = {}
    count = 0

    def visit(v: int, verts: tuple, eids: tuple) -> None:
        nonlocal count
        count += 1
        if count > limit:
            raise EnumerationLimitError(f"more than {limit} paths enumerated")
        out.setdefault(v, []).append((verts, eids))
        for u, eid in dag.in_adj[v]:
            visit(u, (u,) + verts, (eid,) + eids)

    if 0 <= target < dag.n:
        visit(target, (target,), ())
    return out


def enum_shortest_paths(
    g: Graph, s: int, t: int, limit: int = DEFAULT_LIMIT
) -> list[tuple[int, ...]]:
    """Every (s, t)-shortest path, as vertex tuples in sorted order.

    Enumerates over the s-shortest-path DAG restricted to vertices that can
    still reach t, so nothing but shortest paths is ever walked.
    """
    dag = build_sp_dag(g, s)
    if dag.dist[t] is None:
        return []
    reaches: list[bool] = [False] * g.n
    reaches[t] = True
    for v in reversed(dag.order):
        if not reaches[v]:
            reaches[v] = any(reaches[w] for w, _ in dag.out_adj[v])
    pruned = dag.restricted(reaches)
    forward = _collect_forward(pruned, s, limit) if reaches[s] else {}
    return sorted(verts for verts, _ in forward.get(t, ()))


def _monomial(eids: Sequence[int], values: Sequence[int]) -> int:
    acc = 1
    for e in eids:
        x = values[e]
        if x == 0:
            return 0
        acc = mul_raw(acc, x) if acc != 1 else x
    return acc


class Brute2dsp:
    """Cached enumerations for one instance; reusable across assignments.

    Enumerates, for both shortest-path DAGs, all source-rooted and
    target-rooted path families, and materializes the standard pairs with
    their overlap classification.
    """

    def __init__(self, g: Graph, limit: int = DEFAULT_LIMIT):
        if g.k < 2:
            raise ValueError("2-DSP oracle needs two terminal pairs")
        self.g = g
        (s1, t1), (s2, t2) = g.terminals[0], g.terminals[1]
        self.s1, self.t1, self.s2, self.t2 = s1, t1, s2, t2
        self.dag1 = build_sp_dag(g, s1)
        self.dag2 = build_sp_dag(g, s2)
        self.lpaths1 = _collect_forward(self.dag1, s1, limit)
        self.lpaths2 = _collect_forward(self.dag2, s2, limit)
        self.rpaths1 = _collect_backward(self.dag1, t1, limit)
        self.rpaths2 = _collect_backward(self.dag2, t2, limit)
        p1s = self.lpaths1.get(t1, [])
        p2s = self.lpaths2.get(t2, [])
        if len(p1s) * len(p2s) > limit:
            raise EnumerationLimitError("too many standard pairs")
        self.pairs = []
        for (v1, e1), (v2, e2) in itertools.product(p1s, p2s):
            # every path pair has strictly fewer than 2n edge factors
            assert len(e1) + len(e2) < 2 * g.n
            self.pairs.append((v1, e1, v2, e2, classify_pair(v1, v2)))

    # -- family sums -----------------------------------------------------

    def eval_family(self, family: str, assignment, v: Optional[int] = None) -> int:
        values = assignment.values if isinstance(assignment, Assignment) else assignment
        if family in ("L1", "L2", "R1", "R2"):
            if v is None:
                raise ValueError(f"family {family} needs a vertex")
            table = {
                "L1": self.lpaths1,
                "L2": self.lpaths2,
                "R1": self.rpaths1,
                "R2": self.rpaths2,
            }[family]
            return self._sum_paths(table.get(v, ()), values)
        if family == "D":
            return self._sum_d(values, v)
        if family == "T":
            return self._sum_t(values, v)
        if family == "H":
            return self._sum_h(values, v)
        selector = {
            "all-standard": lambda c: True,
            "intersecting": lambda c: c != DISJOINT,
            "disjoint": lambda c: c == DISJOINT,
            "agree": lambda c: c == AGREE,
            "disagree": lambda c: c in (SINGLE, REVERSING),
        }.get(family)
        if selector is None:
            raise ValueError(f"unknown family {family!r}")
        acc = 0
        for _, e1, _, e2, cls in self.pairs:
            if selector(cls):
                acc ^= _monomial(e1 + e2, values)
        return acc

    def _sum_paths(self, paths, values) -> int:
        acc = 0
        for _, eids in paths:
            acc ^= _monomial(eids, values)
        return acc

    def _sum_d(self, values, v: Optional[int]) -> int:
        """Pairs of source-rooted paths meeting only at v."""
        if v is None:
            raise ValueError("family D needs a vertex")
        acc = 0
        for (v1, e1), (v2, e2) in itertools.product(
            self.lpaths1.get(v, ()), self.lpaths2.get(v, ())
        ):
            if len(set(v1) & set(v2)) == 1:  # exactly {v}
                acc ^= _monomial(e1 + e2, values)
        return acc

    def _sum_t(self, values, v: Optional[int]) -> int:
        """Pairs of target-bound paths whose second vertices differ."""
        if v is None:
            raise ValueError("family T needs a vertex")
        acc = 0
        for (v1, e1), (v2, e2) in itertools.product(
            self.rpaths1.get(v, ()), self.rpaths2.get(v, ())
        ):
            a = v1[1] if len(v1) > 1 else None
            b = v2[1] if len(v2) > 1 else None
            if a is None or b is None or a != b:
                acc ^= _monomial(e1 + e2, values)
        return acc

    def _sum_h(self, values, v: Optional[int]) -> int:
        """Standard pairs where the vertex before v on P1 equals the vertex
        after v on P2."""
        if v is None:
            raise ValueError("family H needs a vertex")
        acc = 0
        for v1, e1, v2, e2, _ in self.pairs:
            if v not in v1 or v not in v2:
                continue
            i1 = v1.index(v)
            i2 = v2.index(v)
            if i1 == 0 or i2 == len(v2) - 1:
                continue
            if v1[i1 - 1] == v2[i2 + 1]:
                acc ^= _monomial(e1 + e2, values)
        return acc

    # -- decisions ---------------------------------------------------------

    def has_disjoint_pair(self) -> bool:
        return any(cls == DISJOINT for *_, cls in self.pairs)

    def disjoint_pairs(self) -> list[tuple[tuple, tuple]]:
        return [(v1, v2) for v1, _, v2, _, cls in self.pairs if cls == DISJOINT]

    def solution_edges(self) -> set[int]:
        """Edge ids appearing on at least one disjoint standard pair."""
        out: set[int] = set()
        for v1, e1, v2, e2, cls in self.pairs:
            if cls == DISJOINT:
                out.update(e1)
                out.update(e2)
        return out


def brute_eval(
    g: Graph, family: str, assignment, v: Optional[int] = None, limit: int = DEFAULT_LIMIT
) -> int:
    """One-shot family evaluation (builds a fresh cache; see Brute2dsp)."""
    return Brute2dsp(g, limit=limit).eval_family(family, assignment, v=v)


def brute_2dsp(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    return Brute2dsp(g, limit=limit).has_disjoint_pair()


def _shortest_path_pool(g: Graph, limit: int):
    """Per terminal pair: all shortest paths as (vertices, edge-id set)."""
    pools = []
    for s, t in g.terminals:
        dag = build_sp_dag(g, s)
        if dag.dist[t] is None:
            return None
        forward = _collect_forward(dag, s, limit)
        pool = [(verts, frozenset(eids)) for verts, eids in forward.get(t, ())]
        if not pool:
            return None
        pools.append(pool)
    return pools


def brute_kedsp(g: Graph, k: Optional[int] = None, limit: int = DEFAULT_LIMIT) -> bool:
    """Exhaustive search for pairwise edge-disjoint shortest paths."""
    if k is not None and k != g.k:
        raise ValueError("k must match the number of terminal pairs")
    pools = _shortest_path_pool(g, limit)
    if pools is None:
        return False
    order = sorted(range(len(pools)), key=lambda i: len(pools[i]))

    def extend(idx: int, used: frozenset) -> bool:
        if idx == len(order):
            return True
        for _, eids in pools[order[idx]]:
            if not (eids & used):
                if extend(idx + 1, used | eids):
                    return True
        return False

    return extend(0, frozenset())


def _all_simple_paths(g: Graph, s: int, t: int, limit: int) -> list[tuple[int, ...]]:
    paths: list[tuple[int, ...]] = []
    count = 0

    def visit(v: int, seen: set, verts: list) -> None:
        nonlocal count
        if v == t:
            count += 1
            if count > limit:
                raise EnumerationLimitError(f"more than {limit} simple paths")
            paths.append(tuple(verts))
            return
        for w, _, _ in g.out_edges(v):
            if w not in seen:
                seen.add(w)
                verts.append(w)
                visit(w, seen, verts)
                verts.pop()
                seen.remove(w)

    visit(s, {s}, [s])
    return paths


def brute_kdp(g: Graph, p: Optional[int] = None, limit: int = DEFAULT_LIMIT) -> bool:
    """Exhaustive search for fully vertex-disjoint (not necessarily shortest)
    paths, one per terminal pair.  Pairs are attacked fewest-paths-first."""
    if p is not None and p != g.k:
        raise ValueError("p must match the number of terminal pairs")
    pools = []
    for s, t in g.terminals:
        pool = _all_simple_paths(g, s, t, limit)
        if not pool:
            return False
        pools.append(pool)
    order = sorted(range(len(pools)), key=lambda i: len(pools[i]))

    def extend(idx: int, used: frozenset) -> bool:
        if idx == len(order):
            return True
        for verts in pools[order[idx]]:
            vs = frozenset(verts)
            if not (vs & used):
                if extend(idx + 1, used | vs):
                    return True
        return False

    return extend(0, frozenset())


def brute_kdsp(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    """Exhaustive search for fully vertex-disjoint shortest paths."""
    pools = _shortest_path_pool(g, limit)
    if pools is None:
        return False
    order = sorted(range(len(pools)), key=lambda i: len(pools[i]))
    vertex_pools = [[(frozenset(verts), verts) for verts, _ in pool] for pool in pools]

    def extend(idx: int, used: frozenset) -> bool:
        if idx == len(order):
            return True
        for vs, _ in vertex_pools[order[idx]]:
            if not (vs & used):
                if extend(idx + 1, used | vs):
                    return True
        return False

    return extend(0, frozenset())


def brute_clique(adjacency, k: int, n: int) -> bool:
    """Does the k-partite instance contain a k-clique?  ``adjacency`` is a
    callable (i, a, j, b) -> bool on part indices i, j and members a, b."""
    for combo in itertools.product(range(n), repeat=k):
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                if not adjacency(i, combo[i], j, combo[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def min_covering_family_size(k: int) -> int:
    """Exact minimum number of increasing lists over [k] covering every pair
    (i, j), i < j, as consecutive members.

    Breadth-first search over coverage bitmasks.  For k >= 6 candidates are
    restricted to lists containing both 1 and k, which loses no generality:
    extending any list with 1 (below its minimum) or k (above its maximum)
    preserves all its consecutive pairs.
    """
    if k < 2:
        return 0
    pairs = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    pair_bit = {p: idx for idx, p in enumerate(pairs)}
    full = (1 << len(pairs)) - 1

    def mask_of(elems) -> int:
        mask = 0
        for a, b in zip(elems, elems[1:]):
            mask |= 1 << pair_bit[(a, b)]
        return mask

    masks = set()
    if k >= 6:
        # WLOG restriction: interior elements vary, 1 and k always present
        interior_pool = range(2, k)
        for r in range(0, k - 1):
            for interior in itertools.combinations(interior_pool, r):
                masks.add(mask_of([1, *interior, k]))
    else:
        # small enough to enumerate every increasing list outright
        for r in range(2, k + 1):
            for elems in itertools.combinations(range(1, k + 1), r):
                masks.add(mask_of(elems))
    candidates = sorted(masks)
    reached = np.zeros(full + 1, dtype=bool)
    reached[0] = True
    frontier = np.array([0], dtype=np.int64)
    depth = 0
    while True:
        if reached[full]:
            return depth
        depth += 1
        new = []
        for c in candidates:
            new.append(frontier | c)
        combined = np.unique(np.concatenate(new))
        fresh = combined[~reached[combined]]
        if fresh.size == 0:
            raise AssertionError("covering search exhausted without covering")
        reached[fresh] = True
        frontier = fresh
