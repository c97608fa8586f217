"""Decide 2-DSP by evaluating path-pair enumerating polynomials over GF(2^64).

For terminal pairs (s1, t1), (s2, t2) let G1, G2 be the two shortest-path
DAGs.  A *standard pair* is a pair of paths (P1, P2) with each Pi an
(si, ti)-path of Gi, i.e. a shortest path.  Assign every edge an independent
random field value; the value of a path family is the sum over the family of
the product of each path's edge values.  The families evaluated here:

  L_i(v), R_i(v)   paths of Gi from s_i into v / from v into t_i
  D(v)             pairs from s1, s2 to v with distinct penultimate vertices
                   (equal, in characteristic two, to pairs meeting only at v)
  T(v)             pairs from v to t1, t2 with distinct second vertices
  H(v)             standard pairs where the vertex before v on P1 equals the
                   vertex after v on P2 (the reversing local pattern)
  agree / disagree / intersecting / disjoint standard pairs

All the identities implemented below hold exactly over characteristic two
(not merely with high probability), which is what the brute-force oracle
tests check.  The decision itself is one-sided Monte Carlo: the disjoint-pair
value is nonzero only if a solution exists, and if one exists a random
evaluation is nonzero with probability at least 1 - 2n/2^64 per trial.

Parallel edges are supported: each edge index carries its own variable, and
neighbor sums group parallel edges (cross terms between ordered pairs are
enumerated, never cancelled by hand).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidGraphError
from .gf2 import Assignment, mul_raw
from .graph import Graph, ShortestPathDag, build_sp_dag


@dataclass
class PathTables:
    """Per-vertex table values for the two shortest-path DAGs."""

    L1: list
    L2: list
    R1: list
    R2: list


@dataclass
class LocalTables:
    """Per-vertex source-linkage (D), relaxed-target (T) and mixed-overlap
    (H) values."""

    D: list
    T: list
    H: list


@dataclass(frozen=True)
class Verdict:
    answer: str  # "yes" | "no"
    value: int  # first nonzero evaluation, else 0
    trials: int
    seed: Optional[int] = None

    @property
    def is_yes(self) -> bool:
        return self.answer == "yes"


# ---------------------------------------------------------------------------
# Field-op contexts: the same pipeline either evaluates values directly or
# records gates into an arithmetic circuit (see dspath.circuit), so the two
# always agree by construction.
# ---------------------------------------------------------------------------


class ValueOps:
    """Immediate evaluation over raw GF(2^64) ints."""

    zero = 0
    one = 1

    def __init__(self, values: Sequence[int]):
        self._values = values

    def var(self, eid: int) -> int:
        return self._values[eid]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        return mul_raw(a, b)


def pipeline(
    dag1: ShortestPathDag,
    t1: int,
    dag2: ShortestPathDag,
    t2: int,
    ops,
    branch: str,
    full: bool = False,
):
    """Evaluate the whole 2-DSP pipeline under an op context.

    ``branch`` selects the final composition: "dag" uses the per-vertex
    first-intersection sum, "undirected" splits intersecting pairs into
    agreeing and disagreeing families.  ``full`` computes every component
    regardless of branch (used by the identity test suite).

    Returns a dict with entries L1, L2, R1, R2, D, T, H, f_agree, f_dis,
    f_cap, f_disj (entries not needed for the branch are present only when
    ``full``).
    """
    if branch not in ("dag", "undirected"):
        raise ValueError(f"unknown branch {branch!r}")
    n = dag1.n
    L1 = _left_table(dag1, ops, n)
    L2 = _left_table(dag2, ops, n)
    R1 = _right_table(dag1, t1, ops, n)
    R2 = _right_table(dag2, t2, ops, n)
    D = _source_linkage(L1, L2, dag1, dag2, ops, n)
    out: dict = {"L1": L1, "L2": L2, "R1": R1, "R2": R2, "D": D}

    want_undirected = full or branch == "undirected"
    want_dag = full or branch == "dag"

    if want_dag:
        f_cap_dag = ops.zero
        for v in range(n):
            f_cap_dag = ops.add(f_cap_dag, ops.mul(D[v], ops.mul(R1[v], R2[v])))
        out["f_cap_dag"] = f_cap_dag
    if want_undirected:
        T = _target_linkage(R1, R2, dag1, dag2, ops, n)
        H = _mixed_overlap(L1, L2, R1, R2, dag1, dag2, ops, n)
        f_agree = _agree_sum(D, R1, R2, dag1, dag2, ops, n)
        f_dis = ops.zero
        for v in range(n):
            f_dis = ops.add(f_dis, ops.add(ops.mul(D[v], T[v]), H[v]))
        out.update(T=T, H=H, f_agree=f_agree, f_dis=f_dis)
        out["f_cap_undirected"] = ops.add(f_agree, f_dis)

    f_cap = out["f_cap_dag"] if branch == "dag" else out["f_cap_undirected"]
    out["f_cap"] = f_cap
    all_pairs = ops.mul(L1[t1], L2[t2])
    out["all_standard"] = all_pairs
    out["f_disj"] = ops.add(all_pairs, f_cap)  # subtraction = addition here
    return out


def _left_table(dag: ShortestPathDag, ops, n: int) -> list:
    """Forward DP over the DAG's topological order: L(v) sums, over paths
    from the source into v, the product of edge values."""
    L = [ops.zero] * n
    L[dag.source] = ops.one
    for v in dag.order:
        if v == dag.source:
            continue
        acc = ops.zero
        for u, eid in dag.in_adj[v]:
            acc = ops.add(acc, ops.mul(L[u], ops.var(eid)))
        L[v] = acc
    return L


def _right_table(dag: ShortestPathDag, target: int, ops, n: int) -> list:
    """Backward DP: R(v) sums over paths from v into the target.

    Vertices past the target in distance order can never reach it (retained
    edges strictly increase distance), so seeding R(target) = 1 first is
    sound.
    """
    R = [ops.zero] * n
    if not 0 <= target < n:
        return R
    R[target] = ops.one
    for v in reversed(dag.order):
        if v == target:
            continue
        acc = ops.zero
        for w, eid in dag.out_adj[v]:
            acc = ops.add(acc, ops.mul(ops.var(eid), R[w]))
        R[v] = acc
    return R


def _grouped(adj_entries) -> dict:
    """Group adjacency entries by neighbor vertex, summing parallel-edge
    variables; returns {neighbor: list of edge ids}."""
    groups: dict = {}
    for nbr, eid in adj_entries:
        groups.setdefault(nbr, []).append(eid)
    return groups


def _group_value(eids: list, ops):
    acc = ops.zero
    for eid in eids:
        acc = ops.add(acc, ops.var(eid))
    return acc


def _source_linkage(L1, L2, dag1, dag2, ops, n: int) -> list:
    """D(v) = L1(v)L2(v) - sum over common in-neighbors u of
    L1(u)L2(u) X1(u,v) X2(u,v), with Xi the (parallel-grouped) edge variable
    of (u, v) in DAG i.  Marking one DAG's in-neighbors and scanning the
    other's keeps the total cost O(m)."""
    D = [ops.zero] * n
    for v in range(n):
        acc = ops.mul(L1[v], L2[v])
        g1 = _grouped(dag1.in_adj[v])
        if g1:
            for u, eids2 in _grouped(dag2.in_adj[v]).items():
                eids1 = g1.get(u)
                if eids1 is None:
                    continue
                x1 = _group_value(eids1, ops)
                x2 = _group_value(eids2, ops)
                term = ops.mul(ops.mul(L1[u], L2[u]), ops.mul(x1, x2))
                acc = ops.add(acc, term)
        D[v] = acc
    return D


def _target_linkage(R1, R2, dag1, dag2, ops, n: int) -> list:
    """T(v) = R1(v)R2(v) - sum over common out-neighbors w of
    X1(v,w) X2(v,w) R1(w)R2(w); mirror image of the source linkage."""
    T = [ops.zero] * n
    for v in range(n):
        acc = ops.mul(R1[v], R2[v])
        g1 = _grouped(dag1.out_adj[v])
        if g1:
            for w, eids2 in _grouped(dag2.out_adj[v]).items():
                eids1 = g1.get(w)
                if eids1 is None:
                    continue
                x1 = _group_value(eids1, ops)
                x2 = _group_value(eids2, ops)
                term = ops.mul(ops.mul(x1, x2), ops.mul(R1[w], R2[w]))
                acc = ops.add(acc, term)
        T[v] = acc
    return T


def _mixed_overlap(L1, L2, R1, R2, dag1, dag2, ops, n: int) -> list:
    """H(v) sums L1(u) X1(u,v) R1(v) L2(v) X2(v,u) R2(u) over vertices u that
    are in-neighbors of v in DAG 1 and out-neighbors of v in DAG 2.

    On a DAG input the mixed neighborhood is empty (a directed edge cannot be
    retained in both orientations), so H is identically zero there.
    """
    H = [ops.zero] * n
    for v in range(n):
        g1_in = _grouped(dag1.in_adj[v])
        if not g1_in:
            continue
        acc = ops.zero
        hit = False
        for u, eids2 in _grouped(dag2.out_adj[v]).items():
            eids1 = g1_in.get(u)
            if eids1 is None:
                continue
            hit = True
            x1 = _group_value(eids1, ops)
            x2 = _group_value(eids2, ops)
            left = ops.mul(ops.mul(L1[u], x1), R1[v])
            right = ops.mul(ops.mul(L2[v], x2), R2[u])
            acc = ops.add(acc, ops.mul(left, right))
        if hit:
            H[v] = acc
    return H


def _agree_sum(D, R1, R2, dag1, dag2, ops, n: int):
    """Sum of D(v) x_e^2 R1(w) R2(w) over edges e = (v, w) retained, in the
    same orientation, by both DAGs.

    Only the *same physical edge* counts: pairs overlapping on distinct
    parallel edges cancel in characteristic two, so x_e^2 is summed per edge,
    not a product of group sums.
    """
    total = ops.zero
    for v in range(n):
        eids1 = {eid: w for w, eid in dag1.out_adj[v]}
        if not eids1:
            continue
        for w, eid in dag2.out_adj[v]:
            if eid in eids1 and eids1[eid] == w:
                x = ops.var(eid)
                term = ops.mul(ops.mul(D[v], ops.mul(x, x)), ops.mul(R1[w], R2[w]))
                total = ops.add(total, term)
    return total


# ---------------------------------------------------------------------------
# public per-operation surface (value mode)
# ---------------------------------------------------------------------------


def _values(a) -> Sequence[int]:
    return a.values if isinstance(a, Assignment) else a


def eval_path_tables(dag1, t1, dag2, t2, assignment) -> PathTables:
    ops = ValueOps(_values(assignment))
    n = dag1.n
    return PathTables(
        L1=_left_table(dag1, ops, n),
        L2=_left_table(dag2, ops, n),
        R1=_right_table(dag1, t1, ops, n),
        R2=_right_table(dag2, t2, ops, n),
    )


def eval_source_linkage(tables: PathTables, dag1, dag2, assignment) -> list[int]:
    ops = ValueOps(_values(assignment))
    return _source_linkage(tables.L1, tables.L2, dag1, dag2, ops, dag1.n)


def eval_target_linkage(tables: PathTables, dag1, dag2, assignment) -> list[int]:
    ops = ValueOps(_values(assignment))
    return _target_linkage(tables.R1, tables.R2, dag1, dag2, ops, dag1.n)


def eval_mixed_overlap(tables: PathTables, dag1, dag2, assignment) -> list[int]:
    ops = ValueOps(_values(assignment))
    return _mixed_overlap(
        tables.L1, tables.L2, tables.R1, tables.R2, dag1, dag2, ops, dag1.n
    )


def eval_local_tables(tables: PathTables, dag1, dag2, assignment) -> LocalTables:
    """D, T and H in one pass over the two DAGs."""
    ops = ValueOps(_values(assignment))
    n = dag1.n
    return LocalTables(
        D=_source_linkage(tables.L1, tables.L2, dag1, dag2, ops, n),
        T=_target_linkage(tables.R1, tables.R2, dag1, dag2, ops, n),
        H=_mixed_overlap(
            tables.L1, tables.L2, tables.R1, tables.R2, dag1, dag2, ops, n
        ),
    )


def eval_intersect_sum_dag(D: Sequence[int], tables: PathTables) -> int:
    ops = ValueOps(())
    total = 0
    for v in range(len(D)):
        total = ops.add(total, ops.mul(D[v], ops.mul(tables.R1[v], tables.R2[v])))
    return total


def eval_agree_sum(D: Sequence[int], tables: PathTables, dag1, dag2, assignment) -> int:
    ops = ValueOps(_values(assignment))
    return _agree_sum(D, tables.R1, tables.R2, dag1, dag2, ops, dag1.n)


def eval_disagree_sum(D: Sequence[int], T: Sequence[int], H: Sequence[int]) -> int:
    total = 0
    for d, t, h in zip(D, T, H):
        total ^= (mul_raw(d, t) if d and t else 0) ^ h
    return total


def build_instance_dags(g: Graph) -> tuple[ShortestPathDag, int, ShortestPathDag, int]:
    """Shortest-path DAGs for the first two terminal pairs."""
    if g.k < 2:
        raise InvalidGraphError("2-DSP needs two terminal pairs")
    (s1, t1), (s2, t2) = g.terminals[0], g.terminals[1]
    return build_sp_dag(g, s1), t1, build_sp_dag(g, s2), t2


def eval_disjoint_sum(g: Graph, assignment) -> int:
    """Value of the vertex-disjoint standard-pair family at an assignment."""
    values = _values(assignment)
    if len(values) != g.m:
        raise ValueError("assignment must cover every edge")
    dag1, t1, dag2, t2 = build_instance_dags(g)
    branch = "dag" if g.is_dag else "undirected"
    return pipeline(dag1, t1, dag2, t2, ValueOps(values), branch)["f_disj"]


DEFAULT_TRIALS = 2


def decide_2dsp(
    g: Graph,
    trials: int = DEFAULT_TRIALS,
    rng: Optional[random.Random] = None,
    seed: Optional[int] = None,
    engine: str = "auto",
    prebuilt=None,
) -> Verdict:
    """One-sided randomized 2-DSP decision.

    YES answers are certain (a nonzero evaluation certifies a nonzero
    polynomial, hence a solution); a NO can be wrong with probability at most
    trials * 2n/2^64.  ``engine`` is "auto", "reference", or "fast"; the fast
    engine (vectorized, see dspath.fastpath) is picked automatically for
    large simple graphs and agrees bit-for-bit with the reference on shared
    assignments.  ``prebuilt`` optionally carries the output of
    build_instance_dags to avoid rebuilding (reference engine only).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if g.k < 2:
        raise InvalidGraphError("2-DSP needs two terminal pairs")
    if rng is None:
        rng = random.Random(seed)

    if engine == "auto":
        engine = "fast" if _fastpath_wanted(g) else "reference"
    if engine == "fast":
        from . import fastpath

        if fastpath.available(g):
            return fastpath.decide_2dsp_fast(g, trials=trials, rng=rng, seed=seed)
        engine = "reference"

    dag1, t1, dag2, t2 = prebuilt if prebuilt is not None else build_instance_dags(g)
    # If either target is unreachable the family is empty; skip field work.
    if dag1.dist[t1] is None or dag2.dist[t2] is None:
        return Verdict(answer="no", value=0, trials=0, seed=seed)
    branch = "dag" if g.is_dag else "undirected"
    for trial in range(trials):
        values = [rng.getrandbits(64) for _ in range(g.m)]
        ops = ValueOps(values)
        value = pipeline(dag1, t1, dag2, t2, ops, branch)["f_disj"]
        if value != 0:
            return Verdict(answer="yes", value=value, trials=trial + 1, seed=seed)
    return Verdict(answer="no", value=0, trials=trials, seed=seed)


_FASTPATH_MIN_EDGES = 20_000


def _fastpath_wanted(g: Graph) -> bool:
    return g.m >= _FASTPATH_MIN_EDGES
