"""Arithmetic circuits for the disjoint-pair value, differentiable in one
reverse sweep.

The circuit is built by running the exact same pipeline as the direct
evaluator (dspath.dsp2.pipeline) under a gate-recording op context, so the
circuit's output agrees with the direct evaluation at every assignment by
construction.  A forward pass followed by one reverse pass computes the value
together with the partial derivative with respect to every edge variable
(cost proportional to circuit size).  Over characteristic two the adjoint of
a squaring gate cancels to zero, matching the formal derivative of x^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from . import dsp2
from .gf2 import Assignment, mul_raw
from .graph import Graph, ShortestPathDag

KIND_INPUT = 0
KIND_CONST = 1
KIND_ADD = 2
KIND_MUL = 3


@dataclass
class Circuit:
    """Gate list in topological (construction) order.

    For input gates ``arg1`` is the edge id; for const gates the raw field
    value; for add/mul the operand gate ids (which always precede the gate).
    There is exactly one input gate per edge variable, allocated up front.
    """

    kinds: list[int]
    arg1: list[int]
    arg2: list[int]
    out_gate: int
    num_edges: int

    @property
    def size(self) -> int:
        return len(self.kinds)

    def evaluate(self, assignment) -> int:
        return self.forward(assignment)[self.out_gate]

    def forward(self, assignment) -> list[int]:
        values = assignment.values if isinstance(assignment, Assignment) else assignment
        vals = [0] * self.size
        kinds, a1, a2 = self.kinds, self.arg1, self.arg2
        for g in range(self.size):
            k = kinds[g]
            if k == KIND_INPUT:
                vals[g] = values[a1[g]]
            elif k == KIND_CONST:
                vals[g] = a1[g]
            elif k == KIND_ADD:
                vals[g] = vals[a1[g]] ^ vals[a2[g]]
            else:
                x, y = vals[a1[g]], vals[a2[g]]
                vals[g] = mul_raw(x, y) if x and y else 0
        return vals


@dataclass
class GradientMap:
    """Circuit output plus the partial derivative per edge variable."""

    value: int
    partials: list[int]


class GateOps:
    """Op context that records gates instead of evaluating.

    Trivial operations are folded (x + 0 = x, x * 1 = x, x * 0 = 0) so the
    recorded circuit stays linear in the number of edges without changing
    the computed polynomial.
    """

    def __init__(self, num_edges: int):
        self.kinds: list[int] = []
        self.arg1: list[int] = []
        self.arg2: list[int] = []
        self.zero = self._emit(KIND_CONST, 0, 0)
        self.one = self._emit(KIND_CONST, 1, 0)
        self._inputs = [self._emit(KIND_INPUT, e, 0) for e in range(num_edges)]
        self.num_edges = num_edges

    def _emit(self, kind: int, a: int, b: int) -> int:
        self.kinds.append(kind)
        self.arg1.append(a)
        self.arg2.append(b)
        return len(self.kinds) - 1

    def var(self, eid: int) -> int:
        return self._inputs[eid]

    def add(self, a: int, b: int) -> int:
        if a == self.zero:
            return b
        if b == self.zero:
            return a
        return self._emit(KIND_ADD, a, b)

    def mul(self, a: int, b: int) -> int:
        if a == self.zero or b == self.zero:
            return self.zero
        if a == self.one:
            return b
        if b == self.one:
            return a
        return self._emit(KIND_MUL, a, b)

    def finish(self, out_gate: int) -> Circuit:
        return Circuit(
            kinds=self.kinds,
            arg1=self.arg1,
            arg2=self.arg2,
            out_gate=out_gate,
            num_edges=self.num_edges,
        )


def build_circuit_from_dags(
    dag1: ShortestPathDag,
    t1: int,
    dag2: ShortestPathDag,
    t2: int,
    num_edges: int,
    branch: str,
) -> Circuit:
    ops = GateOps(num_edges)
    result = dsp2.pipeline(dag1, t1, dag2, t2, ops, branch)
    return ops.finish(result["f_disj"])


def build_circuit(g: Graph) -> Circuit:
    """Circuit computing the disjoint-pair value of the full instance."""
    dag1, t1, dag2, t2 = dsp2.build_instance_dags(g)
    branch = "dag" if g.is_dag else "undirected"
    return build_circuit_from_dags(dag1, t1, dag2, t2, g.m, branch)


def eval_all_partials(c: Circuit, assignment) -> GradientMap:
    """Forward pass plus one reverse (adjoint) sweep.

    The adjoint of each multiplication propagates the co-factor's value; both
    operand slots are processed, so mul(x, x) correctly contributes twice and
    cancels, giving derivative zero in characteristic two.
    """
    vals = c.forward(assignment)
    adj = [0] * c.size
    adj[c.out_gate] = 1
    kinds, a1, a2 = c.kinds, c.arg1, c.arg2
    for g in range(c.size - 1, -1, -1):
        ag = adj[g]
        if ag == 0:
            continue
        k = kinds[g]
        if k == KIND_ADD:
            adj[a1[g]] ^= ag
            adj[a2[g]] ^= ag
        elif k == KIND_MUL:
            i, j = a1[g], a2[g]
            vj, vi = vals[j], vals[i]
            if vj:
                adj[i] ^= mul_raw(ag, vj) if vj != 1 else ag
            if vi:
                adj[j] ^= mul_raw(ag, vi) if vi != 1 else ag
    partials = [0] * c.num_edges
    for g in range(c.size):
        if kinds[g] == KIND_INPUT:
            partials[a1[g]] = adj[g]
    return GradientMap(value=vals[c.out_gate], partials=partials)
