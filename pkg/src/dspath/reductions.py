"""Hardness-instance generators: clique detection embedded into disjoint-path
problems.

Two constructions, both emitting unweighted DAGs with certification metadata:

* ``clique_to_kdsp``: a k-partite clique instance becomes a k-pair disjoint
  *shortest* paths instance on O((kn)^2) nodes.  Each vertex v of part i gets
  a canonical source-target path P(v) through one node per foreign vertex;
  non-adjacent vertex pairs share (merge) their crossing node, so P(v) and
  P(w) collide exactly on non-edges.  The shortest (s_i, t_i)-paths are
  precisely the P(v), each of length (k-1)n + 1.

* ``clique_to_pdp``: a k-partite clique instance becomes a p-pair disjoint
  paths instance on O(kn) nodes, p = k + floor(k^2/4), built from a covering
  family of increasing lists.  Row paths select one vertex per part by
  skipping its gadget; list paths thread through the selected gadget columns
  and can only cross between rows along edges of the clique instance.  The
  same instance is simultaneously a valid p-DSP instance: all intended paths
  are shortest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import GraphFormatError, InvalidGraphError
from .graph import MODE_DAG, Graph, _content_lines


@dataclass(frozen=True)
class CliqueInstance:
    """k-partite graph: parts of size n each, edges only across parts.

    ``edges`` holds (i, a, j, b) with i < j: member a of part i adjacent to
    member b of part j.  Parts and members are 0-based.
    """

    k: int
    n: int
    edges: frozenset

    @staticmethod
    def from_edges(k: int, n: int, edges: Iterable[tuple[int, int, int, int]]):
        norm = set()
        for i, a, j, b in edges:
            if i == j:
                raise InvalidGraphError("clique instance cannot have intra-part edges")
            if not (0 <= i < k and 0 <= j < k and 0 <= a < n and 0 <= b < n):
                raise InvalidGraphError(f"edge ({i},{a},{j},{b}) out of range")
            if i > j:
                i, a, j, b = j, b, i, a
            norm.add((i, a, j, b))
        return CliqueInstance(k=k, n=n, edges=frozenset(norm))

    def adjacent(self, i: int, a: int, j: int, b: int) -> bool:
        if i > j:
            i, a, j, b = j, b, i, a
        return (i, a, j, b) in self.edges

    def has_clique(self) -> bool:
        from .oracle import brute_clique

        return brute_clique(self.adjacent, self.k, self.n)


def load_clique(text: str) -> CliqueInstance:
    """Parse 'k n' then one 'i a j b' line per cross-part edge (0-based)."""
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty clique file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("clique header must be 'k n'")
    try:
        k, n = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError("clique header must be 'k n'") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 4:
            raise GraphFormatError(f"bad clique edge line: {line!r}")
        try:
            edges.append(tuple(int(x) for x in parts))
        except ValueError:
            raise GraphFormatError(f"bad clique edge line: {line!r}") from None
    return CliqueInstance.from_edges(k, n, edges)


def format_clique(c: CliqueInstance) -> str:
    out = [f"{c.k} {c.n}"]
    for i, a, j, b in sorted(c.edges):
        out.append(f"{i} {a} {j} {b}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# covering families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoveringFamily:
    """Strictly increasing lists over [1..k] such that every pair i < j
    occurs as consecutive members of some list; floor(k^2/4) lists, and every
    element appears in fewer than k of them."""

    k: int
    lists: tuple


def covering_family(k: int) -> CoveringFamily:
    """The arithmetic-progression family: for step d in [1, k-1] and start
    a <= min(d, k-d), the list a, a+d, a+2d, ... within [1, k]."""
    if k < 2:
        raise ValueError("covering families need k >= 2")
    lists = []
    for d in range(1, k):
        for a in range(1, min(d, k - d) + 1):
            lst = tuple(range(a, k + 1, d))
            lists.append(lst)
    return CoveringFamily(k=k, lists=tuple(lists))


def validate_covering_family(fam: CoveringFamily) -> None:
    """Raise AssertionError unless all three family invariants hold."""
    k = fam.k
    assert len(fam.lists) == (k * k) // 4, "family size must be floor(k^2/4)"
    covered = set()
    appearances = [0] * (k + 1)
    for lst in fam.lists:
        assert all(1 <= x <= k for x in lst)
        assert all(a < b for a, b in zip(lst, lst[1:])), "lists must increase"
        for a, b in zip(lst, lst[1:]):
            covered.add((a, b))
        for x in set(lst):
            appearances[x] += 1
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            assert (i, j) in covered, f"pair ({i},{j}) not covered"
    for x in range(1, k + 1):
        assert appearances[x] < k, f"element {x} appears in {appearances[x]} lists"


# ---------------------------------------------------------------------------
# clique -> k-DSP (quadratic-size grid)
# ---------------------------------------------------------------------------


@dataclass
class ReductionInstance:
    """A generated disjoint-paths instance plus self-check metadata."""

    graph: Graph
    certification: dict


def clique_to_kdsp(c: CliqueInstance) -> ReductionInstance:
    """See module docstring.  Unit weights; dag mode; terminals pair i is
    (s_i, t_i) for part i."""
    k, n = c.k, c.n
    if k < 2:
        raise InvalidGraphError("need at least two parts")

    # global member order: part-major
    def gid(i: int, a: int) -> int:
        return i * n + a

    ids: dict = {}
    next_id = 2 * k  # sources 0..k-1, targets k..2k-1

    def node(v: tuple[int, int], w: tuple[int, int]) -> int:
        """Crossing node of v's path over foreign vertex w; non-adjacent
        pairs share one node (canonical key = smaller global pair)."""
        nonlocal next_id
        if not c.adjacent(v[0], v[1], w[0], w[1]):
            key = min((gid(*v), gid(*w)), (gid(*w), gid(*v)))
        else:
            key = (gid(*v), gid(*w))
        got = ids.get(key)
        if got is None:
            got = next_id
            next_id += 1
            ids[key] = got
        return got

    edges = []
    terminals = [(i, k + i) for i in range(k)]
    canonical_paths: list[list[list[int]]] = []
    for i in range(k):
        foreign = [(j, b) for j in range(k) if j != i for b in range(n)]
        per_pair = []
        for a in range(n):
            v = (i, a)
            chain = [i] + [node(v, w) for w in foreign] + [k + i]
            for x, y in zip(chain, chain[1:]):
                edges.append((x, y, 1))
            per_pair.append(chain)
        canonical_paths.append(per_pair)
    # Spine: a fresh source feeding every s_i.  Nothing can enter it, so no
    # path between existing vertices changes, but it keeps outputs weakly
    # connected even when no nodes merge (dense adjacency).
    spine = next_id
    next_id += 1
    for i in range(k):
        edges.append((spine, i, 1))
    graph = Graph(n=next_id, mode=MODE_DAG, edges=edges, terminals=terminals)
    cert = {
        "kind": "clique-to-kdsp",
        "k": k,
        "n": n,
        "expected_dist": [(k - 1) * n + 1] * k,
        "node_bound": 2 * k + k * (k - 1) * n * n + 1,  # +1 for the spine
        "canonical_paths": canonical_paths,
        "clique_edges": sorted(c.edges),
    }
    return ReductionInstance(graph=graph, certification=cert)


# ---------------------------------------------------------------------------
# clique -> p-DP / p-DSP (linear-size gadget rows)
# ---------------------------------------------------------------------------


def clique_to_pdp(c: CliqueInstance) -> ReductionInstance:
    """See module docstring.  Terminal pairs: k row pairs (one per part) then
    one pair per covering list, p = k + floor(k^2/4) in total.

    Crossing structures between rows d = y - x apart have length 2d - 1 per
    traversal and encode adjacency; for d >= 2 they are built from shared
    per-vertex chains (d-1 nodes out of row x, d-1 into row y, with one
    chain-to-chain edge per clique edge), which keeps the node count linear
    in kn while preserving every path length.
    """
    k, n = c.k, c.n
    if n < 2:
        raise InvalidGraphError("gadget rows need part size n >= 2")
    fam = covering_family(k)
    lists = fam.lists
    # column index of list L within row i, for each i in L
    col: dict[tuple[int, int], int] = {}
    l_of = [0] * (k + 1)
    for li, lst in enumerate(lists):
        for x in lst:
            col[(x, li)] = l_of[x]
            l_of[x] += 1

    next_id = 0

    def fresh() -> int:
        nonlocal next_id
        next_id += 1
        return next_id - 1

    s_row = [fresh() for _ in range(k)]
    t_row = [fresh() for _ in range(k)]
    s_list = [fresh() for _ in range(len(lists))]
    t_list = [fresh() for _ in range(len(lists))]
    # gadget nodes: top[(part, member, column)], bottom[...]
    top: dict = {}
    bot: dict = {}
    for i in range(1, k + 1):
        for a in range(n):
            for r in range(l_of[i]):
                top[(i, a, r)] = fresh()
                bot[(i, a, r)] = fresh()

    edges = []

    def add(u: int, v: int) -> None:
        edges.append((u, v, 1))

    for i in range(1, k + 1):
        cols = l_of[i]
        for a in range(n):
            for r in range(cols):
                add(top[(i, a, r)], bot[(i, a, r)])
            for r in range(cols - 1):
                add(top[(i, a, r)], top[(i, a, r + 1)])
                add(bot[(i, a, r)], bot[(i, a, r + 1)])
        for a in range(n - 1):
            add(top[(i, a, cols - 1)], top[(i, a + 1, 0)])
            add(bot[(i, a, cols - 1)], bot[(i, a + 1, 0)])
        for a in range(n - 2):
            # skip edge for member a+1: jump over its whole gadget
            add(top[(i, a, cols - 1)], bot[(i, a + 2, 0)])
        add(s_row[i - 1], top[(i, 0, 0)])
        add(bot[(i, n - 1, cols - 1)], t_row[i - 1])
        add(s_row[i - 1], bot[(i, 1, 0)])  # skip the first gadget
        add(top[(i, n - 2, cols - 1)], t_row[i - 1])  # skip the last gadget

    # crossing structures per list, one per consecutive element pair
    for li, lst in enumerate(lists):
        for x, y in zip(lst, lst[1:]):
            d = y - x
            cx, cy = col[(x, li)], col[(y, li)]
            if d == 1:
                for a in range(n):
                    for b in range(n):
                        if c.adjacent(x - 1, a, y - 1, b):
                            add(bot[(x, a, cx)], top[(y, b, cy)])
            else:
                out_chain: dict[int, list[int]] = {}
                in_chain: dict[int, list[int]] = {}
                for a in range(n):
                    if any(c.adjacent(x - 1, a, y - 1, b) for b in range(n)):
                        chain = [fresh() for _ in range(d - 1)]
                        add(bot[(x, a, cx)], chain[0])
                        for u, v in zip(chain, chain[1:]):
                            add(u, v)
                        out_chain[a] = chain
                for b in range(n):
                    if any(c.adjacent(x - 1, a, y - 1, b) for a in range(n)):
                        chain = [fresh() for _ in range(d - 1)]
                        for u, v in zip(chain, chain[1:]):
                            add(u, v)
                        add(chain[-1], top[(y, b, cy)])
                        in_chain[b] = chain
                for a in range(n):
                    for b in range(n):
                        if c.adjacent(x - 1, a, y - 1, b):
                            add(out_chain[a][-1], in_chain[b][0])

    # list terminals: sources feed the first row's list column tops, targets
    # drain the last row's list column bottoms
    for li, lst in enumerate(lists):
        first, last = lst[0], lst[-1]
        for a in range(n):
            add(s_list[li], top[(first, a, col[(first, li)])])
            add(bot[(last, a, col[(last, li)])], t_list[li])

    # Spine as in clique_to_kdsp: keeps sparse instances weakly connected
    # without touching any terminal-to-terminal path.
    spine = fresh()
    for i in range(k):
        add(spine, s_row[i])
    for li in range(len(lists)):
        add(spine, s_list[li])

    terminals = [(s_row[i], t_row[i]) for i in range(k)] + [
        (s_list[li], t_list[li]) for li in range(len(lists))
    ]
    graph = Graph(n=next_id, mode=MODE_DAG, edges=edges, terminals=terminals)
    # Row distances are structural: a skip path always exists.  List-pair
    # distances reach their canonical value 2(last-first)+3 exactly when the
    # adjacency admits a full chain along the list; otherwise they are
    # longer (or infinite), so the certificate records the actual distances
    # alongside the canonical solution-path lengths.
    from .graph import sssp as _sssp

    actual = [_sssp(graph, s).dist[t] for s, t in terminals]
    canonical = [(n - 1) * l_of[i] + 1 for i in range(1, k + 1)] + [
        2 * (lst[-1] - lst[0]) + 3 for lst in lists
    ]
    cert = {
        "kind": "clique-to-pdp",
        "k": k,
        "n": n,
        "p": k + len(lists),
        "lists": [list(lst) for lst in lists],
        "list_terminals": {
            str(list(lst)): [s_list[li], t_list[li]] for li, lst in enumerate(lists)
        },
        "expected_dist": actual,
        "canonical_dist": canonical,
        "node_bound": 4 * (k + len(lists)) + 2 * k * k * n + 1,  # +1 spine
        "clique_edges": sorted(c.edges),
    }
    return ReductionInstance(graph=graph, certification=cert)
