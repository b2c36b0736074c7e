"""Exact brute-force oracles for crossing number and local crossing number.

Intended for desk-scale inputs only; budgets cap the searched space and
exhaustion is reported as an exception, never as a silent false.

The search inserts crossings one at a time.  At each step it planarises the
current configuration; if the result is non-planar it extracts a Kuratowski
subgraph and branches only on crossings that join two of its paths, because
a crossing touching at most one path leaves the obstruction intact (its
paths merely get subdivided, or shortcut through a merge point on a single
path).  Any drawing therefore remains reachable, while the branching factor
stays far below blind enumeration of crossing multisets.

For k <= 3 the search is restricted to good configurations: distinct edge
copies cross at most once and adjacent copies (sharing an endpoint, which
includes parallel copies) never cross.  Some optimal drawing of this kind
exists whenever the local crossing number is at most 3, so the restriction
loses nothing there.  For k >= 4 repeated and adjacent crossings are
allowed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import networkx as nx
from networkx.algorithms.planarity import get_counterexample

from .mgraph import EdgeCopy, Multigraph, total_edge_copies
from .drawing import is_planar


@dataclass(frozen=True)
class OracleBudget:
    max_edge_copies: int = 48
    max_crossings: int = 6
    timeout: float | None = 60.0


class BudgetExhausted(RuntimeError):
    """The answer is not certified within the given budget."""


DEFAULT_BUDGET = OracleBudget()

_AUT_ENUM_CAP = 20000
_DIVE_RESTARTS = 40
_DIVE_NODES = 120


def decide_kplanar(g: Multigraph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Does g admit a drawing with at most k crossings per edge copy?

    Raises BudgetExhausted when neither answer is certified within budget.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_input(g, budget)
    if is_planar(g):
        return True
    if k == 0:
        return False
    if k == 1 and all(w >= 2 for _, _, w in g.edges):
        # at k = 1 the crossings form a matching on copies; with every
        # multiplicity >= 2 a Hall argument yields a one-copy-per-edge
        # selection dodging the whole matching, and those copies alone
        # would embed the non-planar simplification without crossings
        return False
    deadline = None if budget.timeout is None else time.monotonic() + budget.timeout
    good = k <= 3
    # cheap witness hunting first: depth-first dives with rank-preserving
    # random tie-breaking and a small node allowance; a found drawing is a
    # certificate, an exhausted dive proves nothing
    for seed in range(_DIVE_RESTARTS):
        dive = _Search(g, per_copy_cap=k, good=good, max_crossings=budget.max_crossings,
                       deadline=deadline, rng=random.Random(seed), node_budget=_DIVE_NODES)
        if dive.run():
            return True
    search = _Search(g, per_copy_cap=k, good=good, max_crossings=budget.max_crossings,
                     deadline=deadline)
    if search.run():
        return True
    if search.cutoff:
        raise BudgetExhausted(f"no drawing found for k={k} within {budget.max_crossings} crossings")
    return False


def lcr_exact(g: Multigraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest k for which decide_kplanar(g, k) holds."""
    _check_input(g, budget)
    k = 0
    while True:
        if decide_kplanar(g, k, budget):
            return k
        k += 1


def cr_exact(g: Multigraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum total number of crossings over all drawings of g.

    Iterative deepening on the crossing count, restricted to good
    configurations (crossing-minimal drawings are always good).
    """
    _check_input(g, budget)
    if is_planar(g):
        return 0
    deadline = None if budget.timeout is None else time.monotonic() + budget.timeout
    for c in range(1, budget.max_crossings + 1):
        search = _Search(g, per_copy_cap=None, good=True, max_crossings=c,
                         deadline=deadline)
        if search.run():
            return c
    raise BudgetExhausted(f"crossing number exceeds max_crossings = {budget.max_crossings}")


def _check_input(g: Multigraph, budget: OracleBudget) -> None:
    copies = total_edge_copies(g)
    if copies > budget.max_edge_copies:
        raise BudgetExhausted(
            f"input has {copies} edge copies, budget allows {budget.max_edge_copies}")


# --- obstruction-guided search -------------------------------------------

class _Search:
    def __init__(self, g: Multigraph, per_copy_cap: int | None, good: bool,
                 max_crossings: int, deadline: float | None,
                 rng: random.Random | None = None, node_budget: int | None = None):
        self.g = g
        self.copies = g.edge_copies()
        self.cap = per_copy_cap
        self.good = good
        self.max_crossings = max_crossings
        self.deadline = deadline
        self.rng = rng
        self.node_budget = node_budget
        self.nodes = 0
        self.cutoff = False
        self.visited: set = set()

    def run(self) -> bool:
        seqs: dict[EdgeCopy, list[int]] = {c: [] for c in self.copies}
        return self._dfs([], seqs, at_root=True)

    def _dfs(self, crossings: list[tuple[EdgeCopy, EdgeCopy]],
             seqs: dict[EdgeCopy, list[int]], at_root: bool = False) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted("oracle timeout")
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            self.cutoff = True
            return False
        graph, backings = self._planarise(crossings, seqs)
        if nx.check_planarity(graph)[0]:
            return True
        if len(crossings) >= self.max_crossings:
            self.cutoff = True
            return False
        candidates = self._order(self._candidates(crossings, seqs, graph, backings), at_root)
        for (copy_a, gap_a), (copy_b, gap_b) in candidates:
            cid = len(crossings)
            crossings.append((copy_a, copy_b))
            seqs[copy_a].insert(gap_a, cid)
            seqs[copy_b].insert(gap_b, cid)
            sig = self._signature(crossings, seqs)
            if sig not in self.visited:
                self.visited.add(sig)
                if self._dfs(crossings, seqs):
                    return True
            seqs[copy_a].remove(cid)
            seqs[copy_b].remove(cid)
            crossings.pop()
        return False

    def _planarise(self, crossings, seqs):
        """nx graph of the planarisation plus backing segments per simple edge."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.g.n + len(crossings)))
        backings: dict[tuple[int, int], list[tuple[EdgeCopy, int]]] = {}
        for copy in self.copies:
            chain = [copy.u] + [self.g.n + cid for cid in seqs[copy]] + [copy.v]
            for gap, (x, y) in enumerate(zip(chain, chain[1:])):
                edge = (x, y) if x < y else (y, x)
                graph.add_edge(*edge)
                backings.setdefault(edge, []).append((copy, gap))
        return graph, backings

    def _candidates(self, crossings, seqs, graph, backings):
        obstruction = get_counterexample(graph)
        path_of, ends_of = _path_ids(obstruction)
        crossing_pairs = {frozenset(pair) for pair in crossings}
        out: dict = {}
        k_edges = [(x, y) if x < y else (y, x) for x, y in obstruction.edges()]
        for i, e1 in enumerate(k_edges):
            for e2 in k_edges[i + 1:]:
                p1, p2 = path_of[e1], path_of[e2]
                if p1 == p2:
                    continue
                crossable = not (ends_of[p1] & ends_of[p2])
                for side_a in backings[e1]:
                    for side_b in backings[e2]:
                        a, b = side_a[0], side_b[0]
                        if a == b:
                            continue
                        if self.cap is not None and (len(seqs[a]) >= self.cap or len(seqs[b]) >= self.cap):
                            continue
                        if self.good:
                            if {a.u, a.v} & {b.u, b.v}:
                                continue
                            if frozenset((a, b)) in crossing_pairs:
                                continue
                        cand = (side_a, side_b) if side_a <= side_b else (side_b, side_a)
                        out[cand] = out.get(cand, False) or crossable
        # crossings between paths sharing a branch vertex rarely help, and
        # extensions of the existing crossing pattern usually do; rank the
        # complete candidate list accordingly (pruning nothing)
        def rank(cand, crossable):
            (copy_a, _), (copy_b, _) = cand
            closeness = max(
                (_ends_shared(copy_a, x) + _ends_shared(copy_b, y)
                 for a, b in crossings for x, y in ((a, b), (b, a))),
                default=0,
            )
            return (not crossable, -closeness)

        return sorted((rank(cand, crossable), cand) for cand, crossable in out.items())

    def _order(self, ranked, at_root):
        """Flatten ranked candidates, shuffling only within equal ranks."""
        if at_root:
            keep = set(_orbit_representatives(self.g, [cand for _, cand in ranked]))
            ranked = [(r, cand) for r, cand in ranked if cand in keep]
        if self.rng is None:
            return [cand for _, cand in ranked]
        out = []
        i = 0
        while i < len(ranked):
            j = i
            while j < len(ranked) and ranked[j][0] == ranked[i][0]:
                j += 1
            block = [cand for _, cand in ranked[i:j]]
            self.rng.shuffle(block)
            out.extend(block)
            i = j
        return out

    def _signature(self, crossings, seqs):
        rename: dict[int, int] = {}
        rows = []
        for copy in self.copies:
            seq = seqs[copy]
            if not seq:
                continue
            for cid in seq:
                if cid not in rename:
                    rename[cid] = len(rename)
            rows.append((copy, tuple(rename[c] for c in seq)))
        pairs = [None] * len(crossings)
        for cid, (a, b) in enumerate(crossings):
            pairs[rename[cid]] = (a, b) if a <= b else (b, a)
        return tuple(rows), tuple(pairs)


def _ends_shared(x: EdgeCopy, y: EdgeCopy) -> int:
    return len({x.u, x.v} & {y.u, y.v})


def _path_ids(obstruction: nx.Graph):
    """Map each obstruction edge to its branch-to-branch path id.

    Also returns the branch endpoints of each path (empty for leftover
    pure-cycle components), used to tell independent paths apart.
    """
    degree = dict(obstruction.degree())
    branch = {v for v, d in degree.items() if d != 2}
    path_of: dict[tuple[int, int], int] = {}
    ends_of: dict[int, frozenset] = {}
    next_id = 0

    def norm(x, y):
        return (x, y) if x < y else (y, x)

    for b in sorted(branch):
        for nb in sorted(obstruction.neighbors(b)):
            if norm(b, nb) in path_of:
                continue
            pid = next_id
            next_id += 1
            prev, cur = b, nb
            path_of[norm(prev, cur)] = pid
            while cur not in branch:
                nxt = next(w for w in obstruction.neighbors(cur) if w != prev)
                if norm(cur, nxt) in path_of:
                    break
                path_of[norm(cur, nxt)] = pid
                prev, cur = cur, nxt
            ends_of[pid] = frozenset((b, cur)) if cur in branch else frozenset((b,))
    # leftover components are pure cycles; give each its own id
    for x, y in obstruction.edges():
        e = norm(x, y)
        if e in path_of:
            continue
        pid = next_id
        next_id += 1
        ends_of[pid] = frozenset()
        start, prev, cur = x, x, y
        path_of[e] = pid
        while cur != start:
            nxt = next(w for w in obstruction.neighbors(cur) if w != prev)
            path_of[norm(cur, nxt)] = pid
            prev, cur = cur, nxt
    return path_of, ends_of


# --- root symmetry reduction ----------------------------------------------

def _orbit_representatives(g: Multigraph, candidates):
    """Collapse root candidates equivalent under graph automorphisms.

    The empty configuration is fixed by every automorphism, so branching on
    one representative per orbit preserves completeness.  Works with any
    enumerated subset of the automorphism group (union-find closes over the
    generated subgroup).
    """
    if len(candidates) < 2 or g.n > 12:
        return candidates
    auts = _automorphisms(g)
    if len(auts) <= 1:
        return candidates
    keys = {}
    for cand in candidates:
        (copy_a, _), (copy_b, _) = cand
        keys[cand] = frozenset(((copy_a.u, copy_a.v), (copy_b.u, copy_b.v)))
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    by_key: dict = {}
    for cand in candidates:
        by_key.setdefault(keys[cand], []).append(cand)
    for sigma in auts:
        for key in list(by_key):
            mapped = frozenset(tuple(sorted((sigma[u], sigma[v]))) for u, v in key)
            if mapped in by_key:
                union(key, mapped)
    chosen = {}
    for cand in sorted(candidates):
        root = find(keys[cand])
        chosen.setdefault(root, cand)
    return sorted(chosen.values())


def _automorphisms(g: Multigraph) -> list[dict[int, int]]:
    """Vertex automorphisms preserving adjacency and multiplicities (capped)."""
    weight = {}
    neighbours: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v, w in g.edges:
        weight[(u, v)] = w
        neighbours[u].add(v)
        neighbours[v].add(u)

    def w_of(x, y):
        return weight.get((x, y) if x < y else (y, x), 0)

    signature = {
        v: (len(neighbours[v]), tuple(sorted(w_of(v, u) for u in neighbours[v])))
        for v in range(g.n)
    }
    order = sorted(range(g.n), key=lambda v: (signature[v], v))
    result: list[dict[int, int]] = []

    def assign(i: int, mapping: dict[int, int], used: set[int]) -> None:
        if len(result) >= _AUT_ENUM_CAP:
            return
        if i == len(order):
            result.append(dict(mapping))
            return
        v = order[i]
        for t in range(g.n):
            if t in used or signature[t] != signature[v]:
                continue
            if any(u in mapping and w_of(v, u) != w_of(t, mapping[u]) for u in range(g.n)):
                continue
            mapping[v] = t
            used.add(t)
            assign(i + 1, mapping, used)
            del mapping[v]
            used.discard(t)

    assign(0, {}, set())
    return result
