"""Combinatorial drawings of multigraphs and their verification.

A drawing records, for every edge copy, the ordered sequence of crossings
along it, plus a registry pairing each crossing's two participants.  No
coordinates are stored.  Validity is decided by planarising (each crossing
becomes a degree-4 dummy vertex) and testing planarity: a planar
planarisation certifies that some actual drawing exists whose crossings are
a subset of those declared, so the reported cr and lcr are upper bounds
witnessed by the drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import networkx as nx

from .mgraph import EdgeCopy, Multigraph, new_multigraph, simplify


class DrawingFormatError(ValueError):
    """A drawing whose registry and sequences are mutually inconsistent."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True, eq=False)
class Drawing:
    """Host multigraph + crossing registry + per-copy crossing sequences.

    crossings[i] is the pair of edge copies that meet at crossing id i.
    sequences maps an edge copy to the crossing ids along it, ordered from
    the copy's smaller endpoint to its larger one.  Copies without
    crossings may be omitted from sequences.
    """

    host: Multigraph
    crossings: tuple[tuple[EdgeCopy, EdgeCopy], ...]
    sequences: dict

    def sequence(self, copy: EdgeCopy) -> tuple[int, ...]:
        return tuple(self.sequences.get(copy, ()))

    def problems(self) -> list[str]:
        """All structural violations; empty list means well-formed."""
        problems = []
        valid_copies = set(self.host.edge_copies())
        for i, (a, b) in enumerate(self.crossings):
            if a == b:
                problems.append(f"crossing {i} pairs edge copy {a.key()} with itself")
            for side in (a, b):
                if side not in valid_copies:
                    problems.append(f"crossing {i} references unknown edge copy {side.key()}")
        for copy, seq in self.sequences.items():
            if copy not in valid_copies:
                problems.append(f"sequence for unknown edge copy {copy.key()}")
                continue
            if len(set(seq)) != len(seq):
                problems.append(f"duplicate crossing id in sequence of {copy.key()}")
            for cid in seq:
                if not (0 <= cid < len(self.crossings)):
                    problems.append(f"sequence of {copy.key()} references unknown crossing {cid}")
                elif copy not in self.crossings[cid]:
                    problems.append(f"crossing {cid} appears on {copy.key()} but is not registered there")
        if problems:
            return problems
        for i, (a, b) in enumerate(self.crossings):
            for side in (a, b):
                if i not in self.sequences.get(side, ()):
                    problems.append(f"crossing {i} missing from sequence of {side.key()}")
        return problems

    def to_json_dict(self) -> dict:
        seqs = {
            copy.key(): list(seq)
            for copy, seq in self.sequences.items()
            if seq
        }
        return {
            "crossings": [[a.key(), b.key()] for a, b in self.crossings],
            "host": self.host.to_json_dict(),
            "sequences": dict(sorted(seqs.items())),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Drawing":
        if not isinstance(data, dict) or set(data) != {"host", "crossings", "sequences"}:
            raise ValueError("drawing object must have exactly 'host', 'crossings' and 'sequences'")
        host = Multigraph.from_json_dict(data["host"])
        crossings = []
        for item in data["crossings"]:
            if not (isinstance(item, list) and len(item) == 2):
                raise ValueError(f"crossing entry must be a pair of edge copy keys: {item!r}")
            crossings.append((EdgeCopy.from_key(item[0]), EdgeCopy.from_key(item[1])))
        sequences = {}
        for key, seq in data["sequences"].items():
            if not (isinstance(seq, list) and all(isinstance(x, int) for x in seq)):
                raise ValueError(f"sequence for {key} must be a list of crossing ids")
            sequences[EdgeCopy.from_key(key)] = tuple(seq)
        return Drawing(host, tuple(crossings), sequences)


@dataclass(frozen=True)
class CrossingReport:
    valid: bool
    cr: int
    lcr: int
    per_copy: dict


def planarize(d: Drawing) -> Multigraph:
    """Replace each crossing with a degree-4 dummy vertex.

    Host vertices keep their ids; crossing i becomes vertex host.n + i.
    Each edge copy turns into the path through its crossing dummies in
    sequence order, so the output has total host copies + 2 * crossings
    edge copies.
    """
    base = d.host.n
    counts: dict[tuple[int, int], int] = {}

    def add(x: int, y: int) -> None:
        if x > y:
            x, y = y, x
        counts[(x, y)] = counts.get((x, y), 0) + 1

    for copy in d.host.edge_copies():
        chain = [copy.u] + [base + cid for cid in d.sequence(copy)] + [copy.v]
        for x, y in zip(chain, chain[1:]):
            add(x, y)
    return new_multigraph(base + len(d.crossings), [(u, v, w) for (u, v), w in sorted(counts.items())])


def is_planar(g: Multigraph) -> bool:
    """Planarity of the underlying simple graph (copies nest freely)."""
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((u, v) for u, v, _ in g.edges)
    return nx.check_planarity(G)[0]


def verify(d: Drawing) -> CrossingReport:
    """Validate structure, then planarise and report validity, cr and lcr."""
    problems = d.problems()
    if problems:
        raise DrawingFormatError(problems)
    per_copy = {copy: len(seq) for copy, seq in d.sequences.items() if seq}
    cr = len(d.crossings)
    lcr = max(per_copy.values(), default=0)
    return CrossingReport(is_planar(planarize(d)), cr, lcr, per_copy)


def is_kplanar_drawing(d: Drawing, k: int) -> bool:
    """True when the drawing is valid and no edge copy carries more than k crossings."""
    report = verify(d)
    if not report.valid:
        raise ValueError("drawing is not valid, k-planarity of it is meaningless")
    return report.lcr <= k


def remove_crossing(d: Drawing, cid: int) -> Drawing:
    """Drop one crossing from the registry and both sequences, reindexing ids.

    Purely structural: the result always has one crossing fewer and no copy
    gains crossings, but it stays valid only when the removed crossing was
    inessential (a touching point).  Retracting an essential crossing, like
    the single crossing of an optimal K5 drawing, leaves an unrealizable
    drawing and verify() reports it invalid.
    """
    if not (0 <= cid < len(d.crossings)):
        raise ValueError(f"no crossing with id {cid}")
    remap = {old: (old if old < cid else old - 1) for old in range(len(d.crossings)) if old != cid}
    crossings = tuple(pair for i, pair in enumerate(d.crossings) if i != cid)
    sequences = {}
    for copy, seq in d.sequences.items():
        new_seq = tuple(remap[x] for x in seq if x != cid)
        if new_seq:
            sequences[copy] = new_seq
    return Drawing(d.host, crossings, sequences)


def empty_drawing(g: Multigraph) -> Drawing:
    return Drawing(g, (), {})


# --- independent planarity check by rotation system enumeration ---------

def is_planar_bruteforce(g: Multigraph, rotation_cap: int = 10_000_000) -> bool:
    """Planarity by exhausting rotation systems, per connected component.

    A connected graph is planar iff some cyclic ordering of the darts
    around each vertex traces V - E + F = 2 faces.  Exponential in vertex
    degrees; guarded by rotation_cap.  Exists as an independent
    cross-check for is_planar on small graphs.
    """
    s = simplify(g)
    adj: dict[int, list[int]] = {v: [] for v in range(s.n)}
    for u, v, _ in s.edges:
        adj[u].append(v)
        adj[v].append(u)

    seen: set[int] = set()
    for start in range(s.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        if not _component_planar_by_rotations(comp, adj, rotation_cap):
            return False
    return True


def _component_planar_by_rotations(comp: list[int], adj: dict[int, list[int]], cap: int) -> bool:
    nv = len(comp)
    ne = sum(len(adj[v]) for v in comp) // 2
    if ne == 0:
        return True
    total = 1
    for v in comp:
        d = len(adj[v])
        for f in range(1, d):
            total *= f
        if total > cap:
            raise ValueError(f"rotation system count exceeds cap {cap}")

    movable = [v for v in comp if len(adj[v]) > 2]
    fixed_rotation = {v: tuple(adj[v]) for v in comp if len(adj[v]) <= 2}

    def count_faces(rotation: dict[int, tuple[int, ...]]) -> int:
        succ = {}
        for v, order in rotation.items():
            for i, w in enumerate(order):
                # next dart leaving v after arriving from w
                succ[(w, v)] = (v, order[(i + 1) % len(order)])
        darts = set(succ)
        faces = 0
        while darts:
            d0 = darts.pop()
            faces += 1
            d = succ[d0]
            while d != d0:
                darts.discard(d)
                d = succ[d]
        return faces

    def search(i: int, rotation: dict[int, tuple[int, ...]]) -> bool:
        if i == len(movable):
            return count_faces(rotation) == 2 - nv + ne
        v = movable[i]
        first, rest = adj[v][0], adj[v][1:]
        for perm in permutations(rest):
            rotation[v] = (first, *perm)
            if search(i + 1, rotation):
                return True
        del rotation[v]
        return False

    return search(0, dict(fixed_rotation))
