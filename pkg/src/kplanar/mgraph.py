"""Multigraphs with explicit edge multiplicities.

Vertices are dense integers 0..n-1.  An edge is an unordered pair (u, v)
with u < v and a multiplicity >= 1; the individual copies of an edge are
addressed by EdgeCopy values with 1-based copy indices.  Self-loops are
rejected everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class EdgeCopy:
    """One copy of a multi-edge: endpoints u < v, copy index in [1, multiplicity]."""

    u: int
    v: int
    copy: int

    def key(self) -> str:
        return f"{self.u}-{self.v}#{self.copy}"

    @staticmethod
    def from_key(key: str) -> "EdgeCopy":
        try:
            pair, idx = key.rsplit("#", 1)
            a, b = pair.split("-", 1)
            return EdgeCopy(int(a), int(b), int(idx))
        except ValueError:
            raise ValueError(f"malformed edge copy key: {key!r}") from None


@dataclass(frozen=True)
class Multigraph:
    """Immutable multigraph: vertex count plus sorted (u, v, multiplicity) triples."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        return 0

    def edge_copies(self) -> list[EdgeCopy]:
        """All edge copies in sorted edge order, copy indices ascending."""
        return [EdgeCopy(u, v, i) for u, v, w in self.edges for i in range(1, w + 1)]

    def to_json_dict(self) -> dict:
        return {"vertices": self.n, "edges": [[u, v, w] for u, v, w in self.edges]}

    @staticmethod
    def from_json_dict(data: dict) -> "Multigraph":
        if not isinstance(data, dict) or set(data) != {"vertices", "edges"}:
            raise ValueError("multigraph object must have exactly 'vertices' and 'edges'")
        n = data["vertices"]
        if not isinstance(n, int) or n < 0:
            raise ValueError("'vertices' must be a non-negative integer")
        triples = []
        for item in data["edges"]:
            if not (isinstance(item, list) and len(item) == 3 and all(isinstance(x, int) for x in item)):
                raise ValueError(f"edge entry must be [u, v, multiplicity]: {item!r}")
            triples.append((item[0], item[1], item[2]))
        return new_multigraph(n, triples)


def new_multigraph(vertex_count: int, weighted_edges: list[tuple[int, int, int]]) -> Multigraph:
    """Build a validated multigraph.

    Rejects self-loops, endpoints out of range, duplicate edge pairs and
    non-positive multiplicities.  Edges are normalised to u < v and sorted.
    """
    if vertex_count < 0:
        raise ValueError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    normalised = []
    for u, v, w in weighted_edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        if w < 1:
            raise ValueError(f"multiplicity of ({u}, {v}) must be >= 1, got {w}")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge pair ({u}, {v})")
        seen.add((u, v))
        normalised.append((u, v, w))
    return Multigraph(vertex_count, tuple(sorted(normalised)))


def total_edge_copies(g: Multigraph) -> int:
    """Sum of multiplicities over all distinct edges."""
    return sum(w for _, _, w in g.edges)


def simplify(g: Multigraph) -> Multigraph:
    """The same graph with every multiplicity forced to 1."""
    return Multigraph(g.n, tuple((u, v, 1) for u, v, _ in g.edges))


@dataclass(frozen=True)
class SubdivisionMap:
    """Correspondence produced by subdivide().

    forward maps each original edge copy to (midpoint, first_half, second_half)
    where the halves are edges of the subdivided graph; backward maps each
    subdivided edge back to the copy it came from.
    """

    forward: dict
    backward: dict


def subdivide(g: Multigraph) -> tuple[Multigraph, SubdivisionMap]:
    """Split every edge copy in two with a fresh midpoint vertex.

    The result is simple: each copy (u, v)#i becomes u - x - v for its own
    midpoint x.  Midpoints are numbered from g.n upward in sorted edge order,
    copy indices ascending, so the output is deterministic.
    """
    next_vertex = g.n
    new_edges: list[tuple[int, int, int]] = []
    forward = {}
    backward = {}
    for u, v, w in g.edges:
        for i in range(1, w + 1):
            mid = next_vertex
            next_vertex += 1
            first = (min(u, mid), max(u, mid))
            second = (min(mid, v), max(mid, v))
            copy = EdgeCopy(u, v, i)
            forward[copy] = (mid, first, second)
            backward[first] = copy
            backward[second] = copy
            new_edges.append((*first, 1))
            new_edges.append((*second, 1))
    sub = new_multigraph(next_vertex, new_edges)
    return sub, SubdivisionMap(forward, backward)


def collapse(sub: Multigraph, smap: SubdivisionMap) -> Multigraph:
    """Inverse of subdivide(): merge each midpoint back into a single copy."""
    counts: dict[tuple[int, int], int] = {}
    n = sub.n - len(smap.forward)
    for copy, (mid, first, second) in smap.forward.items():
        if sub.multiplicity(*first) != 1 or sub.multiplicity(*second) != 1:
            raise ValueError(f"subdivision map does not match graph at midpoint {mid}")
        counts[(copy.u, copy.v)] = counts.get((copy.u, copy.v), 0) + 1
    return new_multigraph(n, [(u, v, w) for (u, v), w in sorted(counts.items())])
