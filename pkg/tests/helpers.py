"""Shared test utilities: standard graphs, the oracle corpus, fixtures,
and a generator of drawings read off random straight-line embeddings."""

import json
import random
from fractions import Fraction
from pathlib import Path

import networkx as nx

from kplanar.drawing import Drawing
from kplanar.mgraph import EdgeCopy, new_multigraph

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def load_fixture(name: str) -> dict:
    return json.loads(fixture_text(name))


def complete_graph(n: int, weight: int = 1):
    return new_multigraph(n, [(u, v, weight) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(p: int, q: int, weight: int = 1):
    return new_multigraph(p + q, [(u, p + v, weight) for u in range(p) for v in range(q)])


def oracle_corpus():
    """(name, graph, lcr) for the fixed corpus the oracle tests pin down."""
    return [
        ("triangle w2", complete_graph(3, weight=2), 0),
        ("K5", complete_graph(5), 1),
        ("K33", complete_bipartite(3, 3), 1),
        ("K33 w2", complete_bipartite(3, 3, weight=2), 2),
        ("K5 w2", complete_graph(5, weight=2), 2),
    ]


def random_geometric_drawing(n_vertices: int, edge_prob: float, seed: int) -> Drawing:
    """Drawing read off a random straight-line embedding of a random graph.

    Vertices get random positions; every proper segment intersection
    between non-adjacent edges is recorded as a crossing, ordered along
    each edge by the intersection parameter measured from the smaller
    endpoint.  Such a drawing exists geometrically, so verify() must find
    it valid; that makes this an independent generator of valid drawings
    with known crossing totals.  Intersections are computed in exact
    rational arithmetic; adjacent edges are skipped because straight
    segments sharing an endpoint cannot properly cross at all.
    """
    rng = random.Random(seed)
    pts = [(Fraction(rng.random()), Fraction(rng.random())) for _ in range(n_vertices)]
    edges = [
        (u, v, 1)
        for u in range(n_vertices)
        for v in range(u + 1, n_vertices)
        if rng.random() < edge_prob
    ]
    g = new_multigraph(n_vertices, edges)
    copies = g.edge_copies()
    crossings = []
    hits = {c: [] for c in copies}
    for i, a in enumerate(copies):
        for b in copies[i + 1:]:
            if {a.u, a.v} & {b.u, b.v}:
                continue
            t = _proper_intersection(pts[a.u], pts[a.v], pts[b.u], pts[b.v])
            if t is not None:
                cid = len(crossings)
                crossings.append((a, b))
                hits[a].append((t[0], cid))
                hits[b].append((t[1], cid))
    seqs = {}
    for c, found in hits.items():
        if found:
            found.sort()
            seqs[c] = tuple(cid for _, cid in found)
    return Drawing(g, tuple(crossings), seqs)


def random_touch_drawing(seed: int, min_crossings: int = 2) -> Drawing:
    """Valid drawing whose crossings all survive removal in any order.

    Builds a random connected planar host, embeds it, and declares at most
    one crossing per face, between two edges on that face's boundary.  Each
    such crossing is realizable as a touching point: the two edges bulge
    into the face and meet there, so the planarization is a plane figure,
    and retracting any subset of the bulges is again a plane figure.  These
    drawings are therefore hereditarily valid, unlike drawings whose
    crossings are essential.
    """
    for attempt in range(200):
        rng = random.Random(seed * 1009 + attempt)
        d = _touch_drawing(rng)
        if len(d.crossings) >= min_crossings:
            return d
    raise RuntimeError(f"no touch drawing with {min_crossings} crossings for seed {seed}")


def _touch_drawing(rng: random.Random) -> Drawing:
    n = rng.randrange(8, 14)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for v in range(1, n):
        G.add_edge(v, rng.randrange(v))
    for _ in range(3 * n):
        u, v = rng.sample(range(n), 2)
        if not G.has_edge(u, v):
            G.add_edge(u, v)
            if not nx.check_planarity(G)[0]:
                G.remove_edge(u, v)
    g = new_multigraph(n, [(u, v, 1) for u, v in G.edges])

    crossings = []
    hits = {}
    for face in _faces(nx.check_planarity(G)[1]):
        if len(face) < 2 or rng.random() < 0.3:
            continue
        e, f = rng.sample(sorted(face), 2)
        a, b = EdgeCopy(*e, 1), EdgeCopy(*f, 1)
        cid = len(crossings)
        crossings.append((a, b))
        hits.setdefault(a, []).append((rng.random(), cid))
        hits.setdefault(b, []).append((rng.random(), cid))
    seqs = {c: tuple(cid for _, cid in sorted(found)) for c, found in hits.items()}
    return Drawing(g, tuple(crossings), seqs)


def _faces(embedding):
    """Distinct edge sets of the embedding's faces."""
    seen = set()
    faces = []
    for u, v in embedding.edges:
        if (u, v) in seen:
            continue
        walk = embedding.traverse_face(u, v, mark_half_edges=seen)
        boundary = {
            (min(x, y), max(x, y))
            for x, y in zip(walk, walk[1:] + walk[:1])
        }
        faces.append(boundary)
    return faces


def _proper_intersection(p1, p2, q1, q2):
    """Parameters (t, u) where open segments p1p2 and q1q2 cross, else None."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    denom = rx * sy - ry * sx
    if denom == 0:
        return None
    wx, wy = q1[0] - p1[0], q1[1] - p1[1]
    t = (wx * sy - wy * sx) / denom
    u = (wx * ry - wy * rx) / denom
    if 0 < t < 1 and 0 < u < 1:
        return (t, u)
    return None
