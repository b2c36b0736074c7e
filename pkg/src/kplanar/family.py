"""Graph family separating total crossings from the per-edge maximum.

For a parameter k >= 2 the family member has two port vertices joined to
each of three terminals by k^3 internally disjoint paths of length k, every
terminal pair joined by k^4 paths of length 2, and one direct edge between
the ports.  Two hand-built drawings show the two ends of the tradeoff:
drawing_d1 spends k^4 crossings all on the direct edge, drawing_d2 spends
k^6 crossings but never more than k^2 on one edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import CrossingReport, Drawing
from .mgraph import EdgeCopy, Multigraph, new_multigraph

Edge = tuple[int, int]

PORT_A = 0
PORT_B = 1
TERMINALS = (2, 3, 4)
TERMINAL_PAIRS = ((2, 3), (3, 4), (2, 4))


@dataclass(frozen=True)
class FamilyGraph:
    """Family member plus its path structure.

    a_paths[t] / b_paths[t] hold, per terminal t, k^3 paths from the port,
    each a list of k edges in travel order away from the port.  pair_paths
    maps a terminal pair to its k^4 two-edge paths, in travel order from the
    smaller terminal.  direct is the single port-to-port edge.
    """

    graph: Multigraph
    k: int
    roles: dict
    a_paths: dict
    b_paths: dict
    pair_paths: dict
    direct: Edge


def build_family(k: int) -> FamilyGraph:
    if k < 2:
        raise ValueError("family is defined for k >= 2")
    roles = {PORT_A: "u", PORT_B: "v"}
    for idx, t in enumerate(TERMINALS):
        roles[t] = f"w{idx + 1}"
    nxt = 5
    edges: list[tuple[int, int, int]] = []

    def port_bundle(port: int, tag: str) -> dict:
        nonlocal nxt
        paths: dict = {}
        for t_idx, term in enumerate(TERMINALS):
            bundle = []
            for i in range(k ** 3):
                chain = [port]
                for j in range(k - 1):
                    roles[nxt] = f"p{tag}{t_idx + 1}_{i + 1}_{j + 1}"
                    chain.append(nxt)
                    nxt += 1
                chain.append(term)
                path = [_norm(chain[s], chain[s + 1]) for s in range(k)]
                for e in path:
                    edges.append((*e, 1))
                bundle.append(tuple(path))
            paths[term] = tuple(bundle)
        return paths

    a_paths = port_bundle(PORT_A, "u")
    b_paths = port_bundle(PORT_B, "v")

    pair_paths: dict = {}
    for x, y in TERMINAL_PAIRS:
        bundle = []
        for i in range(k ** 4):
            roles[nxt] = f"x{x - 1}{y - 1}_{i + 1}"
            path = (_norm(x, nxt), _norm(nxt, y))
            nxt += 1
            for e in path:
                edges.append((*e, 1))
            bundle.append(path)
        pair_paths[(x, y)] = tuple(bundle)

    direct = (PORT_A, PORT_B)
    edges.append((*direct, 1))
    return FamilyGraph(new_multigraph(nxt, edges), k, roles,
                       a_paths, b_paths, pair_paths, direct)


def drawing_d1(fg: FamilyGraph) -> Drawing:
    """Route the direct edge across one side of every terminal 2-3 path.

    All k^4 crossings land on the single direct edge, none anywhere else,
    so the total and the per-edge maximum are both k^4.
    """
    k = fg.k
    direct_copy = EdgeCopy(*fg.direct, 1)
    crossings = []
    order = []
    seqs: dict[EdgeCopy, tuple[int, ...]] = {}
    for i in range(k ** 4):
        first_leg = fg.pair_paths[(2, 4)][i][0]
        cid = len(crossings)
        crossings.append((direct_copy, EdgeCopy(*first_leg, 1)))
        order.append(cid)
        seqs[EdgeCopy(*first_leg, 1)] = (cid,)
    seqs[direct_copy] = tuple(order)
    return Drawing(fg.graph, tuple(crossings), seqs)


def drawing_d2(fg: FamilyGraph) -> Drawing:
    """Cross one port bundle through the other port's neighbouring bundle.

    Path i of the first bundle crosses path j of the second on its segment
    number ceil(j/k^2), and vice versa with i and j swapped, counted in
    travel order.  Each of the k^6 crossings is charged to two segments
    that each carry only k^2 of them.
    """
    k = fg.k
    n_paths = k ** 3
    per_seg = k ** 2
    a_bundle = fg.a_paths[3]
    b_bundle = fg.b_paths[2]
    crossings: list[tuple[EdgeCopy, EdgeCopy]] = []
    cid = [[0] * n_paths for _ in range(n_paths)]
    for i in range(n_paths):
        for j in range(n_paths):
            seg_a = a_bundle[i][j // per_seg]
            seg_b = b_bundle[j][i // per_seg]
            cid[i][j] = len(crossings)
            crossings.append((EdgeCopy(*seg_a, 1), EdgeCopy(*seg_b, 1)))
    seqs: dict[EdgeCopy, tuple[int, ...]] = {}
    for i in range(n_paths):
        for s in range(k):
            ids = [cid[i][j] for j in range(s * per_seg, (s + 1) * per_seg)]
            _store(seqs, a_bundle[i][s], _seg_start(a_bundle[i], s, PORT_A), ids)
    for j in range(n_paths):
        for s in range(k):
            ids = [cid[i][j] for i in range(s * per_seg, (s + 1) * per_seg)]
            _store(seqs, b_bundle[j][s], _seg_start(b_bundle[j], s, PORT_B), ids)
    return Drawing(fg.graph, tuple(crossings), seqs)


def tradeoff_product(report: CrossingReport) -> int:
    """Product cr * lcr of a verified drawing, the quantity both extremal
    drawings of a family member tie at k^8."""
    if not report.valid:
        raise ValueError("tradeoff product is only meaningful for a valid drawing")
    return report.cr * report.lcr


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _store(seqs: dict, edge: Edge, travel_start: int, ids: list) -> None:
    """Record a crossing order given in travel direction on a stored edge."""
    seqs[EdgeCopy(*edge, 1)] = tuple(ids) if edge[0] == travel_start else tuple(ids[::-1])


def _seg_start(path: tuple, s: int, origin: int) -> int:
    """Vertex where travel enters segment s of a path leaving origin."""
    if s == 0:
        return origin
    common = set(path[s - 1]) & set(path[s])
    return common.pop()
