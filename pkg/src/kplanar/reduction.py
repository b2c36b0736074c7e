"""Compile 3-partition instances into crossing-number gadget multigraphs.

The gadget has two hub vertices joined by m heavy spoke paths, two rings of
doubled-bundle edges (one with 3m stations, one with B*m stations), and one
star per input value hanging between the hubs.  Multiplicities are chosen so
that, for a target k, any drawing with at most k crossings per edge copy is
forced to thread each star through ring bundles of its own region, which is
possible exactly when the instance partitions.  witness_drawing builds the
explicit drawing certifying the solvable direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import Drawing
from .mgraph import EdgeCopy, Multigraph, new_multigraph
from .tpart import Partition, ThreePartitionInstance, validate

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ReductionGraph:
    """Compiled gadget plus the named edge groups the construction is made of.

    tri_ring[i] joins ring stations i+1 and i+2 (wrapping); val_ring likewise.
    spokes[i] is the 3-edge heavy path of region i+1, hub to hub.
    star_heads[j] is the 2-edge path hub -> head -> center of star j+1;
    leaf_pairs[j][i] is the 2-edge path center -> leaf -> other hub.
    """

    graph: Multigraph
    instance: ThreePartitionInstance
    k: int
    roles: dict
    spokes: tuple
    tri_ring: tuple
    val_ring: tuple
    star_heads: tuple
    leaf_pairs: tuple


def compile_reduction(inst: ThreePartitionInstance, k: int) -> ReductionGraph:
    """Build the gadget for instance inst at hardness parameter k .

    Vertex ids are assigned deterministically: the two hubs, the 3m-station
    ring, the B*m-station ring, the 3m star centers, then the leaf vertices
    star by star.  The instance only needs to pass relaxed validation.
    """
    check = validate(inst)
    if not check.ok:
        raise ValueError("instance fails validation: " + "; ".join(check.errors))
    if k < 1:
        raise ValueError("k must be >= 1")
    a, B, m = inst.a, inst.B, inst.m

    tri_hub = 0
    val_hub = 1
    tri_station = [2 + i for i in range(3 * m)]                  # stations 1..3m
    val_station = [2 + 3 * m + i for i in range(B * m)]          # stations 1..Bm
    center = [2 + 3 * m + B * m + j for j in range(3 * m)]       # star centers 1..3m
    roles = {tri_hub: "t", val_hub: "c"}
    for i, v in enumerate(tri_station):
        roles[v] = f"t{i + 1}"
    for i, v in enumerate(val_station):
        roles[v] = f"c{i + 1}"
    for j, v in enumerate(center):
        roles[v] = f"s{j + 1}"
    leaf: list[list[int]] = []
    nxt = 2 + 6 * m + B * m
    for j in range(3 * m):
        row = []
        for i in range(a[j] + 1):
            roles[nxt] = f"l{j + 1}_{i}"
            row.append(nxt)
            nxt += 1
        leaf.append(row)

    edges: list[tuple[int, int, int]] = []

    tri_ring = tuple(
        _norm(tri_station[i], tri_station[(i + 1) % (3 * m)]) for i in range(3 * m)
    )
    val_ring = tuple(
        _norm(val_station[i], val_station[(i + 1) % (B * m)]) for i in range(B * m)
    )
    edges += [(u, v, 2 * k) for u, v in tri_ring]
    edges += [(u, v, 2 * k) for u, v in val_ring]

    spokes = []
    for i in range(1, m + 1):
        trio = (
            _norm(tri_hub, tri_station[3 * i - 1]),
            _norm(tri_station[3 * i - 1], val_station[B * i - 1]),
            _norm(val_station[B * i - 1], val_hub),
        )
        spokes.append(trio)
        edges += [(u, v, 5 * B * k) for u, v in trio]

    star_heads = []
    leaf_pairs = []
    for j in range(3 * m):
        head = (_norm(tri_hub, leaf[j][0]), _norm(leaf[j][0], center[j]))
        star_heads.append(head)
        edges += [(u, v, k) for u, v in head]
        pairs = []
        for i in range(1, a[j] + 1):
            pair = (_norm(center[j], leaf[j][i]), _norm(leaf[j][i], val_hub))
            pairs.append(pair)
            edges += [(u, v, k) for u, v in pair]
        leaf_pairs.append(tuple(pairs))

    graph = new_multigraph(nxt, edges)
    return ReductionGraph(graph, inst, k, roles, tuple(spokes), tri_ring, val_ring,
                          tuple(star_heads), tuple(leaf_pairs))


def witness_drawing(rg: ReductionGraph, p: Partition, k: int) -> Drawing:
    """Drawing of the gadget with exactly k crossings on every crossed copy.

    Region i holds the three stars of part i.  Each star's head path pierces
    the middle of one 2k-bundle on the region's station-ring arc: the k
    hub-side copies cross the outer k bundle copies, the k center-side
    copies cross the inner k.  Each leaf path pierces its own bundle on the
    region's value-ring arc the same way, one bundle per leaf, which fits
    exactly because the part sums to B.  Requires p to solve rg.instance.
    """
    if k != rg.k:
        raise ValueError(f"drawing parameter k={k} does not match compiled k={rg.k}")
    _check_partition(rg.instance, p)
    a, B, m = rg.instance.a, rg.instance.B, rg.instance.m

    crossings: list[tuple[EdgeCopy, EdgeCopy]] = []
    seqs: dict[EdgeCopy, list[int]] = {}

    def pierce(entry: Edge, entry_forward: bool, exit_: Edge, exit_forward: bool, bundle: Edge) -> None:
        """Cross the 2k-copy bundle with a 2-edge path, k copies a side.

        Travel runs along the entry edge to the path's middle vertex, then
        along the exit edge away from it; entry copies cross bundle copies
        2k down to k+1, exit copies cross k down to 1.  entry_forward and
        exit_forward say whether the stored edge direction (small endpoint
        first) agrees with that travel direction.
        """
        entry_ids = [[0] * k for _ in range(k)]
        exit_ids = [[0] * k for _ in range(k)]
        for p_i in range(k):
            for q in range(k):
                entry_ids[p_i][q] = len(crossings)
                crossings.append((EdgeCopy(*entry, p_i + 1), EdgeCopy(*bundle, 2 * k - q)))
                exit_ids[p_i][q] = len(crossings)
                crossings.append((EdgeCopy(*exit_, p_i + 1), EdgeCopy(*bundle, k - q)))
        for p_i in range(k):
            order = list(entry_ids[p_i])
            seqs[EdgeCopy(*entry, p_i + 1)] = order if entry_forward else order[::-1]
            order = list(exit_ids[p_i])
            seqs[EdgeCopy(*exit_, p_i + 1)] = order if exit_forward else order[::-1]
        for q in range(k):
            seqs[EdgeCopy(*bundle, 2 * k - q)] = [entry_ids[p_i][q] for p_i in range(k)]
            seqs[EdgeCopy(*bundle, k - q)] = [exit_ids[p_i][q] for p_i in range(k)]

    for region in range(1, m + 1):
        part = sorted(p.parts[region - 1])
        arc = [(3 * region - 1 + d) % (3 * m) for d in range(3)]
        for slot, j in enumerate(part):
            head_in, head_out = rg.star_heads[j]
            # hub id 0 is the small endpoint of head_in; the star center is
            # the small endpoint of head_out, so stored direction runs
            # center -> head vertex, against the travel direction
            pierce(head_in, True, head_out, False, rg.tri_ring[arc[slot]])
        val_arc = [(B * region - 1 + d) % (B * m) for d in range(B)]
        slot = 0
        for j in part:
            for i in range(a[j]):
                leaf_in, leaf_out = rg.leaf_pairs[j][i]
                # center is the small endpoint of leaf_in (travel direction);
                # hub id 1 is the small endpoint of leaf_out (against travel)
                pierce(leaf_in, True, leaf_out, False, rg.val_ring[val_arc[slot]])
                slot += 1

    return Drawing(rg.graph, tuple(crossings), {c: tuple(s) for c, s in seqs.items()})


def _check_partition(inst: ThreePartitionInstance, p: Partition) -> None:
    if len(p.parts) != inst.m:
        raise ValueError(f"partition has {len(p.parts)} parts, instance needs {inst.m}")
    seen: set[int] = set()
    for part in p.parts:
        if len(part) != 3:
            raise ValueError(f"part {part} does not have exactly 3 indices")
        for idx in part:
            if not (0 <= idx < 3 * inst.m):
                raise ValueError(f"index {idx} out of range")
            if idx in seen:
                raise ValueError(f"index {idx} used twice")
            seen.add(idx)
        total = sum(inst.a[idx] for idx in part)
        if total != inst.B:
            raise ValueError(f"part {part} sums to {total}, expected {inst.B}")
