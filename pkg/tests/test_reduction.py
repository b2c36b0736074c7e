import pytest

from kplanar.drawing import verify
from kplanar.mgraph import total_edge_copies
from kplanar.reduction import ReductionGraph, compile_reduction, witness_drawing
from kplanar.tpart import Partition, ThreePartitionInstance, generate, solve

FIG1 = ThreePartitionInstance((1, 1, 3, 2, 2, 1), 5, 2)
FIG1_PARTITION = Partition(((0, 1, 2), (3, 4, 5)))


def synthetic(m, B):
    # relaxed-valid filler instance: every triple is (1, 1, B-2)
    return ThreePartitionInstance((1, 1, B - 2) * m, B, m)


def test_fig1_counts():
    rg = compile_reduction(FIG1, 1)
    assert rg.graph.n == 40
    assert len(rg.graph.edges) == 54
    assert total_edge_copies(rg.graph) == 214


def test_counts_formulas_over_grid():
    for m in range(1, 5):
        for B in range(5, 21):
            inst = synthetic(m, B)
            for k in (1, 2, 3):
                rg = compile_reduction(inst, k)
                assert rg.graph.n == 2 + 9 * m + 2 * B * m
                assert len(rg.graph.edges) == 12 * m + 3 * B * m
                assert total_edge_copies(rg.graph) == k * (12 * m + 19 * B * m)


def test_multiplicity_table_edge_by_edge():
    inst = synthetic(2, 7)
    for k in (1, 3):
        rg = compile_reduction(inst, k)
        heavy = {e for trio in rg.spokes for e in trio}
        rings = set(rg.tri_ring) | set(rg.val_ring)
        stars = {e for head in rg.star_heads for e in head}
        stars |= {e for pairs in rg.leaf_pairs for pair in pairs for e in pair}
        assert heavy | rings | stars == {(u, v) for u, v, _ in rg.graph.edges}
        assert not (heavy & rings or heavy & stars or rings & stars)
        for u, v, w in rg.graph.edges:
            if (u, v) in heavy:
                assert w == 5 * inst.B * k
            elif (u, v) in rings:
                assert w == 2 * k
            else:
                assert w == k


def test_vertex_roles():
    rg = compile_reduction(FIG1, 1)
    assert rg.roles[0] == "t"
    assert rg.roles[1] == "c"
    assert sorted(rg.roles) == list(range(rg.graph.n))
    tags = [rg.roles[v] for v in range(rg.graph.n)]
    assert tags.count("t") == 1 and tags.count("c") == 1
    assert sum(t.startswith("s") for t in tags) == 3 * FIG1.m
    # one head leaf plus one leaf per unit of the value
    assert sum(t.startswith("l") for t in tags) == sum(a + 1 for a in FIG1.a)


def test_structure_group_sizes():
    rg = compile_reduction(FIG1, 2)
    assert len(rg.spokes) == FIG1.m
    assert all(len(trio) == 3 for trio in rg.spokes)
    assert len(rg.tri_ring) == 3 * FIG1.m
    assert len(rg.val_ring) == FIG1.B * FIG1.m
    assert len(rg.star_heads) == 3 * FIG1.m
    assert tuple(len(p) for p in rg.leaf_pairs) == FIG1.a


def test_compile_deterministic():
    a = compile_reduction(FIG1, 2)
    b = compile_reduction(FIG1, 2)
    assert a == b
    assert isinstance(a, ReductionGraph)


def test_compile_rejections():
    with pytest.raises(ValueError):
        compile_reduction(FIG1, 0)
    with pytest.raises(ValueError):
        compile_reduction(ThreePartitionInstance((1, 1, 1), 5, 1), 1)


def test_witness_fig1_exact_for_small_k():
    for k in (1, 2, 3):
        rg = compile_reduction(FIG1, k)
        d = witness_drawing(rg, FIG1_PARTITION, k)
        report = verify(d)
        assert report.valid
        assert report.lcr == k
        assert report.cr == 2 * k * k * (3 * FIG1.m + FIG1.B * FIG1.m)
        # every crossed copy carries exactly k crossings
        assert set(report.per_copy.values()) == {k}


def test_witness_on_generated_instances():
    for seed in (0, 1):
        inst = generate(2, 9, solvable=True, seed=seed)
        part = solve(inst)
        rg = compile_reduction(inst, 2)
        report = verify(witness_drawing(rg, part, 2))
        assert report.valid and report.lcr == 2


def test_witness_rejections():
    rg = compile_reduction(FIG1, 1)
    with pytest.raises(ValueError):
        witness_drawing(rg, FIG1_PARTITION, 2)  # k mismatch
    bad_sum = Partition(((0, 1, 3), (2, 4, 5)))
    with pytest.raises(ValueError):
        witness_drawing(rg, bad_sum, 1)
    reused = Partition(((0, 1, 2), (0, 4, 5)))
    with pytest.raises(ValueError):
        witness_drawing(rg, reused, 1)
    short = Partition(((0, 1, 2),))
    with pytest.raises(ValueError):
        witness_drawing(rg, short, 1)
    out_of_range = Partition(((0, 1, 2), (3, 4, 99)))
    with pytest.raises(ValueError):
        witness_drawing(rg, out_of_range, 1)


def test_witness_deterministic():
    rg = compile_reduction(FIG1, 1)
    a = witness_drawing(rg, FIG1_PARTITION, 1)
    b = witness_drawing(rg, FIG1_PARTITION, 1)
    assert a.to_json_dict() == b.to_json_dict()
