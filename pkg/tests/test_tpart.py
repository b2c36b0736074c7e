from itertools import combinations

import pytest

from kplanar.tpart import (
    Partition,
    ThreePartitionInstance,
    generate,
    solve,
    validate,
)

from helpers import load_fixture

FIG1 = ThreePartitionInstance((1, 1, 3, 2, 2, 1), 5, 2)


def test_relaxed_validation_accepts_fig1():
    assert validate(FIG1).ok
    assert validate(FIG1).errors == ()


def test_relaxed_validation_errors():
    assert not validate(ThreePartitionInstance((1, 2), 3, 1)).ok
    assert not validate(ThreePartitionInstance((1, 1, 2), 3, 1)).ok  # sum 4 != 3
    assert not validate(ThreePartitionInstance((0, 1, 2), 1, 1)).ok
    assert not validate(ThreePartitionInstance((), 5, 0)).ok
    assert not validate(ThreePartitionInstance((1, 1, 1), -3, 1)).ok


def test_strict_validation():
    # values must sit strictly between B/4 and B/2, with B >= 100 and m >= 4
    a = (26, 37, 37) * 4
    good = ThreePartitionInstance(a, 100, 4)
    assert validate(good, strict=True).ok
    assert not validate(FIG1, strict=True).ok
    off = ThreePartitionInstance((25, 37, 38) + a[3:], 100, 4)
    assert not validate(off, strict=True).ok


def test_solve_fig1():
    part = solve(FIG1)
    assert part == Partition(((0, 1, 2), (3, 4, 5)))


def test_solve_unsolvable():
    inst = ThreePartitionInstance((3, 3, 3, 3, 3, 9), 12, 2)
    assert validate(inst).ok
    assert solve(inst) is None


def test_solve_rejects_invalid():
    with pytest.raises(ValueError):
        solve(ThreePartitionInstance((1, 1, 1), 5, 1))


def test_solve_is_lexicographically_minimal():
    # brute force every partition into triples and compare
    inst = ThreePartitionInstance((2, 2, 2, 2, 2, 2, 2, 2, 2), 6, 3)

    def all_partitions(indices):
        if not indices:
            yield ()
            return
        first = indices[0]
        for pair in combinations(indices[1:], 2):
            triple = tuple(sorted((first,) + pair))
            rest = tuple(i for i in indices if i not in triple)
            for tail in all_partitions(rest):
                yield (triple,) + tail

    valid = [
        p for p in all_partitions(tuple(range(9)))
        if all(sum(inst.a[i] for i in t) == inst.B for t in p)
    ]
    assert valid
    assert solve(inst) == Partition(min(valid))


def test_generate_solvable_certified():
    for m, B, seed in [(1, 5, 0), (2, 12, 1), (3, 20, 2), (2, 8, 3)]:
        inst = generate(m, B, solvable=True, seed=seed)
        assert validate(inst).ok
        assert inst.m == m and inst.B == B
        assert solve(inst) is not None


def test_generate_unsolvable_certified():
    for m, B, seed in [(2, 12, 0), (3, 10, 4)]:
        inst = generate(m, B, solvable=False, seed=seed)
        assert validate(inst).ok
        assert solve(inst) is None


def test_generate_deterministic():
    assert generate(2, 13, True, 7) == generate(2, 13, True, 7)
    assert generate(2, 13, False, 7) == generate(2, 13, False, 7)


def test_generate_rejects_tiny_parameters():
    with pytest.raises(ValueError):
        generate(0, 10, True, 0)
    with pytest.raises(ValueError):
        generate(1, 4, True, 0)


def test_json_round_trip():
    data = FIG1.to_json_dict()
    assert data == {"B": 5, "a": [1, 1, 3, 2, 2, 1], "m": 2}
    assert ThreePartitionInstance.from_json_dict(data) == FIG1


def test_from_json_dict_rejections():
    with pytest.raises(ValueError):
        ThreePartitionInstance.from_json_dict({"a": [1], "B": 1})
    with pytest.raises(ValueError):
        ThreePartitionInstance.from_json_dict({"a": "nope", "B": 1, "m": 1})
    with pytest.raises(ValueError):
        ThreePartitionInstance.from_json_dict({"a": [1.5, 1, 1], "B": 3, "m": 1})


def test_fixtures_match_frozen_instances():
    assert ThreePartitionInstance.from_json_dict(load_fixture("fig1.json")) == FIG1
    uns = ThreePartitionInstance.from_json_dict(load_fixture("unsolvable.json"))
    assert uns == ThreePartitionInstance((3, 3, 3, 3, 3, 9), 12, 2)
