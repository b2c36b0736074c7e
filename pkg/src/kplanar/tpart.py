"""Numerical 3-partition instances: validation, exact solving, generation.

An instance is 3m positive integers a with sum B*m; a solution splits the
index set into m triples, each summing to B.  Parts always have exactly
three elements; that is part of the problem statement here, not a derived
fact, so it holds even for instances whose values stray outside (B/4, B/2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class ThreePartitionInstance:
    a: tuple[int, ...]
    B: int
    m: int

    def to_json_dict(self) -> dict:
        return {"B": self.B, "a": list(self.a), "m": self.m}

    @staticmethod
    def from_json_dict(data: dict) -> "ThreePartitionInstance":
        if not isinstance(data, dict) or set(data) != {"a", "B", "m"}:
            raise ValueError("instance object must have exactly 'a', 'B' and 'm'")
        a, B, m = data["a"], data["B"], data["m"]
        if not (isinstance(a, list) and all(isinstance(x, int) for x in a)):
            raise ValueError("'a' must be a list of integers")
        if not isinstance(B, int) or not isinstance(m, int):
            raise ValueError("'B' and 'm' must be integers")
        return ThreePartitionInstance(tuple(a), B, m)


@dataclass(frozen=True)
class Partition:
    """m index triples (0-based), each triple sorted, triples sorted."""

    parts: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    errors: tuple[str, ...]


def validate(inst: ThreePartitionInstance, strict: bool = False) -> ValidationResult:
    """Check instance well-formedness.

    Relaxed mode checks positivity, length 3m and total sum B*m.  Strict mode
    additionally requires every value strictly between B/4 and B/2, B >= 100
    and m >= 4, the regime where the compiled decision gadget is meaningful.
    """
    errors = []
    if inst.m < 1:
        errors.append(f"m must be >= 1, got {inst.m}")
    if inst.B < 1:
        errors.append(f"B must be >= 1, got {inst.B}")
    if len(inst.a) != 3 * inst.m:
        errors.append(f"expected 3m = {3 * inst.m} values, got {len(inst.a)}")
    if any(x < 1 for x in inst.a):
        errors.append("all values must be positive")
    if not errors and sum(inst.a) != inst.B * inst.m:
        errors.append(f"values sum to {sum(inst.a)}, expected B*m = {inst.B * inst.m}")
    if strict:
        for i, x in enumerate(inst.a):
            # strict inequalities: 4x > B and 2x < B
            if not (4 * x > inst.B and 2 * x < inst.B):
                errors.append(f"a[{i}] = {x} not strictly between B/4 and B/2")
        if inst.B < 100:
            errors.append(f"strict mode requires B >= 100, got {inst.B}")
        if inst.m < 4:
            errors.append(f"strict mode requires m >= 4, got {inst.m}")
    return ValidationResult(not errors, tuple(errors))


def solve(inst: ThreePartitionInstance) -> Partition | None:
    """Exact search for a partition into m triples each summing to B.

    Returns the lexicographically smallest partition (triples sorted
    internally and ordered by first element) or None.  Always anchoring the
    next triple at the smallest unused index makes the first solution found
    the lexicographic minimum.
    """
    if not validate(inst).ok:
        raise ValueError("instance fails validation: " + "; ".join(validate(inst).errors))
    a = inst.a
    n = len(a)
    unused = set(range(n))
    parts: list[tuple[int, int, int]] = []

    def extend() -> bool:
        if not unused:
            return True
        first = min(unused)
        unused.discard(first)
        rest = sorted(unused)
        for idx2, j in enumerate(rest):
            need = inst.B - a[first] - a[j]
            if need < 1:
                continue
            for l in rest[idx2 + 1:]:
                if a[l] != need:
                    continue
                unused.discard(j)
                unused.discard(l)
                parts.append((first, j, l))
                if extend():
                    return True
                parts.pop()
                unused.add(j)
                unused.add(l)
        unused.add(first)
        return False

    if extend():
        return Partition(tuple(parts))
    return None


def generate(m: int, B: int, solvable: bool, seed: int) -> ThreePartitionInstance:
    """Deterministically generate a valid instance with the requested solvability.

    Solvable instances are assembled from m random triples summing to B,
    drawn from triples inside (B/4, B/2) when any exist (none do for B in
    {5, 8}, where any positive triple is used instead).  Unsolvable instances
    are rejection-sampled and certified by solve().
    """
    if m < 1 or B < 5:
        raise ValueError("need m >= 1 and B >= 5")
    rng = random.Random(seed * 7919 + m * 101 + B * 7 + int(solvable))
    bounded = [
        (x, y, B - x - y)
        for x in range(1, B)
        for y in range(x, B)
        if y <= B - x - y and 4 * x > B and 2 * (B - x - y) < B
    ]
    pool = bounded or [
        (x, y, B - x - y) for x in range(1, B) for y in range(x, B) if 0 < B - x - y and y <= B - x - y
    ]
    if solvable:
        values = [x for _ in range(m) for x in rng.choice(pool)]
        rng.shuffle(values)
        return ThreePartitionInstance(tuple(values), B, m)
    for _ in range(500):
        # random positive composition of B*m into 3m parts
        total, k = B * m, 3 * m
        cuts = sorted(rng.sample(range(1, total), k - 1))
        values = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        inst = ThreePartitionInstance(tuple(values), B, m)
        if validate(inst).ok and solve(inst) is None:
            return inst
    raise RuntimeError(f"no unsolvable instance found for m={m}, B={B} within retry budget")
