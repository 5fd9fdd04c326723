"""Integer-partition machinery for the pair cost sum over hs(a_i, a_j):
classification, the unique quasi-fair partition, and exhaustive minimization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .gf2core import DomainError
from .hopf_stiefel import hs


@dataclass(frozen=True)
class Partition:
    """A non-increasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise DomainError("partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise DomainError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError("parts must be non-increasing")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class PartitionFlags:
    compressed: bool
    quasi_dyadic: bool
    quasi_fair: bool


def _power_strictly_between(lo: int, hi: int) -> bool:
    """Is there a power of two q with lo < q < hi?"""
    q = 1 << lo.bit_length()  # smallest power of two > lo
    return q < hi


def classify(p: Partition) -> PartitionFlags:
    """compressed: no pair (a_i, a_j), i<j, straddles a power of two with
    a_i below it; quasi-dyadic: all parts but the last are powers of two;
    quasi-fair: quasi-dyadic with the head parts confined to two adjacent
    powers of two."""
    parts = p.parts
    compressed = not any(
        _power_strictly_between(parts[i], parts[i] + parts[j])
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
    )
    head = parts[:-1]
    quasi_dyadic = all(a & (a - 1) == 0 for a in head)
    quasi_fair = quasi_dyadic and (not head or head[0] <= 2 * head[-1])
    return PartitionFlags(compressed, quasi_dyadic, quasi_fair)


@dataclass(frozen=True)
class QuasiFairMeta:
    """The canonical parameters of a quasi-fair m-partition of a: the head
    parts are 2^k or 2^(k-1), and exactly the first j parts exceed 2^(k-1)."""

    k: int
    j: int


def quasi_fair_meta(a: int, m: int) -> QuasiFairMeta:
    if not 1 <= m <= a:
        raise DomainError(f"need 1 <= m <= a, got m={m}, a={a}")
    k = 0
    while m << k < a:
        k += 1
    j = -(-a >> (k - 1)) - m if k >= 1 else -(-a * 2) - m
    return QuasiFairMeta(k=k, j=j)


def quasi_fair(a: int, m: int) -> Partition:
    """The unique quasi-fair m-partition of a."""
    meta = quasi_fair_meta(a, m)
    k = meta.k
    head_big = min(meta.j, m - 1)
    head_small = m - 1 - head_big
    parts = [1 << k] * head_big + [1 << (k - 1) if k else 1] * head_small
    parts.append(a - sum(parts))
    p = Partition(tuple(parts))
    assert classify(p).quasi_fair
    return p


def pair_cost(p: Partition) -> int:
    """Sum of hs(a_i, a_j) over pairs i < j."""
    parts = p.parts
    cost = sum(
        hs(parts[i], parts[j])
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
    )
    if classify(p).quasi_dyadic:
        # for quasi-dyadic partitions each pair costs its maximum
        m = len(parts)
        closed = sum((m - 1 - i) * parts[i] for i in range(m))
        assert cost == closed
    return cost


def partitions_of(a: int, m: int, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All non-increasing m-part partitions of a with parts <= cap."""
    first_max = a if cap is None else min(a, cap)

    def rec(remaining: int, parts_left: int, max_part: int):
        if parts_left == 1:
            if 1 <= remaining <= max_part:
                yield (remaining,)
            return
        # keep enough mass for the remaining parts
        for first in range(min(max_part, remaining - parts_left + 1), 0, -1):
            if first * parts_left < remaining:
                break
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    return rec(a, m, first_max)


def min_pair_cost(
    a: int, m: int, cap: Optional[int] = None
) -> tuple[int, Partition]:
    """Exhaustive minimum of the pair cost over all m-partitions of a (parts
    capped at cap).  Among minimizers the quasi-fair partition wins, then the
    lexicographically largest part sequence."""
    if not 1 <= m <= a:
        raise DomainError(f"need 1 <= m <= a, got m={m}, a={a}")
    if cap is not None and cap * m < a:
        raise DomainError(f"cap {cap} infeasible for {m}-partitions of {a}")
    qf = quasi_fair(a, m) if (cap is None or max(quasi_fair(a, m).parts) <= cap) else None
    best: Optional[tuple[int, ...]] = None
    best_cost = None
    for parts in partitions_of(a, m, cap):
        cost = sum(
            hs(parts[i], parts[j])
            for i in range(m)
            for j in range(i + 1, m)
        )
        if best_cost is None or cost < best_cost:
            best_cost, best = cost, parts
        elif cost == best_cost:
            if (qf is not None and parts == qf.parts) or (
                not (qf is not None and best == qf.parts) and parts > best
            ):
                best = parts
    assert best is not None and best_cost is not None
    return best_cost, Partition(best)
