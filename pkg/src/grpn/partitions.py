"""Small integer-partition helpers shared across modules."""

from __future__ import annotations

from functools import cache


@cache
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_box(length: int, max_part: int):
    """All partitions with at most `length` parts, each at most `max_part`."""
    def rec(slots, bound):
        yield ()
        if slots == 0:
            return
        for first in range(1, bound + 1):
            for rest in rec(slots - 1, first):
                yield (first,) + rest

    return list(rec(length, max_part))


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    lam = tuple(x for x in lam if x > 0)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def is_partition(seq) -> bool:
    seq = tuple(seq)
    return all(x >= 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def dominance_leq(mu: tuple[int, ...], lam: tuple[int, ...]) -> bool:
    """mu <= lam in dominance order; both padded with zeros, equal total size."""
    assert sum(mu) == sum(lam), "dominance order compares partitions of equal size"
    pmu = psum = 0
    k = max(len(mu), len(lam))
    for i in range(k):
        pmu += mu[i] if i < len(mu) else 0
        psum += lam[i] if i < len(lam) else 0
        if pmu > psum:
            return False
    return True


def trim(seq) -> tuple[int, ...]:
    """Drop trailing zeros."""
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)
