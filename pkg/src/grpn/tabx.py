"""r-partitions, standard and reverse semi-standard Young r-tableaux, shift
orbits, and the entry-wise bijection between the two tableau families.

A shape is an r-tuple of partitions with total size n.  Components are drawn
with the (i+1)-th diagram south-west of the i-th, so for descent purposes any
cell of a later component lies strictly below any cell of an earlier one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cache

from .core import GroupParams, size_guard
from .errors import NonIntegralDelta, ShapeMismatch, SizeGuardExceeded, ValueOutOfRange
from .partitions import partitions

RPartition = tuple[tuple[int, ...], ...]  # r components, each weakly decreasing


def shape_total(shape: RPartition) -> int:
    return sum(sum(comp) for comp in shape)


@cache
def count_r_partitions(r: int, n: int) -> int:
    counts = [0] * (n + 1)
    counts[0] = 1
    for _ in range(r):
        counts = [
            sum(counts[k - j] * len(partitions(j)) for j in range(k + 1))
            for k in range(n + 1)
        ]
    return counts[n]


def enumerate_r_partitions(r: int, n: int) -> list[RPartition]:
    """All r-tuples of partitions with total size n, deterministic order."""
    if count_r_partitions(r, n) > size_guard():
        raise SizeGuardExceeded(f"{count_r_partitions(r, n)} r-partitions exceed the guard")

    def rec(i: int, remaining: int):
        if i == r - 1:
            for lam in partitions(remaining):
                yield (lam,)
            return
        for size in range(remaining + 1):
            for lam in partitions(size):
                for rest in rec(i + 1, remaining - size):
                    yield (lam,) + rest

    return sorted(rec(0, n))


def shift_shape(shape: RPartition, i: int = 1) -> RPartition:
    """The i-fold 1-shift: (l^0,...,l^(r-1)) -> (l^(r-1), l^0, ..., l^(r-2))."""
    r = len(shape)
    i %= r
    return shape[r - i:] + shape[: r - i]


@dataclass(frozen=True)
class ShapeOrbit:
    """Orbit of a shape under d-fold shifts; b members, stabilizer order u = p/b."""

    members: tuple[RPartition, ...]
    b: int
    u: int


def orbit(shape: RPartition, p: int) -> ShapeOrbit:
    r = len(shape)
    if r % p != 0:
        raise ValueOutOfRange(f"p = {p} does not divide r = {r}")
    d = r // p
    members = []
    for i in range(p):
        s = shift_shape(shape, i * d)
        if s in members:
            break
        members.append(s)
    b = len(members)
    assert p % b == 0
    return ShapeOrbit(tuple(members), b, p // b)


# -- standard tableaux -----------------------------------------------------------


@dataclass(frozen=True)
class RTableau:
    """Entries 1..n increasing along rows and down columns of each component."""

    components: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(len(row) for comp in self.components for row in comp)

    def shape(self) -> RPartition:
        return tuple(tuple(len(row) for row in comp) for comp in self.components)

    def position(self, entry: int) -> tuple[int, int, int]:
        for ci, comp in enumerate(self.components):
            for ri, row in enumerate(comp):
                for co, v in enumerate(row):
                    if v == entry:
                        return ci, ri, co
        raise ValueError(f"entry {entry} not present")

    def positions(self) -> dict[int, tuple[int, int, int]]:
        out = {}
        for ci, comp in enumerate(self.components):
            for ri, row in enumerate(comp):
                for co, v in enumerate(row):
                    out[v] = (ci, ri, co)
        return out

    def to_json(self) -> list:
        return [[list(row) for row in comp] for comp in self.components]


@dataclass(frozen=True)
class TabStats:
    des: tuple[int, ...]
    d_vector: tuple[int, ...]
    colors: tuple[int, ...]
    f_vector: tuple[int, ...]
    col: int
    maj: int
    fmaj: int


def tableau_stats(t: RTableau) -> TabStats:
    """Descents: i with i+1 strictly below i (later component, or lower row)."""
    r, n = t.r, t.n
    pos = t.positions()
    des = []
    for i in range(1, n):
        (c1, r1, _), (c2, r2, _) = pos[i], pos[i + 1]
        if c2 > c1 or (c1 == c2 and r2 > r1):
            des.append(i)
    des = tuple(des)
    colors = tuple(pos[i][0] for i in range(1, n + 1))
    d_vector = tuple(sum(1 for j in des if j >= i) for i in range(1, n + 1))
    f_vector = tuple(r * d + c for d, c in zip(d_vector, colors))
    maj = sum(des)
    col = sum(colors)
    return TabStats(des, d_vector, colors, f_vector, col, maj, r * maj + col)


def shift_tableau(t: RTableau) -> RTableau:
    """1-shift: components rotate, entries travel with their cells."""
    comps = t.components
    return RTableau((comps[-1],) + comps[:-1])


def enumerate_syt(shape: RPartition) -> list[RTableau]:
    """All standard fillings of an r-partition shape, deterministic order."""
    n = shape_total(shape)
    if math.factorial(n) > size_guard():
        raise SizeGuardExceeded(f"{n}! standard tableaux may exceed the guard")
    r = len(shape)
    rows = [list(comp) for comp in shape]
    placements: dict[int, tuple[int, int, int]] = {}
    out = []

    def build() -> RTableau:
        cells = [[[0] * ln for ln in comp] for comp in shape]
        for entry, (ci, ri, co) in placements.items():
            cells[ci][ri][co] = entry
        return RTableau(tuple(tuple(tuple(row) for row in comp) for comp in cells))

    def rec(k: int):
        if k == 0:
            out.append(build())
            return
        for ci in range(r):
            comp = rows[ci]
            for ri in range(len(comp)):
                if comp[ri] > 0 and (ri == len(comp) - 1 or comp[ri] > comp[ri + 1]):
                    comp[ri] -= 1
                    placements[k] = (ci, ri, comp[ri])
                    rec(k - 1)
                    comp[ri] += 1

    rec(n)
    return sorted(out, key=lambda t: t.components)


def enumerate_osyt_n(orb: ShapeOrbit, params: GroupParams) -> list[RTableau]:
    """Standard tableaux over the orbit whose largest entry sits in T^0..T^(d-1)."""
    d = params.d
    out = []
    for shape in orb.members:
        n = shape_total(shape)
        for t in enumerate_syt(shape):
            if t.position(n)[0] < d:
                out.append(t)
    return out


# -- reverse semi-standard tableaux ------------------------------------------------


@dataclass(frozen=True)
class RSSTableau:
    """Rows weakly decreasing, columns strictly decreasing; entries in
    component i congruent to i+1 mod r."""

    components: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def r(self) -> int:
        return len(self.components)

    def shape(self) -> RPartition:
        return tuple(tuple(len(row) for row in comp) for comp in self.components)

    def entries(self) -> list[int]:
        return [v for comp in self.components for row in comp for v in row]

    def to_json(self) -> list:
        return [[list(row) for row in comp] for comp in self.components]


def entries_partition(t: RSSTableau) -> tuple[int, ...]:
    """theta(T): all entries in weakly decreasing order."""
    return tuple(sorted(t.entries(), reverse=True))


def _component_fillings(rows: tuple[int, ...], residue: int, r: int, max_entry: int):
    """Reverse semi-standard fillings of one partition, entries == residue mod r."""
    allowed = [v for v in range(max_entry, 0, -1) if v % r == residue % r]
    cells = [(ri, co) for ri, ln in enumerate(rows) for co in range(ln)]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(
                tuple(filling[(ri, co)] for co in range(ln)) for ri, ln in enumerate(rows)
            )
            return
        ri, co = cells[idx]
        for v in allowed:
            if co > 0 and v > filling[(ri, co - 1)]:
                continue
            if ri > 0 and v >= filling[(ri - 1, co)]:
                continue
            filling[(ri, co)] = v
            yield from rec(idx + 1)
        filling.pop((ri, co), None)

    yield from rec(0)


def enumerate_rssyt(shape: RPartition, max_entry: int) -> list[RSSTableau]:
    r = len(shape)
    per_component = [
        list(_component_fillings(shape[i], i + 1, r, max_entry)) for i in range(r)
    ]
    out = []
    for combo in itertools.product(*per_component):
        out.append(RSSTableau(tuple(combo)))
    return out


# -- the bijection RSSYT(shape) <-> SYT(shape) x N^n ----------------------------------


def phi_lambda(t: RSSTableau) -> tuple[RTableau, tuple[int, ...]]:
    """Forward map: standardize by decreasing entries, remember growth in Delta.

    Entry i of the standard tableau goes where t holds its i-th largest value;
    equal values (always within one component, in distinct columns) receive
    consecutive entries increasing with the column index.  Delta measures the
    r-step gaps: theta_i - 1 = f_i(T) + r * sum_(j >= i) Delta_j.
    """
    r = len(t.components)
    cells = []
    for ci, comp in enumerate(t.components):
        for ri, row in enumerate(comp):
            for co, v in enumerate(row):
                cells.append((v, ci, ri, co))
    # i-th largest value gets entry i; ties ordered by column, left to right
    cells.sort(key=lambda c: (-c[0], c[3]))
    n = len(cells)
    theta = tuple(c[0] for c in cells)
    grid = [[[0] * len(row) for row in comp] for comp in t.components]
    for entry, (_, ci, ri, co) in enumerate(cells, start=1):
        grid[ci][ri][co] = entry
    std = RTableau(tuple(tuple(tuple(row) for row in comp) for comp in grid))
    _assert_standard(std)
    f = tableau_stats(std).f_vector
    delta = []
    for i in range(n):
        th_next = theta[i + 1] if i + 1 < n else 1
        f_next = f[i + 1] if i + 1 < n else 0
        num = theta[i] - f[i] - th_next + f_next
        if num < 0 or num % r != 0:
            raise NonIntegralDelta(f"gap {num} at index {i + 1} is not a multiple of r = {r}")
        delta.append(num // r)
    return std, tuple(delta)


def phi_lambda_inverse(std: RTableau, delta: tuple[int, ...]) -> RSSTableau:
    r, n = std.r, std.n
    if len(delta) != n:
        raise ShapeMismatch(f"delta length {len(delta)} != {n}")
    f = tableau_stats(std).f_vector
    suffix = list(itertools.accumulate(reversed(delta)))[::-1]
    theta = [1 + f[i] + r * suffix[i] for i in range(n)]
    grid = [[[0] * len(row) for row in comp] for comp in std.components]
    pos = std.positions()
    for entry in range(1, n + 1):
        ci, ri, co = pos[entry]
        grid[ci][ri][co] = theta[entry - 1]
    return RSSTableau(tuple(tuple(tuple(row) for row in comp) for comp in grid))


def _assert_standard(t: RTableau) -> None:
    for comp in t.components:
        for row in comp:
            assert all(a < b for a, b in zip(row, row[1:]))
        for r1, r2 in zip(comp, comp[1:]):
            assert all(a < b for a, b in zip(r1, r2))
