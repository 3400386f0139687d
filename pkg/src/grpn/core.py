"""Colored permutations, the groups G(r,n) > G(r,p,n), and their statistics.

An element of G(r,n) is a permutation window (sigma(1),...,sigma(n)) together
with a color vector (c_1,...,c_n), c_i in [0, r-1].  The subgroup H = G(r,p,n)
consists of elements with total color divisible by p, and the transversal
Gamma(r,p,n) of elements with c_n < d = r/p is its combinatorial stand-in.

Descents are taken with respect to the order on colored letters in which a
higher color always means a smaller letter:

    1^(r-1) < 2^(r-1) < ... < n^(r-1) < ... < 1^1 < ... < n^1 < 1 < 2 < ... < n
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass

from .errors import (
    ColorOutOfRange,
    MalformedToken,
    NIsOne,
    NotAPermutation,
    NotInGamma,
    NotInH,
    ParamsMismatch,
    SizeGuardExceeded,
    ValueOutOfRange,
)

DEFAULT_SIZE_GUARD = 10**7

CycleType = tuple[tuple[int, ...], ...]  # r-tuple of partitions, total size n


def size_guard() -> int:
    return int(os.environ.get("GRPN_SIZE_GUARD", DEFAULT_SIZE_GUARD))


@dataclass(frozen=True)
class GroupParams:
    """The triple (r, p, n) with p | r; d = r / p."""

    r: int
    p: int
    n: int

    def __post_init__(self):
        if self.r < 1 or self.p < 1 or self.n < 1:
            raise ValueOutOfRange(f"parameters must be positive: {self}")
        if self.r % self.p != 0:
            raise ValueOutOfRange(f"p = {self.p} does not divide r = {self.r}")

    @property
    def d(self) -> int:
        return self.r // self.p

    def group_order(self) -> int:
        return math.factorial(self.n) * self.r**self.n

    def subgroup_order(self) -> int:
        return self.group_order() // self.p

    def gamma_size(self) -> int:
        return math.factorial(self.n) * self.r ** (self.n - 1) * self.d


@dataclass(frozen=True)
class Stats:
    """Descent statistics of a colored permutation."""

    des: tuple[int, ...]
    maj: int
    col: int
    d_vector: tuple[int, ...]
    f_vector: tuple[int, ...]
    fmaj: int
    fdes: int
    inv: int

    def to_json(self) -> dict:
        return {
            "Des": list(self.des),
            "maj": self.maj,
            "col": self.col,
            "d_vector": list(self.d_vector),
            "f_vector": list(self.f_vector),
            "fmaj": self.fmaj,
            "fdes": self.fdes,
            "inv": self.inv,
        }


def colored_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Is the colored letter a = (value, color) smaller than b?"""
    (va, ca), (vb, cb) = a, b
    if ca != cb:
        return ca > cb
    return va < vb


@dataclass(frozen=True)
class ColoredPerm:
    params: GroupParams
    window: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        n, r = self.params.n, self.params.r
        if len(self.window) != n or len(self.colors) != n:
            raise ValueOutOfRange(f"window/colors must have length {n}")
        if sorted(self.window) != list(range(1, n + 1)):
            raise NotAPermutation(f"window {self.window} is not a permutation of 1..{n}")
        for c in self.colors:
            if not 0 <= c < r:
                raise ColorOutOfRange(f"color {c} outside [0, {r - 1}]")

    # -- membership ---------------------------------------------------------

    def col(self) -> int:
        return sum(self.colors)

    def in_H(self) -> bool:
        return self.col() % self.params.p == 0

    def in_Gamma(self) -> bool:
        return self.colors[-1] < self.params.d

    def color_class(self) -> int:
        """The index i with self in G_i, i.e. the last color."""
        return self.colors[-1]

    # -- group structure -----------------------------------------------------

    def __mul__(self, other: "ColoredPerm") -> "ColoredPerm":
        return multiply(self, other)

    def inverse(self) -> "ColoredPerm":
        n = self.params.n
        pos = [0] * (n + 1)  # pos[v] = i with window[i-1] == v
        for i, v in enumerate(self.window, start=1):
            pos[v] = i
        window = tuple(pos[j] for j in range(1, n + 1))
        colors = tuple(-self.colors[self.window[j - 1] - 1] % self.params.r for j in range(1, n + 1))
        return ColoredPerm(self.params, window, colors)

    def shift(self, i: int) -> "ColoredPerm":
        """g^i: same window, every color incremented by i mod r."""
        r = self.params.r
        return ColoredPerm(self.params, self.window, tuple((c + i) % r for c in self.colors))

    def hat(self) -> "ColoredPerm":
        """Drop the last position; window entries above sigma(n) slide down by one."""
        n = self.params.n
        if n == 1:
            raise NIsOne("cannot drop the last letter of a one-letter window")
        last = self.window[-1]
        window = tuple(v - 1 if v > last else v for v in self.window[:-1])
        small = GroupParams(self.params.r, self.params.p, n - 1)
        return ColoredPerm(small, window, self.colors[:-1])

    # -- ordering for deterministic output ------------------------------------

    def sort_key(self):
        return (self.window, self.colors)

    def __repr__(self):
        return f"<{format_window(self)}>"


def identity(params: GroupParams) -> ColoredPerm:
    return ColoredPerm(params, tuple(range(1, params.n + 1)), (0,) * params.n)


def multiply(g: ColoredPerm, h: ColoredPerm) -> ColoredPerm:
    """Group product compatible with the polynomial action: (g*h).M = g.(h.M).

    Window composes as sigma_g o sigma_h; the color at position j is
    c_g(j) + c_h(sigma_g^{-1}(j)), i.e. colors of h are pulled back through g.
    """
    if g.params != h.params:
        raise ParamsMismatch(f"{g.params} != {h.params}")
    n, r = g.params.n, g.params.r
    window = tuple(g.window[h.window[i] - 1] for i in range(n))
    pos_g = [0] * (n + 1)
    for i, v in enumerate(g.window, start=1):
        pos_g[v] = i
    colors = tuple((g.colors[j - 1] + h.colors[pos_g[j] - 1]) % r for j in range(1, n + 1))
    return ColoredPerm(g.params, window, colors)


def shift_element(g: ColoredPerm, i: int) -> ColoredPerm:
    return g.shift(i)


def hat(g: ColoredPerm) -> ColoredPerm:
    return g.hat()


def g_subset_membership(g: ColoredPerm, i: int) -> bool:
    """Is g in G_i (last color equal to i)?"""
    if not 0 <= i < g.params.r:
        raise ColorOutOfRange(f"color {i} outside [0, {g.params.r - 1}]")
    return g.colors[-1] == i


# -- window notation ----------------------------------------------------------

_TOKEN_RE = re.compile(r"^(?P<value>\d+)(\^(?P<color>\d+))?$")


def parse_window(text: str, params: GroupParams) -> ColoredPerm:
    """Parse window notation like ``6 2^5 4^4 3^1 1^6 5^3``."""
    tokens = text.split()
    if len(tokens) != params.n:
        raise MalformedToken(f"expected {params.n} tokens, got {len(tokens)}")
    window, colors = [], []
    for tok in tokens:
        m = _TOKEN_RE.match(tok)
        if not m:
            raise MalformedToken(f"bad token {tok!r}")
        v = int(m.group("value"))
        c = int(m.group("color") or 0)
        if not 1 <= v <= params.n:
            raise ValueOutOfRange(f"value {v} outside [1, {params.n}]")
        if m.group("color") is not None and not 1 <= c <= params.r - 1:
            raise ColorOutOfRange(f"color {c} outside [1, {params.r - 1}]")
        window.append(v)
        colors.append(c)
    return ColoredPerm(params, tuple(window), tuple(colors))


def format_window(g: ColoredPerm) -> str:
    return " ".join(
        str(v) if c == 0 else f"{v}^{c}" for v, c in zip(g.window, g.colors)
    )


# -- enumeration ---------------------------------------------------------------


def enumerate_elements(params: GroupParams, which: str = "G") -> list[ColoredPerm]:
    """All elements of G, H, or Gamma in lexicographic (window, colors) order."""
    if which not in ("G", "H", "Gamma"):
        raise ValueOutOfRange(f"unknown set {which!r}")
    if params.group_order() > size_guard():
        raise SizeGuardExceeded(
            f"|G| = {params.group_order()} exceeds guard {size_guard()}"
        )
    n, r = params.n, params.r
    out = []
    for window in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(r), repeat=n):
            g = ColoredPerm(params, window, colors)
            if which == "H" and not g.in_H():
                continue
            if which == "Gamma" and not g.in_Gamma():
                continue
            out.append(g)
    return out


# -- the bijection between H and Gamma ------------------------------------------


def phi_H_to_Gamma(h: ColoredPerm) -> ColoredPerm:
    """Replace the last color by floor(c_n / p)."""
    if not h.in_H():
        raise NotInH(f"col = {h.col()} not divisible by p = {h.params.p}")
    colors = h.colors[:-1] + (h.colors[-1] // h.params.p,)
    return ColoredPerm(h.params, h.window, colors)


def phi_Gamma_to_H(gamma: ColoredPerm) -> ColoredPerm:
    """The unique preimage in H: c_n recovered within [c_n*p, c_n*p + p - 1]."""
    p = gamma.params.p
    if not gamma.in_Gamma():
        raise NotInGamma(f"last color {gamma.colors[-1]} >= d = {gamma.params.d}")
    rest = sum(gamma.colors[:-1])
    base = gamma.colors[-1] * p
    t = (-rest - base) % p
    colors = gamma.colors[:-1] + (base + t,)
    return ColoredPerm(gamma.params, gamma.window, colors)


# -- statistics -----------------------------------------------------------------


def stats(g: ColoredPerm) -> Stats:
    """Descent statistics; defined on every colored permutation, not only Gamma."""
    n, r = g.params.n, g.params.r
    letters = list(zip(g.window, g.colors))
    des = tuple(
        i for i in range(1, n) if colored_less(letters[i], letters[i - 1])
    )
    maj = sum(des)
    col = sum(g.colors)
    d_vector = tuple(sum(1 for j in des if j >= i) for i in range(1, n + 1))
    f_vector = tuple(r * d + c for d, c in zip(d_vector, g.colors))
    inv = sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if colored_less(letters[j], letters[i])
    )
    return Stats(
        des=des,
        maj=maj,
        col=col,
        d_vector=d_vector,
        f_vector=f_vector,
        fmaj=r * maj + col,
        fdes=r * d_vector[0] + g.colors[0] if n else 0,
        inv=inv,
    )


def cycle_type(g: ColoredPerm) -> CycleType:
    """Colored cycle type: alpha^i collects lengths of cycles of color i.

    The color of a cycle is the sum mod r of the colors of its entries, where
    the color of the entry sigma(i) is c_i.
    """
    n, r = g.params.n, g.params.r
    color_of_value = [0] * (n + 1)
    for i, v in enumerate(g.window):
        color_of_value[v] = g.colors[i]
    seen = [False] * (n + 1)
    buckets: list[list[int]] = [[] for _ in range(r)]
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length, csum, v = 0, 0, start
        while not seen[v]:
            seen[v] = True
            length += 1
            csum += color_of_value[v]
            v = g.window[v - 1]
        buckets[csum % r].append(length)
    return tuple(tuple(sorted(b, reverse=True)) for b in buckets)


def element_to_json(g: ColoredPerm) -> dict:
    return {
        "window": format_window(g),
        "colors": list(g.colors),
        "stats": stats(g).to_json(),
    }
