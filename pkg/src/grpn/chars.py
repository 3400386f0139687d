"""Exact character theory of G(r,n) via the wreath-product analogue of the
Frobenius formula, restriction to H = G(r,p,n), and the multiplicity checks
for the colored-descent representations.

Characters are extracted by expanding the colored power sum p_alpha into
products of Schur polynomials, one alphabet of n variables per color.  The
expansion peels graded-lex leading terms; Kostka unitriangularity makes the
result exact and the loop terminating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import coinv, core, tabx
from .coinv import DescentClass
from .core import ColoredPerm, CycleType, GroupParams
from .errors import NotSymmetric, ParamsMismatch, SizeGuardExceeded
from .exactnum import Cyclotomic, zeta_pow
from .partitions import trim
from .poly import SparsePoly, cyclotomic_ring
from .tabx import RPartition, ShapeOrbit


def conjugacy_classes(r: int, n: int) -> dict[CycleType, int]:
    """Cycle types of G(r,n) with their class sizes, by enumeration."""
    params = GroupParams(r, 1, n)
    sizes: dict[CycleType, int] = {}
    for g in core.enumerate_elements(params, "G"):
        ct = core.cycle_type(g)
        sizes[ct] = sizes.get(ct, 0) + 1
    return dict(sorted(sizes.items()))


def identity_type(r: int, n: int) -> CycleType:
    return ((1,) * n,) + ((),) * (r - 1)


def power_sum_product(ct: CycleType, r: int, n: int) -> SparsePoly:
    """The colored power sum p_alpha in r alphabets of n variables each.

    p_alpha = prod over colors j and parts m of alpha^j of
    sum_(k=0)^(r-1) zeta^(jk) p_m(y^k); alphabet k occupies variables
    k*n .. k*n + n - 1.  Homogeneous of total degree n.
    """
    ring = cyclotomic_ring(r)
    nvars = r * n
    poly = SparsePoly.constant(nvars, 1, ring)
    for j in range(r):
        for m in ct[j]:
            terms: dict[tuple[int, ...], Cyclotomic] = {}
            for k in range(r):
                scalar = zeta_pow(r, j * k)
                for v in range(n):
                    exps = [0] * nvars
                    exps[k * n + v] = m
                    key = tuple(exps)
                    terms[key] = terms.get(key, ring.zero()) + scalar
            poly = poly * SparsePoly(nvars, terms, ring)
    return poly


def _ssyt_contents(lam: tuple[int, ...], m: int):
    """Content vectors of semistandard fillings of lam with entries <= m."""
    cells = [(ri, co) for ri, ln in enumerate(lam) for co in range(ln)]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            content = [0] * m
            for v in filling.values():
                content[v - 1] += 1
            yield tuple(content)
            return
        ri, co = cells[idx]
        lo = 1
        if co > 0:
            lo = max(lo, filling[(ri, co - 1)])  # rows weakly increase
        if ri > 0:
            lo = max(lo, filling[(ri - 1, co)] + 1)  # columns strictly increase
        for v in range(lo, m + 1):
            filling[(ri, co)] = v
            yield from rec(idx + 1)
        filling.pop((ri, co), None)

    yield from rec(0)


@cache
def schur_polynomial(lam: tuple[int, ...], m: int) -> SparsePoly:
    """Schur polynomial s_lam(y_1..y_m) as a sum over semistandard fillings."""
    lam = trim(lam)
    if len(lam) > m:
        return SparsePoly.zero(m)
    terms: dict[tuple[int, ...], int] = {}
    for content in _ssyt_contents(lam, m):
        terms[content] = terms.get(content, 0) + 1
    return SparsePoly(m, terms)


def _embed_block(p: SparsePoly, block: int, r: int, n: int, ring) -> SparsePoly:
    """Re-index an n-variable polynomial into alphabet `block` of r*n variables."""
    nvars = r * n
    terms = {}
    for exps, coeff in p.terms.items():
        full = [0] * nvars
        for v, a in enumerate(exps):
            full[block * n + v] = a
        terms[tuple(full)] = coeff
    return SparsePoly(nvars, terms, ring)


def schur_product(shape: RPartition, n: int, ring) -> SparsePoly:
    """prod_i s_(lambda^i)(y^i) over the r alphabets."""
    r = len(shape)
    poly = SparsePoly.constant(r * n, 1, ring)
    for k, lam in enumerate(shape):
        if not lam:
            continue
        poly = poly * _embed_block(schur_polynomial(lam, n).to_ring(ring), k, r, n, ring)
    return poly


def schur_expand(p: SparsePoly, r: int, n: int) -> dict[RPartition, Cyclotomic]:
    """Coefficients c with p = sum c_shape * prod_i s_(lambda^i)(y^i).

    Peels the graded-lex-greatest term; its per-alphabet exponent slices must
    be weakly decreasing, otherwise the input was not symmetric per alphabet.
    """
    residual = p
    out: dict[RPartition, Cyclotomic] = {}
    guard = len(p.terms) * 64 + 64
    while not residual.is_zero():
        guard -= 1
        if guard < 0:
            raise NotSymmetric("peeling failed to terminate")
        exps, coeff = residual.leading_term()
        slices = [exps[k * n : (k + 1) * n] for k in range(r)]
        for s in slices:
            if any(a < b for a, b in zip(s, s[1:])):
                raise NotSymmetric(f"leading exponents {exps} are not per-alphabet partitions")
        shape = tuple(trim(s) for s in slices)
        residual = residual - schur_product(shape, n, p.ring).scale(coeff)
        out[shape] = coeff
    return out


class CharacterTable:
    """Irreducible characters of G(r,n), rows indexed by r-partitions."""

    def __init__(self, r: int, n: int, shapes, class_sizes, rows):
        self.r = r
        self.n = n
        self.shapes = shapes
        self.class_sizes = class_sizes
        self.rows = rows

    def value(self, shape: RPartition, ct: CycleType) -> Cyclotomic:
        return self.rows[shape][ct]

    def dim(self, shape: RPartition) -> int:
        v = self.rows[shape][identity_type(self.r, self.n)]
        assert v.is_rational_integer()
        return int(v.rational_value())

    def group_order(self) -> int:
        return sum(self.class_sizes.values())

    def inner_product(self, shape1: RPartition, shape2: RPartition) -> Cyclotomic:
        total = Cyclotomic.zero(self.r)
        for ct, size in self.class_sizes.items():
            total = total + self.rows[shape1][ct] * self.rows[shape2][ct].conjugate() * size
        return total * Fraction(1, self.group_order())


@cache
def character_table(r: int, n: int) -> CharacterTable:
    """chi^shape(class) = coefficient of prod s_(lambda^i) in p_alpha."""
    if tabx.count_r_partitions(r, n) > core.size_guard():
        raise SizeGuardExceeded(f"{tabx.count_r_partitions(r, n)} shapes exceed the guard")
    sizes = conjugacy_classes(r, n)
    shapes = tabx.enumerate_r_partitions(r, n)
    zero = Cyclotomic.zero(r)
    rows: dict[RPartition, dict[CycleType, Cyclotomic]] = {s: {} for s in shapes}
    for ct in sizes:
        coeffs = schur_expand(power_sum_product(ct, r, n), r, n)
        for shape in shapes:
            rows[shape][ct] = coeffs.get(shape, zero)
    return CharacterTable(r, n, shapes, sizes, rows)


def restricted_character(
    shape: RPartition, params: GroupParams, table: CharacterTable | None = None
) -> dict[ColoredPerm, Cyclotomic]:
    """chi^shape evaluated on every element of H (through its cycle type)."""
    if table is None:
        table = character_table(params.r, params.n)
    row = table.rows[shape]
    return {h: row[core.cycle_type(h)] for h in core.enumerate_elements(params, "H")}


def inner_product_H(
    f: dict[ColoredPerm, Cyclotomic], g: dict[ColoredPerm, Cyclotomic], params: GroupParams
) -> Cyclotomic:
    """(1/|H|) sum over h of f(h) * conj(g(h))."""
    if set(f) != set(g):
        raise ParamsMismatch("functions defined on different element sets")
    total = Cyclotomic.zero(params.r)
    for h, v in f.items():
        total = total + v * g[h].conjugate()
    return total * Fraction(1, len(f))


def shape_orbits(params: GroupParams) -> list[ShapeOrbit]:
    """All shift orbits of r-partitions of n, ordered by smallest member."""
    seen: set[RPartition] = set()
    orbits = []
    for shape in tabx.enumerate_r_partitions(params.r, params.n):
        if shape in seen:
            continue
        o = tabx.orbit(shape, params.p)
        seen.update(o.members)
        orbits.append(o)
    return orbits


# -- Theorem "main": multiplicities of irreducibles in R_(D,C) --------------------------


@dataclass(frozen=True)
class TheoremMainRow:
    shape: RPartition
    b: int
    u: int
    descent_class: DescentClass
    lhs: object  # inner product as exact Fraction
    rhs: int
    integral: bool
    equal: bool


@dataclass
class TheoremMainReport:
    params: GroupParams
    rows: list[TheoremMainRow]
    all_equal: bool

    def to_json(self) -> dict:
        return {
            "params": {"r": self.params.r, "p": self.params.p, "n": self.params.n},
            "all_equal": self.all_equal,
            "rows": [
                {
                    "orbit": [list(map(list, s)) for s in [row.shape]][0],
                    "u": row.u,
                    "b": row.b,
                    "descents": list(row.descent_class.des),
                    "colors": list(row.descent_class.colors),
                    "lhs": str(row.lhs),
                    "rhs": row.rhs,
                    "integral": row.integral,
                    "equal": row.equal,
                }
                for row in self.rows
            ],
        }


def theorem_main_report(params: GroupParams) -> TheoremMainReport:
    """Compare <chi^shape restricted, char R_(D,C)> with u * #(n-orbital tableaux).

    The left side is computed from the character table and the straightening
    characters; the right side counts standard tableaux over the orbit whose
    largest entry lies in the first d components, bucketed by (Des, Col).
    """
    table = character_table(params.r, params.n)
    rdc = coinv.rdc_character_table(params)
    h_elems = core.enumerate_elements(params, "H")
    zero_char = {h: Cyclotomic.zero(params.r) for h in h_elems}
    rows: list[TheoremMainRow] = []
    for o in shape_orbits(params):
        rep = o.members[0]
        chi = restricted_character(rep, params, table)
        for mate in o.members[1:]:
            assert restricted_character(mate, params, table) == chi, \
                "restriction must agree across the orbit"
        counts: dict[DescentClass, int] = {}
        for t in tabx.enumerate_osyt_n(o, params):
            s = tabx.tableau_stats(t)
            dc = DescentClass(s.des, s.colors)
            counts[dc] = counts.get(dc, 0) + 1
        classes = sorted(set(rdc) | set(counts), key=DescentClass.sort_key)
        for dc in classes:
            char = rdc.get(dc, zero_char)
            val = inner_product_H(chi, char, params)
            integral = val.is_rational_integer() and val.rational_value() >= 0
            lhs = val.rational_value() if val.is_rational() else val
            rhs = o.u * counts.get(dc, 0)
            rows.append(
                TheoremMainRow(rep, o.b, o.u, dc, lhs, rhs, integral, integral and lhs == rhs)
            )
    return TheoremMainReport(params, rows, all(r.equal for r in rows))


def stembridge_graded(params: GroupParams, shape: RPartition) -> SparsePoly:
    """Graded multiplicity sum_k <chi^shape restricted, char R_k> q^k.

    char R_k sums the colored-descent characters over classes at level k.
    """
    table = character_table(params.r, params.n)
    rdc = coinv.rdc_character_table(params)
    chi = restricted_character(shape, params, table)
    h_elems = core.enumerate_elements(params, "H")
    by_level: dict[int, dict[ColoredPerm, Cyclotomic]] = {}
    for dc, char in rdc.items():
        level = dc.level(params.r)
        if level not in by_level:
            by_level[level] = {h: Cyclotomic.zero(params.r) for h in h_elems}
        acc = by_level[level]
        for h, v in char.items():
            acc[h] = acc[h] + v
    terms: dict[tuple[int, ...], Fraction] = {}
    for level, char in sorted(by_level.items()):
        val = inner_product_H(chi, char, params)
        assert val.is_rational_integer() and val.rational_value() >= 0
        if val.rational_value():
            terms[(level,)] = val.rational_value()
    return SparsePoly(1, terms)
