"""Sparse multivariate polynomials with exact coefficients and truncation.

Terms are keyed by exponent tuples; coefficients live in a pluggable exact
ring (rationals or a fixed cyclotomic field).  A :class:`TruncationContext`
caps either the total degree or the exponent of one designated variable, and
truncated products agree with truncations of exact products because exponents
only grow under multiplication.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import NonUnitConstantTerm, RingMismatch, VariableCountMismatch
from .exactnum import Cyclotomic


@dataclass(frozen=True)
class CoefficientRing:
    kind: str  # "rational" | "cyclotomic"
    order: int = 0

    def zero(self):
        if self.kind == "rational":
            return Fraction(0)
        return Cyclotomic.zero(self.order)

    def one(self):
        if self.kind == "rational":
            return Fraction(1)
        return Cyclotomic.one(self.order)

    def coerce(self, value):
        if self.kind == "rational":
            if isinstance(value, Cyclotomic):
                return value.rational_value()
            return Fraction(value)
        if isinstance(value, Cyclotomic):
            if value.order != self.order:
                raise RingMismatch(f"cyclotomic orders {value.order} != {self.order}")
            return value
        return Cyclotomic.from_rational(self.order, value)


RATIONAL = CoefficientRing("rational")


def cyclotomic_ring(order: int) -> CoefficientRing:
    return CoefficientRing("cyclotomic", order)


@dataclass(frozen=True)
class TruncationContext:
    """Degree cap: total degree, or the exponent of one designated variable."""

    total_cap: Optional[int] = None
    var: Optional[int] = None
    var_cap: Optional[int] = None

    def keeps(self, exponents: tuple[int, ...]) -> bool:
        if self.total_cap is not None and sum(exponents) > self.total_cap:
            return False
        if self.var is not None and exponents[self.var] > self.var_cap:
            return False
        return True

    def weight(self, exponents: tuple[int, ...]) -> int:
        """How much this term advances toward the cap (for termination checks)."""
        w = None
        if self.total_cap is not None:
            w = sum(exponents)
        if self.var is not None:
            vw = exponents[self.var]
            w = vw if w is None else min(w, vw)
        if w is None:
            raise ValueError("truncation context has no cap")
        return w


class SparsePoly:
    """Immutable-by-convention sparse polynomial over an exact ring."""

    __slots__ = ("nvars", "ring", "terms")

    def __init__(self, nvars: int, terms=None, ring: CoefficientRing = RATIONAL):
        self.nvars = nvars
        self.ring = ring
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise VariableCountMismatch(f"term {exps} in {nvars} variables")
            coeff = ring.coerce(coeff)
            if coeff != 0:
                clean[exps] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int, ring: CoefficientRing = RATIONAL) -> "SparsePoly":
        return SparsePoly(nvars, {}, ring)

    @staticmethod
    def constant(nvars: int, value, ring: CoefficientRing = RATIONAL) -> "SparsePoly":
        return SparsePoly(nvars, {(0,) * nvars: value}, ring)

    @staticmethod
    def monomial(exps: Iterable[int], coeff=1, ring: CoefficientRing = RATIONAL) -> "SparsePoly":
        exps = tuple(exps)
        return SparsePoly(len(exps), {exps: coeff}, ring)

    @staticmethod
    def variable(i: int, nvars: int, ring: CoefficientRing = RATIONAL) -> "SparsePoly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return SparsePoly(nvars, {exps: 1}, ring)

    def to_ring(self, ring: CoefficientRing) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: ring.coerce(c) for e, c in self.terms.items()}, ring)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Iterable[int]):
        return self.terms.get(tuple(exps), self.ring.zero())

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def leading_term(self):
        """Graded-lexicographically greatest term as (exponents, coefficient)."""
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise VariableCountMismatch(f"{self.nvars} != {other.nvars}")
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} != {other.ring}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, self.ring.zero()) + c
        return SparsePoly(self.nvars, terms, self.ring)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, value) -> "SparsePoly":
        value = self.ring.coerce(value)
        return SparsePoly(self.nvars, {e: c * value for e, c in self.terms.items()}, self.ring)

    def mul(self, other: "SparsePoly", ctx: Optional[TruncationContext] = None) -> "SparsePoly":
        self._check(other)
        terms: dict[tuple[int, ...], object] = {}
        zero = self.ring.zero()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if ctx is not None and not ctx.keeps(e):
                    continue
                terms[e] = terms.get(e, zero) + c1 * c2
        return SparsePoly(self.nvars, terms, self.ring)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        return self.mul(other)

    def __pow__(self, k: int) -> "SparsePoly":
        acc = SparsePoly.constant(self.nvars, 1, self.ring)
        for _ in range(k):
            acc = acc * self
        return acc

    def truncate(self, ctx: TruncationContext) -> "SparsePoly":
        return SparsePoly(
            self.nvars, {e: c for e, c in self.terms.items() if ctx.keeps(e)}, self.ring
        )

    def evaluate(self, point: Iterable):
        """Evaluate at a tuple of scalars (exact)."""
        point = list(point)
        if len(point) != self.nvars:
            raise VariableCountMismatch(f"point length {len(point)} != {self.nvars}")
        total = self.ring.zero()
        for e, c in self.terms.items():
            val = c
            for x, a in zip(point, e):
                if a:
                    val = val * (self.ring.coerce(x) ** a)
            total = total + val
        return total

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return format_poly(self)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for e, c in sorted(self.terms.items()):
            coeff = str(c) if isinstance(c, Fraction) else c.to_json()
            terms.append({"exp": list(e), "coeff": coeff})
        return {"vars": self.nvars, "terms": terms}

    @staticmethod
    def from_json(data: dict, ring: CoefficientRing = RATIONAL) -> "SparsePoly":
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            coeff = Cyclotomic.from_json(c) if isinstance(c, dict) else Fraction(c)
            terms[tuple(t["exp"])] = coeff
        return SparsePoly(data["vars"], terms, ring)


# -- text format -------------------------------------------------------------

_TERM_RE = re.compile(r"^\s*(?P<coeff>[^*]+?)\s*(\*\s*(?P<vars>.+))?\s*$")
_VAR_RE = re.compile(r"^x(?P<idx>\d+)(\^(?P<exp>\d+))?$")


def format_poly(p: SparsePoly) -> str:
    """Render as ``c * x1^a1 x2^a2`` terms joined by `` + ``."""
    if p.is_zero():
        return "0"
    chunks = []
    for exps, coeff in p.sorted_terms():
        vars_part = " ".join(
            f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(exps) if a
        )
        cs = str(coeff) if isinstance(coeff, Fraction) else f"[{';'.join(str(c) for c in coeff.coeffs)}]"
        chunks.append(f"{cs} * {vars_part}" if vars_part else cs)
    return " + ".join(chunks)


def parse_poly(text: str, nvars: int, ring: CoefficientRing = RATIONAL) -> SparsePoly:
    terms: dict[tuple[int, ...], object] = {}
    if text.strip() == "0":
        return SparsePoly.zero(nvars, ring)
    for chunk in text.split(" + "):
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad term: {chunk!r}")
        cs = m.group("coeff").strip()
        if cs.startswith("["):
            coeff = Cyclotomic(ring.order, [Fraction(c) for c in cs[1:-1].split(";")])
        else:
            coeff = Fraction(cs)
        exps = [0] * nvars
        if m.group("vars"):
            for v in m.group("vars").split():
                vm = _VAR_RE.match(v)
                if not vm:
                    raise ValueError(f"bad variable token: {v!r}")
                exps[int(vm.group("idx")) - 1] += int(vm.group("exp") or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, ring.zero()) + ring.coerce(coeff)
    return SparsePoly(nvars, terms, ring)


# -- q-integers and series helpers --------------------------------------------


def q_integer(k: int) -> SparsePoly:
    """[k]_q = 1 + q + ... + q^(k-1) in one variable; [0]_q = 0."""
    return SparsePoly(1, {(i,): 1 for i in range(k)})


def geometric_inverse(f: SparsePoly, ctx: TruncationContext) -> SparsePoly:
    """Inverse of a polynomial with constant term 1, modulo the truncation cap."""
    one = SparsePoly.constant(f.nvars, 1, f.ring)
    if f.constant_term() != f.ring.one():
        raise NonUnitConstantTerm(f"constant term {f.constant_term()!r}")
    g = (one - f).truncate(ctx)
    for e in g.terms:
        if ctx.weight(e) == 0:
            raise ValueError(f"term {e} never reaches the truncation cap; series would not terminate")
    acc = one
    power = one
    while True:
        power = power.mul(g, ctx)
        if power.is_zero():
            return acc
        acc = acc + power


def poly_to_json_str(p: SparsePoly) -> str:
    return json.dumps(p.to_json(), sort_keys=True)
