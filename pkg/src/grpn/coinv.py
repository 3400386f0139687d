"""Descent-basis monomials, straightening modulo the invariant ideal, and the
graded characters of the colored-descent representations.

The coinvariant algebra of H = G(r,p,n) is C[x_1..x_n] modulo the ideal
generated by e_j(x_1^r,..,x_n^r) for j < n together with (x_1...x_n)^d.  Its
descent basis is {x_gamma : gamma in Gamma} with x_gamma = prod x_sigma(i)^f_i.
`straighten` rewrites an arbitrary monomial in this basis by repeatedly
expanding theta_mu * x_gamma products; the recursion strictly descends in the
dominance-refined monomial order, which we guard with a fuel counter rather
than materializing the order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import core
from .core import ColoredPerm, GroupParams, stats
from .errors import (
    FuelExhausted,
    InternalNonIntegral,
    InvalidClass,
    NotInGamma,
    ZeroInQuotient,
)
from .exactnum import Cyclotomic, zeta_pow
from .partitions import conjugate, trim
from .poly import SparsePoly, cyclotomic_ring

DEFAULT_FUEL = 10**6

Monomial = tuple[int, ...]  # exponent vector over x_1..x_n


def exponent_partition(exps: Monomial) -> tuple[int, ...]:
    return tuple(sorted(exps, reverse=True))


def act_monomial(g: ColoredPerm, exps: Monomial) -> tuple[Cyclotomic, Monomial]:
    """Apply x_i -> zeta^(c_sigma(i)) x_sigma(i) to a monomial.

    Returns (scalar, image monomial); the image has the same exponent partition.
    """
    n, r = g.params.n, g.params.r
    out = [0] * n
    phase = 0
    for i in range(n):
        a = exps[i]
        if a:
            target = g.window[i]
            out[target - 1] = a
            phase += a * g.colors[target - 1]
    return zeta_pow(r, phase), tuple(out)


def descent_basis_monomial(gamma: ColoredPerm) -> Monomial:
    """x_gamma: the exponent of x_sigma(i) is f_i(gamma)."""
    if not gamma.in_Gamma():
        raise NotInGamma(f"{gamma!r} has last color >= d")
    return _monomial_of(gamma)


def _monomial_of(g: ColoredPerm) -> Monomial:
    f = stats(g).f_vector
    exps = [0] * g.params.n
    for i, v in enumerate(g.window):
        exps[v - 1] = f[i]
    return tuple(exps)


def colored_index_permutation(exps: Monomial, params: GroupParams) -> ColoredPerm:
    """The unique gamma with sorted exponents a_sigma(i), ties by smaller index,
    and colors congruent to the exponents mod r."""
    if all(e >= params.d for e in exps):
        raise ZeroInQuotient(f"every exponent of {exps} is >= d = {params.d}")
    return _index_permutation(exps, params)


def _index_permutation(exps: Monomial, params: GroupParams) -> ColoredPerm:
    order = sorted(range(1, params.n + 1), key=lambda v: (-exps[v - 1], v))
    window = tuple(order)
    colors = tuple(exps[v - 1] % params.r for v in order)
    return ColoredPerm(params, window, colors)


def complementary_partition(exps: Monomial, params: GroupParams) -> tuple[int, ...]:
    """mu(M): conjugate of the r-scaled gap sequence between M and x_gamma(M)."""
    gamma = colored_index_permutation(exps, params)
    f = stats(gamma).f_vector
    gaps = []
    for i in range(params.n - 1):
        gap = exps[gamma.window[i] - 1] - f[i]
        if gap < 0 or gap % params.r != 0:
            raise InternalNonIntegral(
                f"gap {gap} at position {i + 1} is not a nonnegative multiple of r"
            )
        gaps.append(gap // params.r)
    if any(a < b for a, b in zip(gaps, gaps[1:])):
        raise InternalNonIntegral(f"gap sequence {gaps} is not weakly decreasing")
    return conjugate(trim(gaps))


def _theta_expansion(gamma_exps: Monomial, mu: tuple[int, ...], params: GroupParams) -> dict:
    """Expand theta_mu * x_gamma as a monomial dict (integer coefficients).

    theta_mu is the product of elementary symmetric polynomials e_(mu_t) in
    x_1^r .. x_n^r; every part of mu is at most n-1.
    """
    n, r = params.n, params.r
    out = {gamma_exps: 1}
    for part in mu:
        assert part <= n - 1, "complementary partition parts stay below n"
        nxt: dict[Monomial, int] = {}
        for subset in itertools.combinations(range(n), part):
            for exps, coeff in out.items():
                e = list(exps)
                for i in subset:
                    e[i] += r
                key = tuple(e)
                nxt[key] = nxt.get(key, 0) + coeff
        out = nxt
    return out


def straighten_step(exps: Monomial, params: GroupParams):
    """One straightening step: M = theta_mu(M) * x_gamma(M) - sum(remainder).

    Returns (gamma(M), mu(M), remainder) where remainder maps monomials to the
    integer coefficients they carry in theta_mu * x_gamma minus M itself.  The
    relation holds exactly in C[x].
    """
    gamma = colored_index_permutation(exps, params)
    mu = complementary_partition(exps, params)
    if not mu:
        return gamma, mu, {}
    expansion = _theta_expansion(_monomial_of(gamma), mu, params)
    lead = expansion.pop(exps)
    assert lead == 1, "the canonical term appears exactly once"
    return gamma, mu, expansion


_STRAIGHTEN_CACHE: dict[tuple[GroupParams, Monomial], dict[ColoredPerm, int]] = {}


def straighten(exps: Monomial, params: GroupParams, fuel: int = DEFAULT_FUEL) -> dict[ColoredPerm, int]:
    """The class of a monomial in the descent basis of C[x]_H.

    Monomials with every exponent >= d are theta_n multiples and map to zero.
    Output coefficients are (nonzero) integers; the expansion is homogeneous.
    """
    budget = [fuel]
    return _straighten(tuple(exps), params, budget)


def _straighten(exps: Monomial, params: GroupParams, budget: list) -> dict[ColoredPerm, int]:
    key = (params, exps)
    hit = _STRAIGHTEN_CACHE.get(key)
    if hit is not None:
        return hit
    budget[0] -= 1
    if budget[0] < 0:
        raise FuelExhausted("straightening exceeded its reduction budget")
    if all(e >= params.d for e in exps):
        result: dict[ColoredPerm, int] = {}
    else:
        gamma, mu, remainder = straighten_step(exps, params)
        if not mu:
            result = {gamma: 1}
        else:
            acc: dict[ColoredPerm, int] = {}
            for sub_exps, coeff in remainder.items():
                for g, c in _straighten(sub_exps, params, budget).items():
                    acc[g] = acc.get(g, 0) - coeff * c
            result = {g: c for g, c in acc.items() if c != 0}
    _STRAIGHTEN_CACHE[key] = result
    return result


# -- colored-descent representations ------------------------------------------------


@dataclass(frozen=True)
class DescentClass:
    des: tuple[int, ...]
    colors: tuple[int, ...]

    def level(self, r: int) -> int:
        """fmaj of every member: r * sum(D) + sum(C)."""
        return r * sum(self.des) + sum(self.colors)

    def sort_key(self):
        return (self.des, self.colors)


def descent_class_of(gamma: ColoredPerm) -> DescentClass:
    return DescentClass(stats(gamma).des, gamma.colors)


def lambda_DC(dc: DescentClass, params: GroupParams) -> tuple[int, ...]:
    lam_d = [sum(1 for j in dc.des if j >= i) for i in range(1, params.n + 1)]
    return tuple(params.r * a + c for a, c in zip(lam_d, dc.colors))


def validate_class(dc: DescentClass, params: GroupParams) -> None:
    n, r, d = params.n, params.r, params.d
    if len(dc.colors) != n:
        raise InvalidClass(f"color vector length {len(dc.colors)} != {n}")
    if any(not 0 <= c < r for c in dc.colors[:-1]) or not 0 <= dc.colors[-1] < d:
        raise InvalidClass(f"colors {dc.colors} out of range for (r, d) = ({r}, {d})")
    if list(dc.des) != sorted(set(dc.des)) or any(not 1 <= i <= n - 1 for i in dc.des):
        raise InvalidClass(f"descent set {dc.des} is not a subset of [1, {n - 1}]")
    lam = lambda_DC(dc, params)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InvalidClass(f"lambda_(D,C) = {lam} is not weakly decreasing")


@cache
def descent_classes(params: GroupParams) -> dict[DescentClass, tuple[ColoredPerm, ...]]:
    """The realized descent classes of Gamma, each with its members."""
    buckets: dict[DescentClass, list[ColoredPerm]] = {}
    for gamma in core.enumerate_elements(params, "Gamma"):
        buckets.setdefault(descent_class_of(gamma), []).append(gamma)
    return {dc: tuple(buckets[dc]) for dc in sorted(buckets, key=DescentClass.sort_key)}


@cache
def rdc_character_table(params: GroupParams) -> dict[DescentClass, dict[ColoredPerm, Cyclotomic]]:
    """Characters of every colored-descent representation, element by element.

    The value at h is the sum over gamma in the class of the diagonal
    coefficient of straighten(h . x_gamma); triangularity of the action makes
    this the trace on the subquotient R_(D,C).
    """
    classes = descent_classes(params)
    h_elems = core.enumerate_elements(params, "H")
    zero = Cyclotomic.zero(params.r)
    table = {dc: {h: zero for h in h_elems} for dc in classes}
    for h in h_elems:
        for dc, gammas in classes.items():
            val = zero
            for gamma in gammas:
                scalar, image = act_monomial(h, descent_basis_monomial(gamma))
                coeff = straighten(image, params).get(gamma, 0)
                if coeff:
                    val = val + scalar * coeff
            table[dc][h] = val
    return table


def character_RDC(dc: DescentClass, params: GroupParams) -> dict[ColoredPerm, Cyclotomic]:
    """The character of R_(D,C) as a map on the elements of H."""
    validate_class(dc, params)
    table = rdc_character_table(params)
    if dc in table:
        return table[dc]
    zero = Cyclotomic.zero(params.r)
    return {h: zero for h in core.enumerate_elements(params, "H")}


# -- graded series -------------------------------------------------------------------


def hilbert_series(params: GroupParams) -> SparsePoly:
    """Sum of q^fmaj over Gamma (the Hilbert series of the coinvariant algebra)."""
    terms: dict[tuple[int, ...], int] = {}
    for gamma in core.enumerate_elements(params, "Gamma"):
        k = (stats(gamma).fmaj,)
        terms[k] = terms.get(k, 0) + 1
    return SparsePoly(1, terms)


def trace_polynomial_ring(h: ColoredPerm, cap: int) -> SparsePoly:
    """Graded trace of h on C[x], truncated to total degree <= cap.

    Sums <h . M, M> q^lambda(M) over all monomials M of degree at most cap;
    output exponent vectors are weakly decreasing (exponent partitions).
    """
    n = h.params.n
    ring = cyclotomic_ring(h.params.r)
    terms: dict[tuple[int, ...], Cyclotomic] = {}
    for exps in itertools.product(range(cap + 1), repeat=n):
        if sum(exps) > cap:
            continue
        scalar, image = act_monomial(h, exps)
        if image != exps:
            continue
        key = exponent_partition(exps)
        terms[key] = terms.get(key, ring.zero()) + scalar
    return SparsePoly(n, terms, ring)


def trace_coinvariant_algebra(h: ColoredPerm) -> SparsePoly:
    """Graded trace of h on C[x]_H via straightening diagonal coefficients.

    Sums <h . x_gamma, x_gamma> q^lambda(x_gamma) over gamma in Gamma, where
    the inner product makes the descent basis orthonormal.
    """
    params = h.params
    ring = cyclotomic_ring(params.r)
    terms: dict[tuple[int, ...], Cyclotomic] = {}
    for gamma in core.enumerate_elements(params, "Gamma"):
        x_gamma = descent_basis_monomial(gamma)
        scalar, image = act_monomial(h, x_gamma)
        coeff = straighten(image, params).get(gamma, 0)
        if coeff:
            key = exponent_partition(x_gamma)
            terms[key] = terms.get(key, ring.zero()) + scalar * coeff
    return SparsePoly(params.n, terms, ring)
