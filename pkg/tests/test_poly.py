from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grpn.errors import NonUnitConstantTerm, RingMismatch, VariableCountMismatch
from grpn.exactnum import zeta_pow
from grpn.poly import (
    RATIONAL,
    SparsePoly,
    TruncationContext,
    cyclotomic_ring,
    format_poly,
    geometric_inverse,
    parse_poly,
    q_integer,
)


def test_binomial_square():
    one_plus_q = SparsePoly(1, {(0,): 1, (1,): 1})
    sq = one_plus_q * one_plus_q
    assert sq == SparsePoly(1, {(0,): 1, (1,): 2, (2,): 1})


def test_additive_identity():
    m = SparsePoly.monomial((1, 1))
    assert m + SparsePoly.zero(2) == m


def test_truncated_cube():
    one_plus_q = SparsePoly(1, {(0,): 1, (1,): 1})
    ctx = TruncationContext(total_cap=2)
    cube = one_plus_q.mul(one_plus_q, ctx).mul(one_plus_q, ctx)
    assert cube == SparsePoly(1, {(0,): 1, (1,): 3, (2,): 3})
    # truncated product of truncated inputs equals truncation of the exact product
    exact = (one_plus_q**3).truncate(ctx)
    assert cube == exact


def test_q_integer():
    assert q_integer(0).is_zero()
    assert q_integer(1) == SparsePoly(1, {(0,): 1})
    assert q_integer(2) == SparsePoly(1, {(0,): 1, (1,): 1})
    assert q_integer(4).evaluate([1]) == 4


def test_q_integer_product_at_one():
    for a in range(5):
        for b in range(5):
            assert (q_integer(a) * q_integer(b)).evaluate([1]) == a * b


def test_geometric_inverse_one_variable():
    f = SparsePoly(1, {(0,): 1, (1,): -1})  # 1 - q
    inv = geometric_inverse(f, TruncationContext(total_cap=3))
    assert inv == SparsePoly(1, {(0,): 1, (1,): 1, (2,): 1, (3,): 1})
    assert f.mul(inv, TruncationContext(total_cap=3)) == SparsePoly.constant(1, 1)


def test_geometric_inverse_var_cap():
    # f = 1 - t^2 q^2 capped at t-degree 3: only t^0 and t^2 survive
    f = SparsePoly(2, {(0, 0): 1, (2, 2): -1})
    inv = geometric_inverse(f, TruncationContext(var=0, var_cap=3))
    assert inv == SparsePoly(2, {(0, 0): 1, (2, 2): 1})


def test_geometric_inverse_trivial_and_errors():
    one = SparsePoly.constant(2, 1)
    assert geometric_inverse(one, TruncationContext(total_cap=5)) == one
    with pytest.raises(NonUnitConstantTerm):
        geometric_inverse(SparsePoly(1, {(0,): 2}), TruncationContext(total_cap=2))


def test_mismatch_errors():
    with pytest.raises(VariableCountMismatch):
        SparsePoly.zero(2) + SparsePoly.zero(3)
    with pytest.raises(RingMismatch):
        SparsePoly.zero(2) + SparsePoly.zero(2, cyclotomic_ring(4))


def test_cyclotomic_coefficients():
    ring = cyclotomic_ring(3)
    p = SparsePoly(1, {(1,): zeta_pow(3, 1)}, ring)
    q = SparsePoly(1, {(1,): zeta_pow(3, 2)}, ring)
    assert p * q == SparsePoly(1, {(2,): 1}, ring)


def test_leading_term_graded_lex():
    p = SparsePoly(2, {(0, 3): 1, (2, 1): 5, (3, 0): 2})
    assert p.leading_term() == ((3, 0), Fraction(2))


def test_json_round_trip():
    p = SparsePoly(3, {(1, 0, 2): Fraction(3, 2), (0, 0, 0): -1})
    assert SparsePoly.from_json(p.to_json()) == p
    ring = cyclotomic_ring(5)
    q = SparsePoly(2, {(1, 1): zeta_pow(5, 2)}, ring)
    assert SparsePoly.from_json(q.to_json(), ring) == q


@st.composite
def rational_polys(draw):
    nvars = draw(st.integers(min_value=1, max_value=3))
    nterms = draw(st.integers(min_value=0, max_value=6))
    terms = {}
    for _ in range(nterms):
        exps = tuple(draw(st.integers(min_value=0, max_value=5)) for _ in range(nvars))
        terms[exps] = draw(st.fractions(min_value=-9, max_value=9, max_denominator=7))
    return SparsePoly(nvars, terms)


@settings(max_examples=80, deadline=None)
@given(rational_polys())
def test_text_round_trip(p):
    assert parse_poly(format_poly(p), p.nvars) == p


@settings(max_examples=40, deadline=None)
@given(rational_polys(), rational_polys(), rational_polys())
def test_truncated_multiplication_associative(a, b, c):
    n = max(a.nvars, b.nvars, c.nvars)

    def pad(p):
        return SparsePoly(n, {e + (0,) * (n - p.nvars): co for e, co in p.terms.items()})

    a, b, c = pad(a), pad(b), pad(c)
    ctx = TruncationContext(total_cap=6)
    assert a.mul(b, ctx).mul(c, ctx) == a.mul(b.mul(c, ctx), ctx)
