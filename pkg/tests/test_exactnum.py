from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grpn.errors import DivisionByZero, OrderMismatch
from grpn.exactnum import Cyclotomic, cyclotomic_polynomial, zeta_pow


# -- independent oracles -----------------------------------------------------


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div_oracle(num, den):
    """Exact division of integer polynomials (monic divisor), brute long division."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i]
        q[i - len(den) + 1] = c
        for j, dc in enumerate(den):
            num[i - len(den) + 1 + j] -= c * dc
    assert all(v == 0 for v in num[: len(den) - 1])
    return q


def reduce_mod(coeffs, phi):
    """Remainder of an integer polynomial modulo a monic integer polynomial."""
    coeffs = list(coeffs)
    while len(coeffs) >= len(phi):
        c = coeffs[-1]
        if c:
            for j, pc in enumerate(phi):
                coeffs[len(coeffs) - len(phi) + j] -= c * pc
        coeffs.pop()
    return coeffs


def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)  # x + 1
    assert cyclotomic_polynomial(4) == (1, 0, 1)  # x^2 + 1


def test_cyclotomic_polynomial_6_against_division_oracle():
    # divide x^6 - 1 by Phi_1 * Phi_2 * Phi_3 independently
    den = poly_mul(poly_mul([-1, 1], [1, 1]), [1, 1, 1])
    num = [-1, 0, 0, 0, 0, 0, 1]
    expected = tuple(poly_div_oracle(num, den))
    assert expected == (1, -1, 1)  # x^2 - x + 1
    assert cyclotomic_polynomial(6) == expected


def test_cyclotomic_polynomial_product_property():
    # prod_{d | r} Phi_d == x^r - 1
    for r in range(1, 16):
        prod = [1]
        for d in range(1, r + 1):
            if r % d == 0:
                prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        expected = [0] * (r + 1)
        expected[0], expected[r] = -1, 1
        assert prod == expected


def test_zeta_pow_basic():
    assert zeta_pow(4, 2) == -1
    for r in range(1, 10):
        assert zeta_pow(r, r) == 1
        assert zeta_pow(r, 0) == 1


def test_zeta6_plus_zeta6_fifth_is_one():
    # oracle: reduce x + x^5 mod Phi_6 = x^2 - x + 1
    reduced = reduce_mod([0, 1, 0, 0, 0, 1], list(cyclotomic_polynomial(6)))
    assert reduced == [1, 0]
    assert zeta_pow(6, 1) + zeta_pow(6, 5) == 1


def test_conjugate_of_i():
    assert zeta_pow(4, 1).conjugate() == zeta_pow(4, 3)


def test_zeta3_times_zeta3_squared():
    assert zeta_pow(3, 1) * zeta_pow(3, 2) == 1


def test_inverse_of_one_plus_i():
    a = 1 + zeta_pow(4, 1)
    inv = a.inverse()
    assert inv == (1 - zeta_pow(4, 1)) * Fraction(1, 2)
    assert a * inv == 1


def test_root_of_unity_sum_vanishes():
    for r in range(2, 13):
        total = Cyclotomic.zero(r)
        for k in range(r):
            total = total + zeta_pow(r, k)
        assert total.is_zero()


def test_order_mismatch_and_zero_division():
    with pytest.raises(OrderMismatch):
        zeta_pow(3, 1) + zeta_pow(4, 1)
    with pytest.raises(DivisionByZero):
        Cyclotomic.zero(5).inverse()


def test_json_round_trip():
    a = zeta_pow(12, 5) * Fraction(3, 7) - 2
    assert Cyclotomic.from_json(a.to_json()) == a


cyclo_elements = st.integers(min_value=2, max_value=12).flatmap(
    lambda r: st.builds(
        lambda coeffs: Cyclotomic(r, coeffs),
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=6),
            min_size=len(cyclotomic_polynomial(r)) - 1,
            max_size=len(cyclotomic_polynomial(r)) - 1,
        ),
    )
)


def same_order_triples():
    def build(r):
        deg = len(cyclotomic_polynomial(r)) - 1
        elem = st.builds(
            lambda coeffs: Cyclotomic(r, coeffs),
            st.lists(
                st.fractions(min_value=-4, max_value=4, max_denominator=6),
                min_size=deg,
                max_size=deg,
            ),
        )
        return st.tuples(elem, elem, elem)

    return st.integers(min_value=1, max_value=12).flatmap(build)


@settings(max_examples=60, deadline=None)
@given(same_order_triples())
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(same_order_triples())
def test_inverse_and_conjugation(triple):
    a, b, _ = triple
    if not a.is_zero():
        assert a * a.inverse() == 1
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


def test_conjugate_fixes_rationals():
    a = Cyclotomic.from_rational(8, Fraction(-5, 3))
    assert a.conjugate() == a
