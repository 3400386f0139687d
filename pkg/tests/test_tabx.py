import itertools

import pytest

from grpn.core import GroupParams
from grpn.errors import NonIntegralDelta, ShapeMismatch
from grpn.partitions import partitions
from grpn.tabx import (
    RSSTableau,
    RTableau,
    count_r_partitions,
    entries_partition,
    enumerate_osyt_n,
    enumerate_r_partitions,
    enumerate_rssyt,
    enumerate_syt,
    orbit,
    phi_lambda,
    phi_lambda_inverse,
    shape_total,
    shift_shape,
    shift_tableau,
    tableau_stats,
)


# -- r-partitions -----------------------------------------------------------------


def test_r_partitions_r1():
    assert enumerate_r_partitions(1, 3) == [((1, 1, 1),), ((2, 1),), ((3,),)]


def test_r_partitions_bipartitions_of_2():
    # direct double-loop oracle
    expected = set()
    for a in range(3):
        for lam in partitions(a):
            for mu in partitions(2 - a):
                expected.add((lam, mu))
    got = enumerate_r_partitions(2, 2)
    assert set(got) == expected
    assert len(got) == 5  # the five irreducibles of B_2


def test_r_partitions_empty():
    assert enumerate_r_partitions(2, 0) == [((), ())]


def test_r_partition_count_by_generating_function():
    # coefficient of x^n in (sum_k p(k) x^k)^r, via explicit convolution
    def gf_count(r, n):
        base = [len(partitions(k)) for k in range(n + 1)]
        acc = [1] + [0] * n
        for _ in range(r):
            acc = [sum(acc[j] * base[k - j] for j in range(k + 1)) for k in range(n + 1)]
        return acc[n]

    for r in (1, 2, 3, 4):
        for n in (0, 1, 2, 3, 4):
            assert len(enumerate_r_partitions(r, n)) == gf_count(r, n)
            assert count_r_partitions(r, n) == gf_count(r, n)


# -- shifts and orbits -------------------------------------------------------------


def test_shift_shape_example():
    shape = ((1,), (2,), (2, 1), (1, 1), (3, 1), (2,))
    assert shift_shape(shape, 1) == ((2,), (1,), (2,), (2, 1), (1, 1), (3, 1))


def test_shift_is_periodic():
    for shape in enumerate_r_partitions(3, 3):
        assert shift_shape(shape, 3) == shape
        assert shift_shape(shift_shape(shape, 1), 2) == shape


def test_shift_tableau_carries_cells():
    t = RTableau((((1, 2),), ()))
    assert shift_tableau(t) == RTableau(((), ((1, 2),)))


def test_orbit_examples():
    o = orbit(((1,), (1,)), 2)
    assert o.members == (((1,), (1,)),) and o.b == 1 and o.u == 2
    o = orbit(((2,), ()), 2)
    assert set(o.members) == {((2,), ()), ((), (2,))} and o.b == 2 and o.u == 1
    o = orbit(((2,), (1,), ()), 1)
    assert o.b == 1 and o.u == 1


def test_orbit_sizes_sum_to_shape_count():
    for r, p, n in [(2, 2, 2), (2, 2, 3), (4, 2, 2), (6, 3, 2)]:
        shapes = enumerate_r_partitions(r, n)
        seen = set()
        total = 0
        for shape in shapes:
            if shape in seen:
                continue
            o = orbit(shape, p)
            seen.update(o.members)
            total += o.b
        assert total == len(shapes)


# -- standard tableaux ---------------------------------------------------------------


def test_syt_two_singletons():
    shape = ((1,), (1,))
    tabs = enumerate_syt(shape)
    assert len(tabs) == 2
    first = RTableau((((1,),), ((2,),)))
    s = tableau_stats(first)
    # 2 sits in the later component, hence strictly below 1
    assert s.des == (1,)
    assert s.f_vector == (2, 1)
    assert s.fmaj == 3


def test_syt_single_row():
    shape = ((4,),)
    tabs = enumerate_syt(shape)
    assert len(tabs) == 1
    s = tableau_stats(tabs[0])
    assert s.des == () and s.fmaj == 0


def test_syt_hook_count():
    # hook-length oracle: f^(2,1) = 3! / (3*1*1) = 2
    assert len(enumerate_syt(((2, 1),))) == 2


def test_syt_count_multinomial():
    # distributing entries over components: n! / prod |comp|! * prod f^comp
    shape = ((1,), (2,))
    assert len(enumerate_syt(shape)) == 3
    shape = ((1,), (1,), (1,))
    assert len(enumerate_syt(shape)) == 6


def test_syt_are_standard():
    for shape in enumerate_r_partitions(2, 4):
        for t in enumerate_syt(shape):
            assert t.shape() == shape
            assert sorted(v for comp in t.components for row in comp for v in row) == list(
                range(1, shape_total(shape) + 1)
            )


# -- n-orbital tableaux ----------------------------------------------------------------


def test_osyt_222_example():
    params = GroupParams(2, 2, 2)
    o = orbit(((1,), (1,)), 2)
    tabs = enumerate_osyt_n(o, params)
    assert len(tabs) == 1
    t = tabs[0]
    assert t == RTableau((((2,),), ((1,),)))
    s = tableau_stats(t)
    assert s.des == () and s.colors == (1, 0) and s.fmaj == 1


def test_osyt_single_row_qualifies():
    params = GroupParams(4, 2, 3)
    o = orbit(((3,), (), (), ()), 2)
    tabs = enumerate_osyt_n(o, params)
    assert RTableau((((1, 2, 3),), (), (), ())) in tabs


def test_osyt_p1_is_all_syt():
    params = GroupParams(3, 1, 3)
    shape = ((2,), (1,), ())
    o = orbit(shape, 1)
    assert len(enumerate_osyt_n(o, params)) == len(enumerate_syt(shape))


# -- reverse semi-standard tableaux -------------------------------------------------------


def test_rssyt_single_cell():
    tabs = enumerate_rssyt(((1,),), 3)
    assert len(tabs) == 3
    assert {t.components[0][0][0] for t in tabs} == {1, 2, 3}


def test_rssyt_residue_condition():
    tabs = enumerate_rssyt(((), (1,)), 4)
    assert {t.components[1][0][0] for t in tabs} == {2, 4}


def test_rssyt_strict_columns():
    tabs = enumerate_rssyt(((1, 1),), 2)
    assert len(tabs) == 1
    assert tabs[0].components[0] == ((2,), (1,))


def test_rssyt_monotonicity():
    for t in enumerate_rssyt(((2, 1), (1,)), 7):
        for comp in t.components:
            for row in comp:
                assert all(a >= b for a, b in zip(row, row[1:]))
            for r1, r2 in zip(comp, comp[1:]):
                assert all(a > b for a, b in zip(r1, r2))


# -- the bijection phi ----------------------------------------------------------------------


def section9_tableau() -> RSSTableau:
    """The worked r=3, n=11 reverse tableau with entries partition
    (14,14,10,9,9,8,7,6,5,3,3), reconstructed from the stated data."""
    return RSSTableau(
        (
            ((10,), (7,)),
            ((14, 14), (8, 5)),
            ((9, 9, 3), (6,), (3,)),
        )
    )


def test_phi_lambda_section9_example():
    t = section9_tableau()
    assert entries_partition(t) == (14, 14, 10, 9, 9, 8, 7, 6, 5, 3, 3)
    std, delta = phi_lambda(t)
    s = tableau_stats(std)
    assert s.des == (3, 7, 9)
    assert s.f_vector == (10, 10, 9, 8, 8, 7, 6, 5, 4, 2, 2)
    assert delta == (0, 1) + (0,) * 9
    assert phi_lambda_inverse(std, delta) == t


def test_phi_lambda_single_cell():
    t = RSSTableau((((1,),),))
    std, delta = phi_lambda(t)
    assert delta == (0,)
    assert std == RTableau((((1,),),))


def test_phi_round_trip_exhaustive():
    for r in (1, 2, 3):
        bound = 2 * r + 1
        for n in (1, 2, 3):
            for shape in enumerate_r_partitions(r, n):
                for t in enumerate_rssyt(shape, bound):
                    std, delta = phi_lambda(t)
                    assert std.shape() == shape
                    assert phi_lambda_inverse(std, delta) == t
                    # weight identity: theta_i - 1 = f_i + r * sum_(j>=i) delta_j
                    theta = entries_partition(t)
                    f = tableau_stats(std).f_vector
                    for i in range(n):
                        assert theta[i] - 1 == f[i] + r * sum(delta[i:])


def test_phi_inverse_validates_length():
    std = RTableau((((1,),),))
    with pytest.raises(ShapeMismatch):
        phi_lambda_inverse(std, (0, 0))


def test_phi_nonintegral_delta():
    # a malformed reverse tableau for r=2: entries with residues violating the
    # component rule produce non-integral gaps
    bad = RSSTableau((((2,),), ((1,),)))  # component 0 should hold odd entries
    with pytest.raises(NonIntegralDelta):
        phi_lambda(bad)


# -- the shift lemma for tableaux -------------------------------------------------------------


def test_shift_lemma_single_row():
    t = RTableau((((1, 2),), ()))
    f0 = tableau_stats(t).f_vector
    f1 = tableau_stats(shift_tableau(t)).f_vector
    assert f0 == (0, 0) and f1 == (1, 1)


def test_shift_lemma_small_scan():
    for r in (2, 3):
        for n in (2, 3):
            for shape in enumerate_r_partitions(r, n):
                for t in enumerate_syt(shape):
                    if t.position(n)[0] == r - 1:
                        continue
                    f0 = tableau_stats(t).f_vector
                    f1 = tableau_stats(shift_tableau(t)).f_vector
                    assert all(b == a + 1 for a, b in zip(f0, f1))
