from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from artifact import partitions as P
from artifact.scalars import L, MotivicScalar
from artifact.symfunc import (GradedSeries, NotInvertibleError, OrderError, PlethysmBaseError,
                              SymFunc, TruncationError, from_schur, gk_diff_op, h, hall_pairing,
                              p, sf_basis_convert, sf_exp, sf_log, sf_partial, sf_plethysm,
                              sf_rank, sf_skew)
from strategies import graded, homogeneous, partitions_upto, symfuncs

t = GradedSeries.t_power


def test_ring_examples():
    assert p(1) * p(1) == p(1, 1)
    assert (p(1) + p(2)) + (p(1) - p(2)) == 2 * p(1)
    f, g = p(1) + L * p(2), p(3) - 1
    assert (f * t(-1)) * (g * t(2)) == (f * g) * t(1)


def test_truncation_drops_high_degrees():
    f = SymFunc.p((1,), N=3)
    assert (f * f * f * f).is_zero()
    assert (f * f).N == 3


def test_adams_examples():
    assert (p(1) + L * p(2)).adams(2) == p(2) + L ** 2 * p(4)
    f = p(1, 1) * t(-1)
    assert f.adams(2) == p(2, 2) * t(-2)
    assert f.adams(2).floor == -2
    with pytest.raises(TruncationError):
        f.adams(2, extend_floor=False)
    assert p(1).adams_mu((2, 1)) == p(2, 1)


def test_plethysm_examples():
    assert sf_plethysm(p(2), p(3)) == p(6)
    f = L * p(2, 1) - p(3) + 2
    assert f.plethysm(p(1)) == f
    assert p(1).plethysm(f - 2) == f - 2
    h2 = h(2)
    expect = (p(1, 1) + 2 * p(2, 1) + p(2, 2) + p(2) + p(4)).scale(Fraction(1, 2))
    assert h2.plethysm(p(1) + p(2)) == expect
    with pytest.raises(PlethysmBaseError):
        p(1).plethysm(p(1) + 1)


def test_skew_examples():
    assert sf_skew((2,), p(2)) == 2
    assert sf_skew((1, 1, 1), h(3)) == 1
    assert sf_skew((), h(3)) == h(3)


def test_partial_examples():
    assert sf_partial(1, p(1, 1)) == 2 * p(1)
    assert sf_partial(2, L * p(2)) == L
    assert h(3).partial(1).partial(1) == p(1)


def test_invert_examples():
    N = 5
    geo = SymFunc({(1,) * k: 1 for k in range(N + 1)}, N)
    assert (1 - SymFunc.p((1,), N=N)).invert() == geo
    f = 1 - SymFunc.p((2,), L, N=6)
    assert f.invert() == SymFunc({(): 1, (2,): L, (2, 2): L ** 2, (2, 2, 2): L ** 3}, 6)
    with pytest.raises(NotInvertibleError):
        (2 + SymFunc.p((1,), N=3)).invert()


def test_schur_examples():
    assert sf_basis_convert(p(1, 1), "schur") == {(2,): 1, (1, 1): 1}
    assert sf_basis_convert(p(2), "schur") == {(2,): 1, (1, 1): -1}
    f = from_schur({(4,): L, (2, 2): -1})
    # character table of S_4 on the class (1^4), (2 1^2), (2^2), (3 1), (4)
    chi22 = {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0}
    expect = L * h(4) - SymFunc({mu: Fraction(c, P.zee(mu)) for mu, c in chi22.items()})
    assert f == expect
    assert f.to_schur() == {(4,): L, (2, 2): -1}


def test_rank_examples():
    assert sf_rank(h(3)) == {3: 1}
    assert sf_rank(L * from_schur({(4,): 1})) == {4: L}
    assert sf_rank(from_schur({(4,): L + 1})) == {4: L + 1}


def test_exp_log_examples():
    assert GradedSeries.zero(4).exp() == 1
    x = (p(1) * t(1)).truncate(5)
    assert x.exp().log() == x
    e = SymFunc.p((1,), N=3).exp()
    expect = 1 + p(1) + (p(1, 1) + p(2)).scale(Fraction(1, 2)) \
        + (p(1, 1, 1) + 3 * p(2, 1) + 2 * p(3)).scale(Fraction(1, 6))
    assert e == expect
    with pytest.raises(OrderError):
        (1 + p(1)).exp()


def test_gk_diff_op_examples():
    assert gk_diff_op(p(1, 1).graded()) == p(1, 1) + t(1)
    assert gk_diff_op(GradedSeries.one()) == 1
    assert gk_diff_op(p(2).graded()) == p(2) + t(1)


# ---------------------------------------------------------------- properties

@given(symfuncs(), symfuncs(), symfuncs())
def test_ring_laws(f, g, k):
    assert (f + g) + k == f + (g + k)
    assert (f * g) * k == f * (g * k)
    assert f * (g + k) == f * g + f * k
    assert f * g == g * f
    assert f - f == 0


@given(graded(cap=4), graded(cap=4), graded(cap=4))
def test_graded_ring_laws(f, g, k):
    assert (f * g) * k == f * (g * k)
    assert f * (g + k) == f * g + f * k


@given(symfuncs(), symfuncs(), st.integers(1, 3), st.integers(1, 3))
def test_adams_ring_hom_and_composition(f, g, j, k):
    assert (f * g).adams(k) == f.adams(k) * g.adams(k)
    assert (f + g).adams(k) == f.adams(k) + g.adams(k)
    assert f.adams(k).adams(j) == f.adams(j * k)
    assert f.adams(1) == f


@given(symfuncs(N=4, max_terms=3), symfuncs(N=4, min_degree=1, max_terms=2),
       symfuncs(N=4, min_degree=1, max_terms=2))
def test_plethysm_associative(f, g, k):
    assert f.plethysm(g).plethysm(k) == f.plethysm(g.plethysm(k))


@given(symfuncs(N=5, min_degree=1), st.integers(1, 4))
def test_pn_plethysm_is_adams(f, n):
    assert SymFunc.p((n,), N=5).plethysm(f) == f.adams(n)


@given(symfuncs(N=6), partitions_upto(3), partitions_upto(3))
def test_skew_composition(f, mu, lam):
    assert f.skew(lam).skew(mu) == f.skew(P.union(mu, lam))
    if len(mu) == 1:
        i = mu[0]
        assert f.skew(mu) == f.partial(i).scale(i)


@given(st.integers(0, 3), partitions_upto(3, 1), st.data())
def test_hall_adjointness(a, mu, data):
    f = data.draw(homogeneous(a))
    g = data.draw(homogeneous(a + sum(mu)))
    assert hall_pairing(SymFunc.p(mu) * f, g) == hall_pairing(f, g.skew(mu))


@given(graded(cap=5, tmin=0, min_weight=1))
def test_exp_log_round_trip(f):
    assert f.exp().log() == f
    F = 1 + f
    assert F.log().exp() == F


@given(graded(cap=4, tmin=0, min_weight=1), graded(cap=4, tmin=0, min_weight=1))
def test_exp_additive(f, g):
    assert (f + g).exp() == f.exp() * g.exp()


@given(symfuncs(N=5))
def test_schur_round_trip(f):
    assert from_schur(f.to_schur(), N=5) == f


@given(symfuncs(N=5, min_degree=1))
def test_invert_defining_property(r):
    f = 1 + r
    assert f * f.invert() == 1


@given(graded(cap=5, tmin=0, min_weight=1))
def test_invert_graded(r):
    f = 1 + r
    assert f * f.invert() == 1


@given(symfuncs(N=5), symfuncs(N=5))
def test_rank_ring_hom(f, g):
    rf, rg, rfg = sf_rank(f), sf_rank(g), sf_rank(f * g)
    for n in range(6):
        conv = sum((comb(n, k) * rf.get(k, 0) * rg.get(n - k, 0) for k in range(n + 1)),
                   MotivicScalar.zero())
        assert rfg.get(n, 0) == conv
    rs = sf_rank(f + g)
    for n in range(6):
        assert rs.get(n, 0) == rf.get(n, 0) + rg.get(n, 0)
