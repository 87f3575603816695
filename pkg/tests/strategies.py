"""Hypothesis strategies for scalars, symmetric functions and 2-partitions."""

from fractions import Fraction

from hypothesis import strategies as st

from artifact import partitions as P
from artifact.scalars import MotivicScalar
from artifact.symfunc import GradedSeries, SymFunc
from artifact.wreath2 import TwoPartition

small_q = st.builds(Fraction, st.integers(-4, 4), st.sampled_from([1, 1, 2, 3]))

_gens = st.sampled_from([("L", 1), ("s", 1), ("s", 2), ("u", 1)])
_key = st.lists(st.tuples(_gens, st.integers(1, 2)), max_size=2).map(
    lambda xs: tuple((name, m, e) for (name, m), e in xs))


@st.composite
def scalars(draw, symbols=True):
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        k = draw(_key)
        if not symbols:
            k = tuple(x for x in k if x[0] == "L")
        terms[k] = draw(small_q)
    return MotivicScalar(terms)


def partitions_upto(n, min_size=0):
    return st.integers(min_size, n).flatmap(lambda k: st.sampled_from(P.partitions(k)))


@st.composite
def symfuncs(draw, N=4, min_degree=0, max_terms=4, symbols=True):
    data = {}
    for _ in range(draw(st.integers(0, max_terms))):
        data[draw(partitions_upto(N, min_degree))] = draw(scalars(symbols))
    return SymFunc(data, N)


@st.composite
def homogeneous(draw, n, max_terms=3):
    data = {}
    for _ in range(draw(st.integers(0, max_terms))):
        data[draw(st.sampled_from(P.partitions(n)))] = draw(scalars())
    return SymFunc(data, None)


@st.composite
def graded(draw, cap=5, tmin=-1, tmax=2, min_weight=None, max_terms=4):
    """Graded series known up to weight cap; monomials t^k p_lam with 2k + |lam| <= cap."""
    data = {}
    for _ in range(draw(st.integers(0, max_terms))):
        t = draw(st.integers(tmin, tmax))
        lo = max(0, (min_weight if min_weight is not None else -10 ** 6) - 2 * t)
        hi = cap - 2 * t
        if hi < lo:
            continue
        lam = draw(partitions_upto(hi, lo))
        data[(t, lam)] = draw(scalars())
    return GradedSeries(data, cap)


@st.composite
def two_partitions(draw, max_mu=3, max_parts=3):
    pairs = []
    for _ in range(draw(st.integers(0, 3))):
        mu = draw(partitions_upto(max_mu))
        th = draw(partitions_upto(max_parts, 1))
        pairs.append((mu, th))
    return TwoPartition(pairs)
