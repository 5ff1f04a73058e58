from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from exactprob import combinators as C
from exactprob import distributions as D
from exactprob.core import Dist, canonicalize, dist_eq, expect, value_rv
from exactprob.errors import BadUrn, EmptyMixture, EmptyUrn
from exactprob.numeric import simplex, uniform_simplex
from exactprob.outcomes import (
    FAILURE,
    INT,
    NAT,
    RAT,
    SUCCESS,
    FinSpace,
    FinVal,
    IntVal,
    NatVal,
    RatVal,
    Tuple_,
)
from strategies import proportions, rvs

SAMPLE = [Fraction(1, 4), Fraction(11, 8), Fraction(-3, 8), Fraction(-90, 17), 0]


def seq(*bits):
    return Tuple_(tuple(SUCCESS if b else FAILURE for b in bits))


def is_canonical(d):
    return d.support == canonicalize(d.support) and sum(w for w, _ in d.support) == 1


def test_kparts():
    d = D.kparts(uniform_simplex(4))
    assert [w for w, _ in d.support] == [Fraction(1, 4)] * 4
    assert D.kparts([1]) == C.dirac(FinVal(1, 0))
    two = D.kparts([Fraction(2, 5), Fraction(3, 5)])
    assert (two.mass(FinVal(2, 0)), two.mass(FinVal(2, 1))) == (Fraction(2, 5), Fraction(3, 5))


def test_discrete_uniform():
    assert D.discrete_uniform(1) == C.dirac(FinVal(1, 0))
    d = D.discrete_uniform_z(-2, 5)
    assert d.support == tuple((Fraction(1, 5), IntVal(z)) for z in range(-2, 3))
    u = D.discrete_uniform_z(0, 6)
    assert expect(u, value_rv(INT)) == Fraction(5, 2)


def test_bernoulli():
    assert D.bernoulli(1) == Dist(D.bernoulli(1).space, [(1, SUCCESS)])
    d = D.bernoulli(Fraction(2, 5))
    assert (d.mass(SUCCESS), d.mass(FAILURE)) == (Fraction(2, 5), Fraction(3, 5))


def test_bernoulli_mixture():
    prior = D.empirical(D.proportion_points([Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]))
    assert C.bind(prior, D.bernoulli_kernel()).mass(SUCCESS) == Fraction(13, 36)


def test_binary_urn():
    assert D.binary_urn(2, 3).mass(SUCCESS) == Fraction(2, 5)
    assert D.binary_urn(0, 4).mass(FAILURE) == 1
    assert D.binary_urn(4, 0).mass(SUCCESS) == 1
    with pytest.raises(EmptyUrn):
        D.binary_urn(0, 0)


def test_bernoulli_trials():
    p = Fraction(1, 3)
    one = D.bernoulli_trials(1, p)
    assert one.mass(seq(1)) == p and one.mass(seq(0)) == 1 - p
    assert D.bernoulli_trials(4, p).mass(seq(1, 1, 1, 1)) == p**4
    counted = C.pushforward(D.count_successes, D.bernoulli_trials(3, p), FinSpace(4))
    assert {x.index: w for w, x in counted.support} == oracles.success_count_by_enumeration(3, p)


def test_kparts_trials():
    d = D.kparts_trials(2, [Fraction(1, 4), Fraction(3, 4)])
    assert d.mass(Tuple_((FinVal(2, 1), FinVal(2, 1)))) == Fraction(9, 16)


def test_urn_trials():
    d = D.urn_trials(2, 3, 3)
    assert d.mass(seq(1, 0, 0)) == Fraction(1, 5) == oracles.urn_sequence_prob(2, 3, [True, False, False])
    for bits in product((True, False), repeat=3):
        assert d.mass(seq(*bits)) == oracles.urn_sequence_prob(2, 3, bits)
    assert is_canonical(d)


def test_urn_trials_empty_urn():
    # the second draw comes from an empty urn
    with pytest.raises(EmptyUrn):
        D.urn_trials(1, 0, 2)
    with pytest.raises(EmptyUrn):
        D.urn_trials(0, 0, 1)
    assert D.urn_trials(2, 0, 2) == C.dirac(seq(1, 1), D.urn_trials(2, 0, 2).space)


def test_hypergeometric():
    d = D.hypergeometric(5, 2, 3)
    assert d.mass(FinVal(3, 1)) == Fraction(3, 5)
    assert d.mass(FinVal(3, 0)) == Fraction(1, 10)
    full = D.hypergeometric(4, 4, 2)
    assert full.support == ((1, FinVal(5, 2)),)
    with pytest.raises(BadUrn):
        D.hypergeometric(3, 4, 1)
    with pytest.raises(BadUrn):
        D.hypergeometric(3, 1, 4)


@pytest.mark.parametrize("N", range(1, 9))
def test_hypergeometric_closed_form(N):
    for K in range(N + 1):
        for n in range(1, N + 1):
            d = D.hypergeometric(N, K, n)
            for x in range(K + 1):
                assert d.mass(FinVal(K + 1, x)) == oracles.hypergeometric_pmf(N, K, n, x)


@given(rvs(points=[FinVal(3, i) for i in range(3)], space=FinSpace(3)))
def test_hypergeometric_lotus(X):
    lhs = expect(D.hypergeometric(5, 2, 3), X)
    urn = D.urn_trials(2, 3, 3)
    rhs = expect(urn, X.after(D.count_upto_k(2), urn.space))
    assert lhs == rhs


def test_multinomial():
    d = D.multinomial(4, uniform_simplex(3))
    nat3 = lambda *c: Tuple_(tuple(NatVal(x) for x in c))  # noqa: E731
    assert d.mass(nat3(1, 2, 1)) == Fraction(4, 27)
    assert d.mass(nat3(0, 2, 1)) == 0
    assert d.mass(nat3(2, 2, 1)) == 0
    s = simplex([Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)])
    one = D.multinomial(1, s)
    assert [one.mass(nat3(*e)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))] == list(s)


def test_multinomial_closed_form():
    s = [Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)]
    d = D.multinomial(4, s)
    for w, x in d.support:
        assert w == oracles.multinomial_pmf(4, s, [c.n for c in x.items])


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_multinomial_marginals_are_binomial(k, n):
    s = [Fraction(i + 1, k * (k + 1) // 2) for i in range(k)]
    d = D.multinomial(n, s)
    for i in range(k):
        assert dist_eq(C.marginal_i(d, i), D.binomial(n, s[i]))


def test_binomial():
    d = D.binomial(3, Fraction(1, 3))
    assert d.mass(NatVal(1)) == Fraction(4, 9)
    assert D.binomial(5, 0) == C.dirac(NatVal(0))
    for k in range(4):
        assert d.mass(NatVal(k)) == oracles.binomial_pmf(3, Fraction(1, 3), k)


@pytest.mark.parametrize("n", range(1, 7))
def test_binomial_is_counted_trials(n):
    for p in (Fraction(1, 3), Fraction(2, 7), Fraction(1, 2), 1):
        counted = C.pushforward(D.count_successes, D.bernoulli_trials(n, p), FinSpace(n + 1))
        as_nat = C.pushforward(lambda x: NatVal(x.index), counted, NAT)
        assert dist_eq(D.binomial(n, p), as_nat)
        for k in range(n + 1):
            assert D.binomial(n, p).mass(NatVal(k)) == oracles.binomial_pmf(n, p, k)


def test_negative_binomial():
    d = D.negative_binomial_approx(100, 3, Fraction(1, 4))
    assert d.mass(NatVal(1)) == Fraction(9, 256)
    assert sum(w for w, _ in d.support) == 1
    for k in range(10):
        assert d.mass(NatVal(k)) == oracles.negative_binomial_pmf(3, Fraction(1, 4), k)
    assert D.negative_binomial_approx(5, 3, 1) == C.dirac(NatVal(0))


def test_geometric():
    g = D.geometric(Fraction(1, 4))
    assert g.mass(NatVal(4)) == Fraction(27, 256)
    assert sum(w for w, x in g.support if x.n <= 4) == Fraction(175, 256)


@given(proportions.filter(lambda p: p > 0), st.integers(1, 10))
def test_geometric_closed_form(p, x):
    assert D.geometric(p).mass(NatVal(x)) == oracles.geometric_pmf(p, x)


def test_empirical():
    d = D.empirical(D.rationals(SAMPLE))
    assert all(w == Fraction(1, 5) for w, _ in d.support)
    assert expect(d, value_rv(RAT)) == Fraction(-55, 68) == oracles.mean(SAMPLE)
    assert D.sample_mean(D.rationals(SAMPLE), value_rv(RAT)) == Fraction(-55, 68)
    assert D.empirical([RatVal(Fraction(1, 2))]) == C.dirac(RatVal(Fraction(1, 2)))
    with pytest.raises(EmptyMixture):
        D.empirical([])


def test_empirical_kernel():
    k = D.empirical_kernel(NAT, 3)
    out = k(Tuple_((NatVal(1), NatVal(2), NatVal(1))))
    assert out.mass(NatVal(1)) == Fraction(2, 3)


def test_anscombe():
    d = D.anscombe_i()
    X = value_rv(d.space)
    xs = [r[0] for r in D.ANSCOMBE_I]
    ys = [r[1] for r in D.ANSCOMBE_I]
    assert list(expect(d, X)) == [9, Fraction(8251, 1100)] == [oracles.mean(xs), oracles.mean(ys)]


def test_count_helpers():
    assert D.count_successes(seq(1, 0, 1)) == FinVal(4, 2)
    assert D.count_upto_k(2)(seq(1, 1, 1)) == FinVal(3, 2)
    assert D.count_successes(seq(0, 0, 0)) == FinVal(4, 0)


@pytest.mark.parametrize(
    "make",
    [
        lambda: D.kparts([Fraction(1, 3), Fraction(2, 3)]),
        lambda: D.discrete_uniform_z(-3, 7),
        lambda: D.bernoulli(Fraction(3, 8)),
        lambda: D.binary_urn(3, 5),
        lambda: D.bernoulli_trials(4, Fraction(1, 5)),
        lambda: D.kparts_trials(3, uniform_simplex(3)),
        lambda: D.urn_trials(3, 4, 4),
        lambda: D.hypergeometric(8, 3, 5),
        lambda: D.multinomial(3, [Fraction(1, 4), Fraction(3, 4)]),
        lambda: D.binomial(6, Fraction(2, 3)),
        lambda: D.negative_binomial_approx(30, 2, Fraction(1, 3)),
        lambda: D.geometric(Fraction(1, 2)),
        lambda: D.empirical(D.rationals(SAMPLE)),
        lambda: D.anscombe_i(),
    ],
)
def test_catalog_is_canonical(make):
    assert is_canonical(make())
