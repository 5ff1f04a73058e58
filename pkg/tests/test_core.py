from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactprob import algebra as A
from exactprob import combinators as C
from exactprob.algebra import SCALAR, Vec, vector_shape
from exactprob.core import (
    Dist,
    RandomVariable,
    canonicalize,
    center,
    const_rv,
    cov,
    dist_eq,
    expect,
    expect_mono_check,
    one_rv,
    product_moment,
    value_rv,
    var,
)
from exactprob.distributions import anscombe_i, bernoulli, discrete_uniform_z, empirical, rationals as rat_points
from exactprob.errors import MassNotOne, NegativeWeight, NotPointwiseOrdered, ShapeError, SpaceMismatch
from exactprob.outcomes import INT, NAT, RAT, IntVal, NatVal, RatVal, UNIT
from strategies import POINTS, dists, nonneg_rationals, rationals, rv_from, rvs, tables, vector_rvs, vectors

SAMPLE = [Fraction(1, 4), Fraction(11, 8), Fraction(-3, 8), Fraction(-90, 17), 0]


def sample_dist():
    return empirical(rat_points(SAMPLE))


def test_expect_point_mass():
    assert expect(C.dirac(NatVal(5)), value_rv(NAT)) == 5


def test_expect_uniform_z():
    assert expect(discrete_uniform_z(0, 6), value_rv(INT)) == Fraction(5, 2)


def test_expect_empirical():
    assert expect(sample_dist(), value_rv(RAT)) == Fraction(-55, 68)


def test_expect_space_mismatch():
    with pytest.raises(SpaceMismatch):
        expect(C.dirac(NatVal(1)), value_rv(INT))


def test_canonicalize_examples():
    a, b = NatVal(1), NatVal(2)
    assert canonicalize([(Fraction(1, 2), a), (Fraction(1, 2), a)]) == ((1, a),)
    assert canonicalize([(0, a), (1, b)]) == ((1, b),)
    once = canonicalize([(Fraction(1, 3), b), (Fraction(2, 3), a)])
    assert canonicalize(once) == once
    assert [x for _, x in once] == [a, b]


def test_canonicalize_errors():
    with pytest.raises(NegativeWeight):
        canonicalize([(-1, NatVal(0)), (2, NatVal(1))])
    with pytest.raises(MassNotOne):
        canonicalize([(Fraction(1, 2), NatVal(0))])
    with pytest.raises(SpaceMismatch):
        Dist(NAT, [(1, IntVal(0))])


def test_dist_eq_examples():
    d = bernoulli(Fraction(1, 2))
    assert dist_eq(d, d)
    assert dist_eq(C.mix([d], [1]), d)
    assert not dist_eq(bernoulli(Fraction(1, 2)), bernoulli(Fraction(1, 3)))
    with pytest.raises(SpaceMismatch):
        dist_eq(d, C.dirac(NatVal(0)))


def test_center_examples():
    d = discrete_uniform_z(0, 6)
    X = value_rv(INT)
    assert expect(d, center(d, X)) == 0
    assert center(d, X)(IntVal(0)) == Fraction(-5, 2)
    point = C.dirac(NatVal(3))
    assert center(point, value_rv(NAT))(NatVal(3)) == 0


def test_product_moment_examples():
    d = sample_dist()
    X = value_rv(RAT)
    assert product_moment(d, X, one_rv(RAT)) == expect(d, X)
    direct = sum(Fraction(v) ** 2 for v in SAMPLE) / 5
    assert product_moment(d, X, X) == direct == Fraction(248313, 46240) + Fraction(55, 68) ** 2
    assert product_moment(C.dirac(RatVal(Fraction(3))), X, X + 1) == 12


def test_product_moment_shape_error():
    d = C.dirac(NatVal(0))
    V = const_rv(NAT, Vec([1, 2]))
    with pytest.raises(ShapeError):
        product_moment(d, value_rv(NAT), V)


def test_variance_examples():
    assert var(discrete_uniform_z(0, 6), value_rv(INT)) == Fraction(35, 12)
    assert var(sample_dist(), value_rv(RAT)) == Fraction(248313, 46240)


def test_anscombe_cross_covariance():
    d = anscombe_i()
    X = value_rv(d.space)
    swap = RandomVariable(d.space, lambda w: Vec(reversed(X(w).entries)), X.shape)
    assert expect(d, X) == Vec([9, Fraction(8251, 1100)])
    assert cov(d, X, swap)[0] == Fraction(5501, 1100)


def test_expect_mono_examples():
    d = sample_dist()
    X = value_rv(RAT)
    assert expect_mono_check(d, X, X)
    assert expect_mono_check(d, const_rv(RAT, 0), X.map_values(abs))
    with pytest.raises(NotPointwiseOrdered):
        expect_mono_check(d, X + 1, X)


def test_json_round_trip_example():
    d = sample_dist()
    assert Dist.loads(d.dumps()) == d
    assert d.to_json()["support"][0] == {"w": "1/5", "point": {"rat": "-90/17"}}


@given(dists(), rvs(), rvs(), rationals)
def test_linearity(d, X, Y, c):
    assert expect(d, X + Y) == expect(d, X) + expect(d, Y)
    assert expect(d, X.scale(c)) == c * expect(d, X)
    assert expect(d, X - Y) == expect(d, X) - expect(d, Y)


@given(dists(), vector_rvs(), vector_rvs(), vectors(2))
def test_vector_linearity_and_constant_multiplication(d, X, Y, m):
    assert expect(d, X + Y) == expect(d, X) + expect(d, Y)
    assert expect(d, const_rv(NAT, m) * X) == A.mul(m, expect(d, X))
    assert expect(d, const_rv(NAT, m)) == m


@given(dists(), rvs(), tables())
def test_congruence(d, X, junk):
    # agree with X on the support, anything elsewhere
    table = {x: X(x) if d.mass(x) else junk[x] for x in POINTS}
    assert expect(d, rv_from(table)) == expect(d, X)


@given(dists(), st.sampled_from([SCALAR, vector_shape(3)]))
def test_unital(d, shape):
    assert expect(d, one_rv(NAT, shape)) == A.one(shape)


@given(dists(), rvs(nonneg_rationals))
def test_positivity(d, X):
    assert expect(d, X) >= 0


@given(dists(), rvs(), rvs(nonneg_rationals))
def test_monotone(d, X, N):
    assert expect_mono_check(d, X, X + N)


@given(dists(), tables(), tables(nonneg_rationals), st.integers(0, 6))
def test_eventually_constant_sequence(d, limit, gaps, N):
    # X_n = X - gap/(n+1) for n < N and X from N on; increasing in n
    def X_n(n):
        if n >= N:
            return rv_from(limit)
        return rv_from({x: limit[x] - gaps[x] / (n + 1) for x in POINTS})

    seq = [expect(d, X_n(n)) for n in range(N + 3)]
    assert all(a <= b for a, b in zip(seq, seq[1:]))
    assert all(v == expect(d, rv_from(limit)) for v in seq[N:])


@given(dists(), st.data())
def test_dist_eq_implies_equal_expectations(d, data):
    rebuilt = Dist(d.space, list(reversed(d.support)))
    assert dist_eq(d, rebuilt)
    for _ in range(20):
        X = data.draw(rvs())
        assert expect(d, X) == expect(rebuilt, X)


@given(dists())
def test_dist_json_round_trip(d):
    assert Dist.loads(d.dumps()) == d
    assert sum(w for w, _ in d.support) == 1


def test_unit_dist():
    d = C.dirac(UNIT)
    assert d.support == ((1, UNIT),)
