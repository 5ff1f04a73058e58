"""Named distributions, each assembled from combinators and kernels."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import combinators as C
from . import kernels as K
from .core import Dist, RandomVariable, expect
from .errors import BadUrn, EmptyUrn
from .numeric import Simplex, as_proportion, count_ratio, simplex, uniform_simplex
from .outcomes import (
    BOOL,
    FAILURE,
    INT,
    NAT,
    PROP,
    SUCCESS,
    UNIT,
    UNIT_SPACE,
    FinSpace,
    FinVal,
    IntVal,
    L,
    NatVal,
    OutcomeSpace,
    Pair,
    ProductSpace,
    PropVal,
    RatVal,
    SumSpace,
    Tag,
    Tuple_,
    power,
)

E_UNIT = C.dirac(UNIT, UNIT_SPACE)

NAT_ADD = C.Monoid(lambda a, b: NatVal(a.n + b.n), NatVal(0), NAT)


def vector_add(k: int) -> C.Monoid:
    """Componentwise addition on k-tuples of naturals."""
    return C.Monoid(
        lambda a, b: Tuple_(tuple(NatVal(x.n + y.n) for x, y in zip(a.items, b.items))),
        Tuple_((NatVal(0),) * k),
        power(NAT, k),
    )


# ---------------------------------------------------------------- reshapers


def count_successes(seq: Tuple_) -> FinVal:
    """Number of successes in a boolean tuple of length n, as a point of fin(n+1)."""
    return FinVal(len(seq.items) + 1, sum(1 for b in seq.items if b.side == L))


def count_upto_k(K_: int):
    """Success count clamped at ``K_``, as a point of fin(K_+1)."""

    def count(seq: Tuple_) -> FinVal:
        return FinVal(K_ + 1, min(K_, sum(1 for b in seq.items if b.side == L)))

    return count


def success_to_nat(b) -> NatVal:
    return NatVal(1 if b == SUCCESS else 0)


def prepend(b):
    return lambda t: Tuple_((b,) + t.items)


def unit_vector(k: int):
    return lambda i: Tuple_(tuple(NatVal(1 if j == i.index else 0) for j in range(k)))


# ---------------------------------------------------------------- choice


def kparts(s) -> Dist:
    """Mass s_i on FinVal(k, i)."""
    s = s if isinstance(s, Simplex) else simplex(s)
    k = len(s)
    m = C.mix_n(E_UNIT, s)
    if k == 1:
        return C.pushforward(lambda _u: FinVal(1, 0), m, FinSpace(1))
    return C.pushforward(lambda t: FinVal(k, t.fst.index), m, FinSpace(k))


def discrete_uniform(n: int) -> Dist:
    return kparts(uniform_simplex(n))


def discrete_uniform_z(a: int, n: int) -> Dist:
    """Uniform on the consecutive integers a, ..., a+n-1."""
    return C.pushforward(lambda i: IntVal(a + i.index), discrete_uniform(n), INT)


def bernoulli(p) -> Dist:
    """Success (Tag L) with probability p, failure (Tag R) otherwise."""
    return C.binary_mixture(E_UNIT, p, E_UNIT)


def bernoulli_kernel() -> K.Kernel:
    return K.Kernel(PROP, BOOL, lambda pv: bernoulli(pv.p))


def binary_urn(s: int, f: int) -> Dist:
    if s + f == 0:
        raise EmptyUrn("cannot draw from an empty urn")
    return bernoulli(count_ratio(s, f))


# ---------------------------------------------------------------- repetition


def bernoulli_trials(n: int, p) -> Dist:
    return C.power_n(bernoulli(p), n)


def kparts_trials(n: int, s) -> Dist:
    return C.power_n(kparts(s), n)


def urn_trials(s: int, f: int, n: int) -> Dist:
    """n draws without replacement from s successes and f failures, as a boolean n-tuple."""
    if n < 1:
        raise ValueError("urn_trials needs n >= 1")
    space = power(BOOL, n)
    if n == 1:
        return C.pushforward(lambda b: Tuple_((b,)), binary_urn(s, f), space)
    if s == 0 and f == 0:
        return C.power_n(binary_urn(0, 0), n)
    if f == 0:
        return C.pushforward(prepend(SUCCESS), urn_trials(s - 1, 0, n - 1), space)
    if s == 0:
        return C.pushforward(prepend(FAILURE), urn_trials(0, f - 1, n - 1), space)
    after_success = C.pushforward(prepend(SUCCESS), urn_trials(s - 1, f, n - 1), space)
    after_failure = C.pushforward(prepend(FAILURE), urn_trials(s, f - 1, n - 1), space)
    route = K.kernel_case(K.const_kernel(UNIT_SPACE, after_success), K.const_kernel(UNIT_SPACE, after_failure))
    return C.bind(binary_urn(s, f), route)


def hypergeometric(N: int, K_: int, n: int) -> Dist:
    """Successes in n draws without replacement from N items, K_ of them successes; on fin(K_+1)."""
    if K_ > N or n > N or min(N, K_, n) < 0 or n < 1:
        raise BadUrn(f"hypergeometric needs 0 <= K <= N and 1 <= n <= N, got N={N}, K={K_}, n={n}")
    return C.pushforward(count_upto_k(K_), urn_trials(K_, N - K_, n), FinSpace(K_ + 1))


# ---------------------------------------------------------------- summaries


def multinomial(n: int, s) -> Dist:
    """Category counts of n independent k-way draws, as k-tuples of naturals."""
    s = s if isinstance(s, Simplex) else simplex(s)
    k = len(s)
    monoid = vector_add(k)
    trial = C.pushforward(unit_vector(k), kparts(s), monoid.space)
    return C.convolution_fold(monoid, n, lambda _i: trial)


def binomial(n: int, p) -> Dist:
    trial = C.pushforward(success_to_nat, bernoulli(p), NAT)
    return C.convolution_fold(NAT_ADD, n, lambda _i: trial)


NB_STATE = ProductSpace(NAT, NAT)


def step_nb(p) -> K.Kernel:
    """One trial of the negative-binomial process on (successes still needed, failures so far)."""
    p = as_proportion(p)
    target = SumSpace(NB_STATE, NAT)

    def on_success(state):
        r, f = state.fst.n, state.snd.n
        return Tag("R", NatVal(f)) if r == 1 else Tag("L", Pair(NatVal(r - 1), NatVal(f)))

    def on_failure(state):
        return Tag("L", Pair(state.fst, NatVal(state.snd.n + 1)))

    test = K.const_kernel(NB_STATE, bernoulli(p))
    return K.kernel_if(test, K.from_function(NB_STATE, target, on_success), K.from_function(NB_STATE, target, on_failure))


def negative_binomial_approx(fuel: int, r: int, p) -> Dist:
    """Failures before the r-th success, unfolded for at most ``fuel`` trials.

    Paths still running when fuel runs out report the failures counted so far.
    """
    if r < 1:
        raise ValueError("negative binomial needs r >= 1")
    k = K.kernel_unfoldn(fuel, K.proj2_kernel(NB_STATE), step_nb(p))
    return k(Pair(NatVal(r), NatVal(0)))


GEOMETRIC_FUEL = 10


def geometric(p, fuel: int = GEOMETRIC_FUEL) -> Dist:
    """Index of the first success (support 1, 2, ...)."""
    return C.pushforward(lambda x: NatVal(x.n + 1), negative_binomial_approx(fuel, 1, p), NAT)


# ---------------------------------------------------------------- empirical


def empirical(points: Sequence, space: OutcomeSpace = None) -> Dist:
    """Mass 1/n on each listed observation (repeats accumulate)."""
    return C.uniform_mixture(list(points), space)


def empirical_kernel(space: OutcomeSpace, n: int) -> K.Kernel:
    """From an n-tuple sample to its empirical distribution."""
    return K.Kernel(power(space, n), space, lambda t: empirical(t.items, space))


def sample_mean(points: Sequence, X: RandomVariable):
    return expect(empirical(points, X.space), X)


# ---------------------------------------------------------------- datasets


def rationals(values) -> list:
    return [RatVal(Fraction(v)) for v in values]


ANSCOMBE_I = (
    (10, Fraction(201, 25)),
    (8, Fraction(139, 20)),
    (13, Fraction(379, 50)),
    (9, Fraction(881, 100)),
    (11, Fraction(833, 100)),
    (14, Fraction(249, 25)),
    (6, Fraction(181, 25)),
    (4, Fraction(213, 50)),
    (12, Fraction(271, 25)),
    (7, Fraction(241, 50)),
    (5, Fraction(142, 25)),
)


def anscombe_i() -> Dist:
    """Anscombe's first dataset as an empirical distribution on 2-tuples of rationals."""
    return empirical([Tuple_(tuple(RatVal(Fraction(v)) for v in row)) for row in ANSCOMBE_I])


def proportion_points(values) -> list:
    return [PropVal(as_proportion(v)) for v in values]
