from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactprob.errors import SpaceMismatch
from exactprob.outcomes import (
    BOOL,
    FAILURE,
    INT,
    NAT,
    RAT,
    SUCCESS,
    UNIT,
    UNIT_SPACE,
    FinSpace,
    FinVal,
    IndexedSumSpace,
    IntVal,
    NatVal,
    Pair,
    ProductSpace,
    PropVal,
    RatVal,
    SumSpace,
    Tag,
    TupleSpace,
    Tuple_,
    outcome_cmp,
    outcome_eq,
    outcome_from_json,
    outcome_to_json,
    power,
    space_from_json,
    space_of,
    space_to_json,
    to_rational,
)
from exactprob.numeric import Proportion
from strategies import rationals

spaces = st.recursive(
    st.sampled_from([NAT, INT, RAT, FinSpace(3), UNIT_SPACE, BOOL]),
    lambda s: st.one_of(
        st.builds(SumSpace, s, s),
        st.builds(ProductSpace, s, s),
        st.lists(s, min_size=1, max_size=3).map(lambda xs: TupleSpace(tuple(xs))),
    ),
    max_leaves=5,
)


def outcomes_in(space):
    if space == NAT:
        return st.integers(0, 20).map(NatVal)
    if space == INT:
        return st.integers(-20, 20).map(IntVal)
    if space == RAT:
        return rationals.map(RatVal)
    if isinstance(space, FinSpace):
        return st.integers(0, space.k - 1).map(lambda i: FinVal(space.k, i))
    if space == UNIT_SPACE:
        return st.just(UNIT)
    if isinstance(space, SumSpace):
        return st.one_of(
            outcomes_in(space.left).map(lambda w: Tag("L", w)),
            outcomes_in(space.right).map(lambda w: Tag("R", w)),
        )
    if isinstance(space, ProductSpace):
        return st.builds(Pair, outcomes_in(space.fst), outcomes_in(space.snd))
    return st.tuples(*(outcomes_in(s) for s in space.items)).map(Tuple_)


@st.composite
def same_space(draw, n):
    space = draw(spaces)
    return space, [draw(outcomes_in(space)) for _ in range(n)]


def test_eq_examples():
    assert outcome_eq(Tag("L", UNIT), Tag("L", UNIT))
    assert not outcome_eq(FinVal(4, 1), FinVal(4, 2))
    assert outcome_eq(Pair(NatVal(1), NatVal(2)), Pair(NatVal(1), NatVal(2)))


def test_cmp_examples():
    assert outcome_cmp(NatVal(1), NatVal(2)) == -1
    assert outcome_cmp(SUCCESS, FAILURE) == -1
    a = Tuple_((RatVal(Fraction(1, 2)), SUCCESS))
    assert outcome_cmp(a, a) == 0


def test_cross_space_comparison():
    with pytest.raises(SpaceMismatch):
        outcome_eq(NatVal(1), IntVal(1))
    with pytest.raises(SpaceMismatch):
        outcome_cmp(FinVal(3, 1), FinVal(4, 1))
    with pytest.raises(SpaceMismatch):
        outcome_cmp(Tuple_((NatVal(1),)), Tuple_((NatVal(1), NatVal(2))))


def test_membership():
    assert BOOL.contains(SUCCESS) and not BOOL.contains(NatVal(0))
    assert FinSpace(4).contains(FinVal(4, 3)) and not FinSpace(4).contains(FinVal(5, 3))
    assert power(NAT, 2).contains(Tuple_((NatVal(1), NatVal(0))))
    assert IndexedSumSpace((NAT, BOOL)).contains(Pair(FinVal(2, 1), FAILURE))
    with pytest.raises(ValueError):
        FinVal(3, 3)


def test_space_inference():
    assert space_of([NatVal(1), NatVal(4)]) == NAT
    assert space_of([SUCCESS, FAILURE]) == BOOL
    assert space_of([Tuple_((RatVal(1), IntVal(2)))]) == TupleSpace((RAT, INT))
    with pytest.raises(SpaceMismatch):
        space_of([SUCCESS])
    with pytest.raises(SpaceMismatch):
        space_of([NatVal(1), IntVal(1)])


def test_to_rational():
    assert to_rational(SUCCESS) == 1 and to_rational(FAILURE) == 0
    assert to_rational(PropVal(Proportion(Fraction(1, 3)))) == Fraction(1, 3)
    assert to_rational(IntVal(-10)) == -10
    with pytest.raises(SpaceMismatch):
        to_rational(UNIT)


@given(same_space(3))
def test_total_order(case):
    _, (a, b, c) = case
    assert outcome_cmp(a, b) == -outcome_cmp(b, a)
    assert outcome_cmp(a, a) == 0
    if outcome_cmp(a, b) <= 0 and outcome_cmp(b, c) <= 0:
        assert outcome_cmp(a, c) <= 0
    assert outcome_cmp(a, b) in (-1, 0, 1)


@given(same_space(2))
def test_eq_iff_cmp_equal(case):
    _, (a, b) = case
    assert outcome_eq(a, b) == (outcome_cmp(a, b) == 0) == (a == b)


@given(same_space(1))
def test_json_round_trip(case):
    space, (w,) = case
    assert space.contains(w)
    assert outcome_from_json(outcome_to_json(w)) == w
    assert space_from_json(space_to_json(space)) == space
