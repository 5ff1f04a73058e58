"""Indicator random variables, probability, and inequality indicators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import algebra as A
from .algebra import SCALAR, AlgebraShape
from .core import Dist, RandomVariable, expect
from .errors import NotIndicator, SpaceMismatch
from .numeric import Proportion, as_rational
from .outcomes import NatVal, Outcome, OutcomeSpace, require_in, to_rational

LE = "le"
GE = "ge"


@dataclass(frozen=True)
class Indicator:
    """A random variable meant to take only the values 0M and 1M.

    The 0/1 property is checked lazily, on the support of whatever
    distribution the indicator is used with.
    """

    base: RandomVariable

    @property
    def space(self) -> OutcomeSpace:
        return self.base.space

    @property
    def shape(self) -> AlgebraShape:
        return self.base.shape

    def __call__(self, w: Outcome):
        v = self.base(w)
        if v != A.zero(self.shape) and v != A.one(self.shape):
            raise NotIndicator(f"indicator takes value {A.format_mvalue(v)} at {w!r}")
        return v

    def holds(self, w: Outcome) -> bool:
        return self(w) == A.one(self.shape)

    def check_on(self, d: Dist) -> None:
        if d.space != self.space:
            raise SpaceMismatch(f"indicator on {self.space}, distribution on {d.space}")
        for _, x in d.support:
            self(x)

    def __invert__(self) -> "Indicator":
        return complement(self)

    def __and__(self, other: "Indicator") -> "Indicator":
        return conjunction(self, other)


def indicator(space: OutcomeSpace, pred: Callable[[Outcome], bool], shape: AlgebraShape = SCALAR) -> Indicator:
    """Indicator of the event ``pred``."""
    one, zero = A.one(shape), A.zero(shape)
    return Indicator(RandomVariable(space, lambda w: one if pred(w) else zero, shape))


def always(space: OutcomeSpace, shape: AlgebraShape = SCALAR) -> Indicator:
    return indicator(space, lambda _w: True, shape)


def never(space: OutcomeSpace, shape: AlgebraShape = SCALAR) -> Indicator:
    return indicator(space, lambda _w: False, shape)


def complement(I: Indicator) -> Indicator:
    one = A.one(I.shape)
    return Indicator(RandomVariable(I.space, lambda w: A.sub(one, I(w)), I.shape))


def conjunction(I: Indicator, J: Indicator) -> Indicator:
    if I.space != J.space:
        raise SpaceMismatch(f"conjunction of indicators on {I.space} and {J.space}")
    return Indicator(RandomVariable(I.space, lambda w: A.mul(I(w), J(w)), I.shape))


def delta(space: OutcomeSpace, point: Outcome) -> Indicator:
    require_in(space, point)
    return indicator(space, lambda w: w == point)


def value_le(space: OutcomeSpace, bound) -> Indicator:
    """1 where the numeric value of the outcome is <= bound."""
    b = as_rational(bound)
    return indicator(space, lambda w: to_rational(w) <= b)


def value_ge(space: OutcomeSpace, bound) -> Indicator:
    b = as_rational(bound)
    return indicator(space, lambda w: to_rational(w) >= b)


def le_nat(space: OutcomeSpace, bound: int) -> Indicator:
    return indicator(space, lambda w: isinstance(w, NatVal) and w.n <= bound)


def on_component(I: Indicator, space: OutcomeSpace, project: Callable[[Outcome], Outcome]) -> Indicator:
    """Pull an indicator back along a projection ``space -> I.space``."""
    return Indicator(I.base.after(project, space))


def component_delta(space, i: int, point: Outcome) -> Indicator:
    """Indicator that component ``i`` of a tuple outcome equals ``point``."""
    return on_component(delta(space.items[i], point), space, lambda t: t.items[i])


def pr(d: Dist, I: Indicator) -> Proportion:
    """Probability of the event: trace of the expectation of the indicator."""
    I.check_on(d)
    p = A.trace(expect(d, I.base))
    # positivity and monotonicity of E pin this in [0, 1]; Proportion re-checks
    return Proportion(p)


def prob(d: Dist, I: Indicator) -> Fraction:
    return pr(d, I).value


def satisfiable(d: Dist, I: Indicator) -> bool:
    return prob(d, I) > 0 and prob(d, complement(I)) > 0


def threshold_indicator(X: RandomVariable, r, direction: str = GE, shape: AlgebraShape = SCALAR) -> Indicator:
    """``||X|| <= r`` or ``||X|| >= r``; a tie satisfies both directions."""
    r = as_rational(r)
    if direction == LE:
        return indicator(X.space, lambda w: A.seminorm(X(w)) <= r, shape)
    if direction == GE:
        return indicator(X.space, lambda w: A.seminorm(X(w)) >= r, shape)
    raise ValueError(f"direction must be {LE!r} or {GE!r}")
