"""Conditional random variables given a satisfiable indicator event."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict

from . import algebra as A
from .core import Dist, RandomVariable, expect, product_moment
from .errors import NotSatisfiable, ShapeError
from .indicators import Indicator, complement, prob
from .outcomes import BOOL, FAILURE, SUCCESS, Outcome, Pair


@dataclass(frozen=True)
class ConditionalRV:
    """E[Y | I] together with what it was built from."""

    predictor: RandomVariable
    target: RandomVariable
    given: Indicator
    over: Dist

    def __call__(self, w: Outcome):
        return self.predictor(w)

    def is_measurable(self) -> bool:
        """Support points with equal indicator value have equal predictor value."""
        seen = {}
        for _, x in self.over.support:
            key = self.given(x)
            v = self.predictor(x)
            if seen.setdefault(key, v) != v:
                return False
        return True

    def orthogonal_to(self, g: Callable) -> bool:
        """<Y - E[Y|I], g . I> = 0 under ``over``."""
        residual = self.target - self.predictor
        gx = self.given.base.map_values(g)
        return product_moment(self.over, residual, gx) == A.zero(self.predictor.shape)


def cond_on_indicator(d: Dist, Y: RandomVariable, I: Indicator) -> ConditionalRV:
    if not Y.shape.is_scalar or not I.shape.is_scalar:
        raise ShapeError("conditioning is defined for scalar-valued random variables and indicators")
    I.check_on(d)
    Ic = complement(I)
    p_in, p_out = prob(d, I), prob(d, Ic)
    if p_in == 0 or p_out == 0:
        raise NotSatisfiable(f"event has probability {p_in}; both it and its complement need positive mass")
    mean_in = expect(d, I.base * Y) / p_in
    mean_out = expect(d, Ic.base * Y) / p_out
    predictor = RandomVariable(d.space, lambda w: mean_in if I.holds(w) else mean_out)
    return ConditionalRV(predictor, Y, I, d)


def tower_check(d: Dist, c: ConditionalRV, Y: RandomVariable) -> bool:
    return expect(d, c.predictor) == expect(d, Y)


def posterior_eval(joint: Dist, Y: RandomVariable, I: Indicator) -> Dict[Outcome, object]:
    """Read E[Y | I] on a (parameter, observation) joint as a function of the boolean observation.

    The indicator must depend on the observation only, so the predictor is
    constant in the first coordinate and any parameter value can be fixed.
    """
    c = cond_on_indicator(joint, Y, I)
    anchor = joint.support[0][1].fst
    if joint.space.snd != BOOL:
        raise ShapeError(f"posterior_eval expects boolean observations, got {joint.space.snd}")
    return {b: c(Pair(anchor, b)) for b in (SUCCESS, FAILURE)}
