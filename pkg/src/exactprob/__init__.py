"""Exact probability over finitely-supported distributions with rational weights.

Expectation is the primitive: a distribution is a canonical finite support,
and probabilities, moments and conditionals are all read off ``expect``.
"""

from . import algebra, combinators, conditioning, distributions, indicators, kernels, numeric, outcomes
from .algebra import SCALAR, Vec, vector_shape
from .combinators import bind, binary_mixture, choose, dirac, mix, product, pushforward
from .conditioning import ConditionalRV, cond_on_indicator, posterior_eval
from .core import Dist, RandomVariable, const_rv, cov, dist_eq, expect, value_rv, var
from .distributions import (
    anscombe_i,
    bernoulli,
    bernoulli_trials,
    binomial,
    discrete_uniform,
    discrete_uniform_z,
    empirical,
    geometric,
    hypergeometric,
    kparts,
    multinomial,
    negative_binomial_approx,
    urn_trials,
)
from .errors import ExactProbError
from .indicators import Indicator, complement, delta, indicator, pr, prob, threshold_indicator
from .kernels import Kernel, kernel_compose, kernel_id
from .numeric import Proportion, Simplex, as_rational, simplex, uniform_simplex
from .outcomes import BOOL, FAILURE, INT, NAT, PROP, RAT, SUCCESS, FinVal, IntVal, NatVal, Pair, RatVal, Tuple_

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
