"""Evaluate parsed queries against the library."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .. import algebra as A
from .. import combinators as C
from .. import distributions as D
from .. import kernels as K
from ..conditioning import cond_on_indicator
from ..core import Dist, RandomVariable, cov, expect, value_rv, var
from ..errors import ArityError, ShapeError, UnknownName
from ..indicators import delta, on_component, prob, value_ge, value_le
from ..numeric import as_proportion, format_rational, simplex
from ..outcomes import (
    BOOL,
    FAILURE,
    NAT,
    PROP,
    RAT,
    SUCCESS,
    UNIT,
    UNIT_SPACE,
    FinSpace,
    FinVal,
    IndexedSumSpace,
    IntSpace,
    IntVal,
    NatSpace,
    NatVal,
    Outcome,
    OutcomeSpace,
    Pair,
    ProductSpace,
    PropSpace,
    PropVal,
    RatSpace,
    RatVal,
    SumSpace,
    Tag,
    TupleSpace,
    Tuple_,
    Unit,
    UnitSpace,
    is_numeric_space,
    to_rational,
)
from . import grammar as G

DEFAULT_NB_FUEL = 100


@dataclass
class Context:
    fuel: Optional[int] = None
    seed: Optional[int] = None


# ---------------------------------------------------------------- points


def point_in(p: G.Point, space: OutcomeSpace) -> Outcome:
    """Read a point literal as an outcome of ``space``."""
    if isinstance(p, G.Num):
        q = p.value
        if isinstance(space, RatSpace):
            return RatVal(q)
        if isinstance(space, PropSpace):
            return PropVal(as_proportion(q))
        if q.denominator != 1:
            raise ShapeError(f"{format_rational(q)} is not an integer point of {space}")
        n = int(q)
        if isinstance(space, FinSpace):
            return FinVal(space.k, n)
        if isinstance(space, NatSpace):
            return NatVal(n)
        if isinstance(space, IntSpace):
            return IntVal(n)
        if space == BOOL and n in (0, 1):
            return SUCCESS if n else FAILURE
        raise ShapeError(f"number {n} does not name a point of {space}")
    if isinstance(p, G.Keyword):
        if p.name == "unit" and isinstance(space, UnitSpace):
            return UNIT
        if p.name in ("success", "failure") and space == BOOL:
            return SUCCESS if p.name == "success" else FAILURE
        raise ShapeError(f"{p.name} is not a point of {space}")
    if isinstance(p, G.TagPoint):
        if not isinstance(space, SumSpace):
            raise ShapeError(f"tagged point in non-sum space {space}")
        return Tag(p.side, point_in(p.inner, space.left if p.side == "L" else space.right))
    items = p.items
    if isinstance(space, TupleSpace):
        if len(items) != len(space.items):
            raise ShapeError(f"{len(items)}-tuple given for {space}")
        return Tuple_(tuple(point_in(x, s) for x, s in zip(items, space.items)))
    if isinstance(space, ProductSpace):
        if len(items) != 2:
            raise ShapeError(f"pair expected for {space}")
        return Pair(point_in(items[0], space.fst), point_in(items[1], space.snd))
    if isinstance(space, IndexedSumSpace):
        if len(items) != 2:
            raise ShapeError(f"(index, point) expected for {space}")
        i = point_in(items[0], FinSpace(len(space.components)))
        return Pair(i, point_in(items[1], space.components[i.index]))
    raise ShapeError(f"tuple point in {space}")


def literal_space(p: G.Point) -> OutcomeSpace:
    if isinstance(p, G.Num):
        return RAT
    if isinstance(p, G.Keyword):
        return UNIT_SPACE if p.name == "unit" else BOOL
    if isinstance(p, G.TagPoint):
        raise ShapeError("the space of a tagged literal is ambiguous")
    return TupleSpace(tuple(literal_space(x) for x in p.items))


def _literal_points(items):
    spaces = {literal_space(x) for x in items}
    if len(spaces) != 1:
        raise ShapeError("points of one distribution must share a shape")
    space = spaces.pop()
    return [point_in(x, space) for x in items], space


def show_outcome(w: Outcome) -> str:
    """Print an outcome in point-literal syntax."""
    if isinstance(w, Unit):
        return "unit"
    if w == SUCCESS:
        return "success"
    if w == FAILURE:
        return "failure"
    if isinstance(w, Tag):
        return f"{w.side}({show_outcome(w.inner)})"
    if isinstance(w, Pair):
        return f"({show_outcome(w.fst)}, {show_outcome(w.snd)})"
    if isinstance(w, Tuple_):
        return "(" + ", ".join(show_outcome(x) for x in w.items) + ")"
    if isinstance(w, FinVal):
        return str(w.index)
    return format_rational(to_rational(w))


# ---------------------------------------------------------------- arguments


def _int(a, what) -> int:
    if not isinstance(a, G.Num) or a.value.denominator != 1:
        raise ShapeError(f"{what} must be an integer")
    return int(a.value)


def _rat(a, what) -> Fraction:
    if not isinstance(a, G.Num):
        raise ShapeError(f"{what} must be a rational")
    return a.value


def _weights(a, what):
    if not isinstance(a, G.ListLit):
        raise ShapeError(f"{what} must be a list of rationals")
    return simplex([_rat(x, what) for x in a.items])


def _points(a, what):
    if not isinstance(a, G.ListLit) or not a.items:
        raise ShapeError(f"{what} must be a nonempty point list")
    return _literal_points(a.items)


def _arity(name, args, *counts):
    if len(args) not in counts:
        raise ArityError(f"{name} takes {' or '.join(map(str, counts))} arguments, got {len(args)}")


# ---------------------------------------------------------------- expressions


def _construct(call: G.Call, ctx: Context) -> Dist:
    n, a = call.name, call.args
    if n == "hypergeometric":
        _arity(n, a, 3)
        return D.hypergeometric(_int(a[0], "N"), _int(a[1], "K"), _int(a[2], "n"))
    if n == "discrete_uniform":
        _arity(n, a, 1)
        return D.discrete_uniform(_int(a[0], "n"))
    if n == "discrete_uniform_z":
        _arity(n, a, 2)
        return D.discrete_uniform_z(_int(a[0], "a"), _int(a[1], "n"))
    if n == "bernoulli":
        _arity(n, a, 1)
        return D.bernoulli(_rat(a[0], "p"))
    if n == "binary_urn":
        _arity(n, a, 2)
        return D.binary_urn(_int(a[0], "s"), _int(a[1], "f"))
    if n == "bernoulli_trials":
        _arity(n, a, 2)
        return D.bernoulli_trials(_int(a[0], "n"), _rat(a[1], "p"))
    if n == "kparts":
        _arity(n, a, 1)
        return D.kparts(_weights(a[0], "weights"))
    if n == "kparts_trials":
        _arity(n, a, 2)
        return D.kparts_trials(_int(a[0], "n"), _weights(a[1], "weights"))
    if n == "urn_trials":
        _arity(n, a, 3)
        return D.urn_trials(_int(a[0], "s"), _int(a[1], "f"), _int(a[2], "n"))
    if n == "multinomial":
        _arity(n, a, 2)
        return D.multinomial(_int(a[0], "n"), _weights(a[1], "weights"))
    if n == "binomial":
        _arity(n, a, 2)
        return D.binomial(_int(a[0], "n"), _rat(a[1], "p"))
    if n == "negative_binomial":
        _arity(n, a, 2, 3)
        if len(a) == 3:
            return D.negative_binomial_approx(_int(a[0], "fuel"), _int(a[1], "r"), _rat(a[2], "p"))
        fuel = DEFAULT_NB_FUEL if ctx.fuel is None else ctx.fuel
        return D.negative_binomial_approx(fuel, _int(a[0], "r"), _rat(a[1], "p"))
    if n == "geometric":
        _arity(n, a, 1)
        return D.geometric(_rat(a[0], "p"), D.GEOMETRIC_FUEL if ctx.fuel is None else ctx.fuel)
    if n in ("empirical", "uniform_mixture"):
        _arity(n, a, 1)
        return D.empirical(*_points(a[0], "observations"))
    if n == "dirac":
        _arity(n, a, 1)
        points, space = _literal_points([a[0]])
        return C.dirac(points[0], space)
    if n == "anscombe1":
        _arity(n, a, 0)
        return D.anscombe_i()
    if n == "product":
        _arity(n, a, 2)
        return C.product(_sub(a[0], ctx), _sub(a[1], ctx))
    if n == "choose":
        _arity(n, a, 3)
        return C.choose(_rat(a[0], "p"), _sub(a[1], ctx), _sub(a[2], ctx))
    raise UnknownName(f"unknown distribution {n!r}")


def _sub(a, ctx) -> Dist:
    if not isinstance(a, (G.Call, G.MapBy, G.BindTo, G.Mix)):
        raise ShapeError("expected a distribution expression")
    return eval_expr(a, ctx)


def _component(space: OutcomeSpace, which: str, index: Optional[int] = None):
    """(component space, projection) for fst / snd / item(i)."""
    if isinstance(space, ProductSpace) and which in ("fst", "snd"):
        return (space.fst, lambda w: w.fst) if which == "fst" else (space.snd, lambda w: w.snd)
    if isinstance(space, TupleSpace):
        i = {"fst": 0, "snd": 1}.get(which, index)
        if i is None or not 0 <= i < len(space.items):
            raise ShapeError(f"no component {which} in {space}")
        return space.items[i], lambda w: w.items[i]
    raise ShapeError(f"{space} has no component {which}")


def _reshape(d: Dist, name: str) -> Dist:
    s = d.space
    if name in ("fst", "snd"):
        target, project = _component(s, name)
        return C.pushforward(project, d, target)
    if name == "proportion":
        return C.pushforward(lambda w: PropVal(as_proportion(to_rational(w))), d, PROP)
    if name == "to_rat":
        return C.pushforward(lambda w: RatVal(to_rational(w)), d, RAT)
    if name == "to_nat":
        return C.pushforward(lambda w: NatVal(int(to_rational(w))), d, NAT)
    if name == "succ":
        return C.pushforward(lambda w: NatVal(w.n + 1), d, NAT)
    if name == "count_successes":
        if not isinstance(s, TupleSpace) or any(x != BOOL for x in s.items):
            raise ShapeError("count_successes needs boolean tuples")
        return C.pushforward(D.count_successes, d, FinSpace(len(s.items) + 1))
    if name == "untag":
        return C.untag(d)
    if name == "reduce":
        if not isinstance(s, SumSpace) or s.left != s.right:
            raise ShapeError("reduce needs a sum of two equal spaces")
        return C.pushforward(lambda w: w.inner, d, s.left)
    raise UnknownName(f"unknown reshaper {name!r}")


def _kernel(name: str, source: OutcomeSpace) -> K.Kernel:
    if name == "bernoulli_kernel":
        return D.bernoulli_kernel()
    if name == "with_bernoulli":
        return K.kernel_diag(K.pure_kernel(PROP), D.bernoulli_kernel())
    if name == "empirical_kernel":
        if not isinstance(source, TupleSpace) or len(set(source.items)) != 1:
            raise ShapeError("empirical_kernel needs samples from a power space")
        return D.empirical_kernel(source.items[0], len(source.items))
    raise UnknownName(f"unknown kernel {name!r}")


def eval_expr(e, ctx: Context) -> Dist:
    if isinstance(e, G.Call):
        return _construct(e, ctx)
    if isinstance(e, G.MapBy):
        return _reshape(eval_expr(e.expr, ctx), e.name)
    if isinstance(e, G.BindTo):
        d = eval_expr(e.expr, ctx)
        return C.bind(d, _kernel(e.name, d.space))
    if isinstance(e, G.Mix):
        if len(e.branches) != len(e.weights):
            raise ArityError(f"mix has {len(e.branches)} branches but {len(e.weights)} weights")
        return C.mix([eval_expr(b, ctx) for b in e.branches], simplex(e.weights))
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------- actions


def rv_of(ref: G.RVRef, space: OutcomeSpace) -> RandomVariable:
    if ref.name == "id":
        return value_rv(space)
    if ref.name == "swap":
        X = value_rv(space)
        if X.shape.dim != 2:
            raise ShapeError(f"swap needs two numeric components, got {space}")
        return RandomVariable(space, lambda w: A.Vec(reversed(X(w).entries)), X.shape)
    sub, project = _component(space, ref.name, ref.index)
    return value_rv(sub).after(project, space)


def predicate(p: G.Pred, space: OutcomeSpace):
    if p.selector is None:
        sub, project = space, None
    else:
        sub, project = _component(space, p.selector.name, p.selector.index)
    if p.op == "eq":
        I = delta(sub, point_in(p.value, sub))
    else:
        if not is_numeric_space(sub):
            raise ShapeError(f"{p.op} needs numeric outcomes, got {sub}")
        I = (value_le if p.op == "le" else value_ge)(sub, p.value.value)
    return I if project is None else on_component(I, space, project)


def _laws(d: Dist, seed: Optional[int], cases: int = 200) -> dict:
    """Randomized spot checks of the expectation axioms on ``d``."""
    rng = random.Random(seed)
    pts = d.points

    def rand_q():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 12))

    def rand_rv():
        table = {x: rand_q() for x in pts}
        return RandomVariable(d.space, table.__getitem__)

    results = {"linearity": True, "positivity": True, "unital": True, "monotonicity": True}
    for _ in range(cases):
        X, Y, c = rand_rv(), rand_rv(), rand_q()
        results["linearity"] &= expect(d, X.scale(c) + Y) == c * expect(d, X) + expect(d, Y)
        P = X.map_values(abs)
        results["positivity"] &= expect(d, P) >= 0
        results["unital"] &= expect(d, RandomVariable(d.space, lambda _w: Fraction(1))) == 1
        results["monotonicity"] &= expect(d, X) <= expect(d, X + P)
    return results


@dataclass(frozen=True)
class Result:
    action: str
    value: object

    def text(self) -> str:
        v = self.value
        if self.action == "support":
            return "\n".join(f"{show_outcome(x)}\t{format_rational(w)}" for w, x in v.support)
        if self.action == "laws":
            return "\n".join(f"{k}: {'ok' if ok else 'FAILED'}" for k, ok in v.items())
        if isinstance(v, (Fraction, A.Vec)):
            return A.format_mvalue(v)
        return str(v)

    def json_value(self):
        v = self.value
        if self.action == "support":
            return v.to_json()
        if self.action == "laws":
            return dict(v)
        return A.mvalue_to_json(v)


def run_action(d: Dist, action, ctx: Context) -> Result:
    if action is None or isinstance(action, G.Support):
        return Result("support", d)
    s = d.space
    if isinstance(action, G.Pmf):
        return Result("pmf", d.mass(point_in(action.point, s)))
    if isinstance(action, G.Prob):
        return Result("prob", prob(d, predicate(action.pred, s)))
    if isinstance(action, G.Mean):
        return Result("mean", expect(d, rv_of(action.rv, s)))
    if isinstance(action, G.Var):
        return Result("var", var(d, rv_of(action.rv, s)))
    if isinstance(action, G.Cov):
        return Result("cov", cov(d, rv_of(action.left, s), rv_of(action.right, s)))
    if isinstance(action, G.Cond):
        c = cond_on_indicator(d, rv_of(action.rv, s), predicate(action.pred, s))
        return Result("cond", c(point_in(action.at, s)))
    if isinstance(action, G.Laws):
        return Result("laws", _laws(d, ctx.seed))
    raise TypeError(f"not an action: {action!r}")


def evaluate(q: G.Query, ctx: Optional[Context] = None) -> Result:
    ctx = ctx or Context()
    return run_action(eval_expr(q.expr, ctx), q.action, ctx)


def query(text: str, ctx: Optional[Context] = None) -> str:
    """Parse, evaluate and render as text."""
    return evaluate(G.parse(text), ctx).text()

