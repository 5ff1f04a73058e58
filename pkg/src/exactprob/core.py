"""Finitely-supported expectation spaces and the expectation operator.

A :class:`Dist` is a weighted list of outcomes in canonical form: weights are
positive rationals summing to exactly one and points are strictly increasing
in the canonical outcome order. Two distributions assign equal expectations to
every random variable iff their canonical forms coincide, so ``dist_eq`` is
structural equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Tuple

from . import algebra as A
from .algebra import SCALAR, AlgebraShape, MValue
from .errors import MassNotOne, NegativeWeight, NotPointwiseOrdered, SpaceMismatch
from .numeric import as_rational, format_rational
from .outcomes import (
    Outcome,
    OutcomeSpace,
    outcome_from_json,
    outcome_to_json,
    require_in,
    sort_key,
    space_from_json,
    space_to_json,
    to_rational,
)

Support = Tuple[Tuple[Fraction, Outcome], ...]


def canonicalize(support: Iterable[Tuple[object, Outcome]]) -> Support:
    """Merge equal points, drop zero weights and sort.

    Raises NegativeWeight or MassNotOne when the input is not a probability
    vector.
    """
    merged = {}
    total = Fraction(0)
    for w, x in support:
        w = as_rational(w)
        if w < 0:
            raise NegativeWeight(f"negative weight {w} at {x!r}")
        total += w
        if w:
            merged[x] = merged.get(x, Fraction(0)) + w
    if total != 1:
        raise MassNotOne(f"weights sum to {total}, not 1")
    try:
        return tuple(sorted(((w, x) for x, w in merged.items()), key=lambda wx: sort_key(wx[1])))
    except TypeError as exc:
        raise SpaceMismatch(f"support mixes points from different spaces: {exc}") from None


class Dist:
    """An expectation space over ``space`` with finite support."""

    __slots__ = ("space", "support", "_mass")

    def __init__(self, space: OutcomeSpace, support: Iterable[Tuple[object, Outcome]]):
        support = canonicalize(support)
        for _, x in support:
            require_in(space, x)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "_mass", None)

    def __setattr__(self, name, value):
        raise AttributeError("Dist is immutable")

    @classmethod
    def _trusted(cls, space, support):
        d = object.__new__(cls)
        object.__setattr__(d, "space", space)
        object.__setattr__(d, "support", support)
        object.__setattr__(d, "_mass", None)
        return d

    def __eq__(self, other):
        return isinstance(other, Dist) and self.space == other.space and self.support == other.support

    def __hash__(self):
        return hash((self.space, self.support))

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        return iter(self.support)

    def __repr__(self):
        body = ", ".join(f"{format_rational(w)}: {x!r}" for w, x in self.support)
        return f"Dist[{self.space}]({{{body}}})"

    @property
    def points(self) -> Tuple[Outcome, ...]:
        return tuple(x for _, x in self.support)

    def mass(self, x: Outcome) -> Fraction:
        """Weight of a single outcome (zero off the support)."""
        if self._mass is None:
            object.__setattr__(self, "_mass", {p: w for w, p in self.support})
        return self._mass.get(x, Fraction(0))

    def to_json(self):
        return {
            "space": space_to_json(self.space),
            "support": [{"w": format_rational(w), "point": outcome_to_json(x)} for w, x in self.support],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "Dist":
        space = space_from_json(obj["space"])
        return cls(space, [(as_rational(e["w"]), outcome_from_json(e["point"])) for e in obj["support"]])

    @classmethod
    def loads(cls, text: str) -> "Dist":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class RandomVariable:
    """A total map from outcomes of ``space`` to measurement values of ``shape``."""

    space: OutcomeSpace
    fn: Callable[[Outcome], MValue]
    shape: AlgebraShape = SCALAR

    def __call__(self, w: Outcome) -> MValue:
        return A.check_shape(self.fn(w), self.shape)

    def _lift2(self, other, op):
        other = _as_rv(other, self)
        if other.space != self.space:
            raise SpaceMismatch(f"random variables on {self.space} and {other.space}")
        if other.shape != self.shape:
            raise A.ShapeError(f"random variables of shape {self.shape} and {other.shape}")
        return RandomVariable(self.space, lambda w: op(self(w), other(w)), self.shape)

    def __add__(self, other):
        return self._lift2(other, A.add)

    def __sub__(self, other):
        return self._lift2(other, A.sub)

    def __mul__(self, other):
        return self._lift2(other, A.mul)

    def __neg__(self):
        return RandomVariable(self.space, lambda w: A.neg(self(w)), self.shape)

    def scale(self, c) -> "RandomVariable":
        """Pointwise scalar action c . X."""
        c = as_rational(c)
        return RandomVariable(self.space, lambda w: A.smul(c, self(w)), self.shape)

    def after(self, f: Callable[[Outcome], Outcome], source: OutcomeSpace) -> "RandomVariable":
        """Precomposition X . f, a random variable on ``source``."""
        return RandomVariable(source, lambda w: self(f(w)), self.shape)

    def map_values(self, g: Callable[[MValue], MValue], shape: AlgebraShape = None) -> "RandomVariable":
        """Postcomposition g . X."""
        shape = self.shape if shape is None else shape
        return RandomVariable(self.space, lambda w: g(self(w)), shape)

    def norm(self) -> "RandomVariable":
        """omega -> ||X(omega)|| . 1M."""
        return RandomVariable(self.space, lambda w: A.constant(A.seminorm(self(w)), self.shape), self.shape)


def _as_rv(value, like: RandomVariable) -> RandomVariable:
    if isinstance(value, RandomVariable):
        return value
    return const_rv(like.space, value, like.shape)


def const_rv(space: OutcomeSpace, m, shape: AlgebraShape = None) -> RandomVariable:
    """The constant random variable K m."""
    if not isinstance(m, A.Vec):
        m = as_rational(m)
    shape = A.shape_of(m) if shape is None else shape
    A.check_shape(m, shape)
    return RandomVariable(space, lambda _w: m, shape)


def one_rv(space: OutcomeSpace, shape: AlgebraShape = SCALAR) -> RandomVariable:
    return const_rv(space, A.one(shape), shape)


def value_rv(space: OutcomeSpace) -> RandomVariable:
    """The embedding of a numeric space into the scalars (or of a tuple/pair of numerics into vectors)."""
    from .outcomes import ProductSpace, TupleSpace, is_numeric_space

    if is_numeric_space(space):
        return RandomVariable(space, to_rational, SCALAR)
    if isinstance(space, TupleSpace) and all(is_numeric_space(s) for s in space.items):
        return RandomVariable(space, lambda w: A.Vec(to_rational(x) for x in w.items), A.vector_shape(len(space)))
    if isinstance(space, ProductSpace) and is_numeric_space(space.fst) and is_numeric_space(space.snd):
        return RandomVariable(space, lambda w: A.Vec((to_rational(w.fst), to_rational(w.snd))), A.vector_shape(2))
    raise SpaceMismatch(f"no numeric embedding for space {space}")


def _check_space(d: Dist, X: RandomVariable):
    if d.space != X.space:
        raise SpaceMismatch(f"distribution on {d.space} but random variable on {X.space}")


def expect(d: Dist, X: RandomVariable) -> MValue:
    _check_space(d, X)
    acc = A.zero(X.shape)
    for w, x in d.support:
        acc = acc + A.smul(w, X(x))
    return acc


def dist_eq(d1: Dist, d2: Dist) -> bool:
    if d1.space != d2.space:
        raise SpaceMismatch(f"comparing distributions on {d1.space} and {d2.space}")
    return d1.support == d2.support


def center(d: Dist, X: RandomVariable) -> RandomVariable:
    return X - const_rv(X.space, expect(d, X), X.shape)


def product_moment(d: Dist, X: RandomVariable, Y: RandomVariable) -> MValue:
    return expect(d, X * Y)


def cov(d: Dist, X: RandomVariable, Y: RandomVariable) -> MValue:
    return product_moment(d, center(d, X), center(d, Y))


def var(d: Dist, X: RandomVariable) -> MValue:
    return cov(d, X, X)


def expect_mono_check(d: Dist, X: RandomVariable, Y: RandomVariable) -> bool:
    """Whether E X <= E Y, given X <= Y pointwise on the support."""
    _check_space(d, X)
    _check_space(d, Y)
    for _, x in d.support:
        if not A.le(X(x), Y(x)):
            raise NotPointwiseOrdered(f"X > Y at {x!r}")
    return A.le(expect(d, X), expect(d, Y))
