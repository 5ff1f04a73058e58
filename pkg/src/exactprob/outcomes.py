"""Sample-space points and sample-space descriptors.

Every carrier has structural equality. Outcomes are hashable frozen
dataclasses; spaces are frozen descriptors with a membership test. Within one
space, outcomes are totally ordered (lexicographic on composites, L < R on
tags), which is what makes distribution canonical forms possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .errors import SpaceMismatch
from .numeric import Proportion, as_rational, format_rational

L = "L"
R = "R"


class Outcome:
    """Marker base class for sample-space points."""

    __slots__ = ()


@dataclass(frozen=True)
class Unit(Outcome):
    def __repr__(self):
        return "Unit()"


@dataclass(frozen=True)
class Tag(Outcome):
    side: str
    inner: Outcome

    def __post_init__(self):
        if self.side not in (L, R):
            raise ValueError(f"tag side must be 'L' or 'R', got {self.side!r}")


@dataclass(frozen=True)
class Pair(Outcome):
    fst: Outcome
    snd: Outcome


@dataclass(frozen=True)
class Tuple_(Outcome):
    items: Tuple[Outcome, ...]

    def __post_init__(self):
        items = tuple(self.items)
        if not items:
            raise ValueError("tuples have length >= 1")
        object.__setattr__(self, "items", items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


@dataclass(frozen=True)
class FinVal(Outcome):
    bound: int
    index: int

    def __post_init__(self):
        if self.bound < 1 or not 0 <= self.index < self.bound:
            raise ValueError(f"FinVal index {self.index} out of range for bound {self.bound}")


@dataclass(frozen=True)
class NatVal(Outcome):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"natural numbers are >= 0, got {self.n}")


@dataclass(frozen=True)
class IntVal(Outcome):
    z: int


@dataclass(frozen=True)
class RatVal(Outcome):
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))


@dataclass(frozen=True)
class PropVal(Outcome):
    p: Proportion

    def __post_init__(self):
        if not isinstance(self.p, Proportion):
            object.__setattr__(self, "p", Proportion(as_rational(self.p)))


UNIT = Unit()
SUCCESS = Tag(L, UNIT)
FAILURE = Tag(R, UNIT)


def tuple_of(items: Iterable[Outcome]) -> Tuple_:
    return Tuple_(tuple(items))


# ---------------------------------------------------------------- spaces


class OutcomeSpace:
    """Marker base class for sample-space descriptors."""

    __slots__ = ()

    def contains(self, w: Outcome) -> bool:  # pragma: no cover - overridden
        raise NotImplementedError


@dataclass(frozen=True)
class UnitSpace(OutcomeSpace):
    def contains(self, w):
        return isinstance(w, Unit)

    def __str__(self):
        return "unit"


@dataclass(frozen=True)
class FinSpace(OutcomeSpace):
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("fin(k) needs k >= 1")

    def contains(self, w):
        return isinstance(w, FinVal) and w.bound == self.k

    def __str__(self):
        return f"fin({self.k})"


@dataclass(frozen=True)
class NatSpace(OutcomeSpace):
    def contains(self, w):
        return isinstance(w, NatVal)

    def __str__(self):
        return "nat"


@dataclass(frozen=True)
class IntSpace(OutcomeSpace):
    def contains(self, w):
        return isinstance(w, IntVal)

    def __str__(self):
        return "int"


@dataclass(frozen=True)
class RatSpace(OutcomeSpace):
    def contains(self, w):
        return isinstance(w, RatVal)

    def __str__(self):
        return "rat"


@dataclass(frozen=True)
class PropSpace(OutcomeSpace):
    def contains(self, w):
        return isinstance(w, PropVal)

    def __str__(self):
        return "proportion"


@dataclass(frozen=True)
class ProductSpace(OutcomeSpace):
    fst: OutcomeSpace
    snd: OutcomeSpace

    def contains(self, w):
        return isinstance(w, Pair) and self.fst.contains(w.fst) and self.snd.contains(w.snd)

    def __str__(self):
        return f"({self.fst} x {self.snd})"


@dataclass(frozen=True)
class SumSpace(OutcomeSpace):
    left: OutcomeSpace
    right: OutcomeSpace

    def contains(self, w):
        if not isinstance(w, Tag):
            return False
        return (self.left if w.side == L else self.right).contains(w.inner)

    def __str__(self):
        if self == BOOL:
            return "bool"
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class TupleSpace(OutcomeSpace):
    """Flat n-fold product; homogeneous instances are the powers S^n."""

    items: Tuple[OutcomeSpace, ...]

    def __post_init__(self):
        items = tuple(self.items)
        if not items:
            raise ValueError("power exponent must be >= 1")
        object.__setattr__(self, "items", items)

    def contains(self, w):
        return (
            isinstance(w, Tuple_)
            and len(w.items) == len(self.items)
            and all(s.contains(x) for s, x in zip(self.items, w.items))
        )

    def __len__(self):
        return len(self.items)

    def __str__(self):
        first = self.items[0]
        if all(s == first for s in self.items):
            return f"{first}^{len(self.items)}"
        return "(" + " x ".join(str(s) for s in self.items) + ")"


@dataclass(frozen=True)
class IndexedSumSpace(OutcomeSpace):
    """Tagged copies of k spaces; points are Pair(FinVal(k, i), point of space i)."""

    components: Tuple[OutcomeSpace, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def contains(self, w):
        k = len(self.components)
        return (
            isinstance(w, Pair)
            and isinstance(w.fst, FinVal)
            and w.fst.bound == k
            and self.components[w.fst.index].contains(w.snd)
        )

    def __str__(self):
        return "sum[" + ", ".join(str(s) for s in self.components) + "]"


UNIT_SPACE = UnitSpace()
BOOL = SumSpace(UNIT_SPACE, UNIT_SPACE)
NAT = NatSpace()
INT = IntSpace()
RAT = RatSpace()
PROP = PropSpace()


def power(base: OutcomeSpace, n: int) -> TupleSpace:
    if n < 1:
        raise ValueError("power exponent must be >= 1")
    return TupleSpace((base,) * n)


def product(a: OutcomeSpace, b: OutcomeSpace) -> ProductSpace:
    return ProductSpace(a, b)


def fin(k: int) -> FinSpace:
    return FinSpace(k)


def require_in(space: OutcomeSpace, w: Outcome) -> Outcome:
    if not space.contains(w):
        raise SpaceMismatch(f"{w!r} is not a point of {space}")
    return w


# ---------------------------------------------------------------- order

_KIND_RANK = {Unit: 0, Tag: 1, Pair: 2, Tuple_: 3, FinVal: 4, NatVal: 5, IntVal: 6, RatVal: 7, PropVal: 8}


def sort_key(w: Outcome):
    """Key realizing the canonical total order on any single space."""
    t = type(w)
    if t is NatVal:
        return w.n
    if t is FinVal:
        return w.index
    if t is IntVal:
        return w.z
    if t is RatVal:
        return w.q
    if t is PropVal:
        return w.p.value
    if t is Tag:
        return (0 if w.side == L else 1, sort_key(w.inner))
    if t is Pair:
        return (sort_key(w.fst), sort_key(w.snd))
    if t is Tuple_:
        return tuple(sort_key(x) for x in w.items)
    if t is Unit:
        return ()
    raise TypeError(f"not an outcome: {w!r}")


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def outcome_cmp(a: Outcome, b: Outcome) -> int:
    """Three-way comparison (-1, 0, 1). Raises SpaceMismatch across spaces."""
    ta, tb = type(a), type(b)
    if ta is not tb:
        raise SpaceMismatch(f"cannot compare {a!r} with {b!r}")
    if ta is Unit:
        return 0
    if ta is Tag:
        if a.side != b.side:
            return -1 if a.side == L else 1
        return outcome_cmp(a.inner, b.inner)
    if ta is Pair:
        return outcome_cmp(a.fst, b.fst) or outcome_cmp(a.snd, b.snd)
    if ta is Tuple_:
        if len(a.items) != len(b.items):
            raise SpaceMismatch(f"tuples of different length: {a!r}, {b!r}")
        for x, y in zip(a.items, b.items):
            c = outcome_cmp(x, y)
            if c:
                return c
        return 0
    if ta is FinVal and a.bound != b.bound:
        raise SpaceMismatch(f"fin({a.bound}) vs fin({b.bound})")
    return _cmp(sort_key(a), sort_key(b))


def outcome_eq(a: Outcome, b: Outcome) -> bool:
    return outcome_cmp(a, b) == 0


# ---------------------------------------------------------------- inference


def space_of(points: Iterable[Outcome]) -> OutcomeSpace:
    """Smallest descriptor covering the given points.

    Tags only determine the side they occupy, so a sum space is inferred only
    when both sides are witnessed.
    """
    pts = list(points)
    if not pts:
        raise SpaceMismatch("cannot infer a space from no points")
    kinds = {type(p) for p in pts}
    if len(kinds) != 1:
        raise SpaceMismatch(f"points from different spaces: {sorted(k.__name__ for k in kinds)}")
    kind = kinds.pop()
    if kind is Unit:
        return UNIT_SPACE
    if kind is NatVal:
        return NAT
    if kind is IntVal:
        return INT
    if kind is RatVal:
        return RAT
    if kind is PropVal:
        return PROP
    if kind is FinVal:
        bounds = {p.bound for p in pts}
        if len(bounds) != 1:
            raise SpaceMismatch(f"fin points with different bounds {sorted(bounds)}")
        return FinSpace(bounds.pop())
    if kind is Pair:
        return ProductSpace(space_of(p.fst for p in pts), space_of(p.snd for p in pts))
    if kind is Tuple_:
        lengths = {len(p.items) for p in pts}
        if len(lengths) != 1:
            raise SpaceMismatch("tuples of different lengths")
        n = lengths.pop()
        return TupleSpace(tuple(space_of(p.items[i] for p in pts) for i in range(n)))
    if kind is Tag:
        lefts = [p.inner for p in pts if p.side == L]
        rights = [p.inner for p in pts if p.side == R]
        if not lefts or not rights:
            raise SpaceMismatch("cannot infer a sum space from one side only; pass the space explicitly")
        return SumSpace(space_of(lefts), space_of(rights))
    raise SpaceMismatch(f"cannot infer a space for {kind.__name__}")


# ---------------------------------------------------------------- scalar view


def to_rational(w: Outcome) -> Fraction:
    """Canonical embedding of numeric outcomes into the rationals.

    Booleans embed as success -> 1, failure -> 0.
    """
    t = type(w)
    if t is NatVal:
        return Fraction(w.n)
    if t is IntVal:
        return Fraction(w.z)
    if t is RatVal:
        return w.q
    if t is PropVal:
        return w.p.value
    if t is FinVal:
        return Fraction(w.index)
    if w == SUCCESS:
        return Fraction(1)
    if w == FAILURE:
        return Fraction(0)
    raise SpaceMismatch(f"{w!r} has no rational value")


def is_numeric_space(space: OutcomeSpace) -> bool:
    return isinstance(space, (NatSpace, IntSpace, RatSpace, PropSpace, FinSpace)) or space == BOOL


# ---------------------------------------------------------------- JSON


def outcome_to_json(w: Outcome):
    t = type(w)
    if t is Unit:
        return {"unit": {}}
    if t is Tag:
        return {"tag": {"side": w.side, "inner": outcome_to_json(w.inner)}}
    if t is Pair:
        return {"pair": [outcome_to_json(w.fst), outcome_to_json(w.snd)]}
    if t is Tuple_:
        return {"tuple": [outcome_to_json(x) for x in w.items]}
    if t is FinVal:
        return {"fin": {"bound": w.bound, "index": w.index}}
    if t is NatVal:
        return {"nat": w.n}
    if t is IntVal:
        return {"int": w.z}
    if t is RatVal:
        return {"rat": format_rational(w.q)}
    if t is PropVal:
        return {"prop": format_rational(w.p.value)}
    raise TypeError(f"not an outcome: {w!r}")


def outcome_from_json(obj) -> Outcome:
    ((key, val),) = obj.items()
    if key == "unit":
        return UNIT
    if key == "tag":
        return Tag(val["side"], outcome_from_json(val["inner"]))
    if key == "pair":
        return Pair(outcome_from_json(val[0]), outcome_from_json(val[1]))
    if key == "tuple":
        return Tuple_(tuple(outcome_from_json(x) for x in val))
    if key == "fin":
        return FinVal(val["bound"], val["index"])
    if key == "nat":
        return NatVal(val)
    if key == "int":
        return IntVal(val)
    if key == "rat":
        return RatVal(as_rational(val))
    if key == "prop":
        return PropVal(Proportion(as_rational(val)))
    raise ValueError(f"unknown outcome tag {key!r}")


def space_to_json(s: OutcomeSpace):
    t = type(s)
    if t is UnitSpace:
        return {"unit": {}}
    if t is FinSpace:
        return {"fin": s.k}
    if t is NatSpace:
        return {"nat": {}}
    if t is IntSpace:
        return {"int": {}}
    if t is RatSpace:
        return {"rat": {}}
    if t is PropSpace:
        return {"proportion": {}}
    if t is ProductSpace:
        return {"product": [space_to_json(s.fst), space_to_json(s.snd)]}
    if t is SumSpace:
        return {"sum": [space_to_json(s.left), space_to_json(s.right)]}
    if t is TupleSpace:
        return {"tuple": [space_to_json(x) for x in s.items]}
    if t is IndexedSumSpace:
        return {"indexed_sum": [space_to_json(x) for x in s.components]}
    raise TypeError(f"not a space: {s!r}")


def space_from_json(obj) -> OutcomeSpace:
    ((key, val),) = obj.items()
    simple = {"unit": UNIT_SPACE, "nat": NAT, "int": INT, "rat": RAT, "proportion": PROP}
    if key in simple:
        return simple[key]
    if key == "fin":
        return FinSpace(val)
    if key == "product":
        return ProductSpace(space_from_json(val[0]), space_from_json(val[1]))
    if key == "sum":
        return SumSpace(space_from_json(val[0]), space_from_json(val[1]))
    if key == "tuple":
        return TupleSpace(tuple(space_from_json(x) for x in val))
    if key == "indexed_sum":
        return IndexedSumSpace(tuple(space_from_json(x) for x in val))
    raise ValueError(f"unknown space tag {key!r}")
