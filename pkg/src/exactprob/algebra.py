"""Measurement values: the codomain of random variables.

Two algebras are provided. The scalar algebra is the rational field itself
(values are plain ``Fraction``); trace is the identity and the seminorm is the
absolute value. The vector algebra of dimension n has :class:`Vec` values with
componentwise ring operations, componentwise order, the all-ones vector as
unit, trace = mean of components and seminorm = max absolute component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import ShapeError
from .numeric import as_rational, format_rational


@dataclass(frozen=True)
class AlgebraShape:
    """``dim is None`` is the scalar algebra, otherwise a vector algebra."""

    dim: Optional[int] = None

    def __post_init__(self):
        if self.dim is not None and self.dim < 1:
            raise ShapeError(f"vector dimension must be >= 1, got {self.dim}")

    @property
    def is_scalar(self) -> bool:
        return self.dim is None

    def __str__(self):
        return "scalar" if self.dim is None else f"vector({self.dim})"


SCALAR = AlgebraShape()


def vector_shape(dim: int) -> AlgebraShape:
    return AlgebraShape(dim)


class Vec:
    """Immutable fixed-length vector of rationals."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        es = tuple(as_rational(e) for e in entries)
        if not es:
            raise ShapeError("a vector needs at least one component")
        object.__setattr__(self, "entries", es)

    def __setattr__(self, name, value):
        raise AttributeError("Vec is immutable")

    @property
    def shape(self) -> AlgebraShape:
        return AlgebraShape(len(self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, Vec) and self.entries == other.entries

    def __hash__(self):
        return hash(("Vec", self.entries))

    def __repr__(self):
        return f"Vec([{', '.join(format_rational(e) for e in self.entries)}])"

    def _zip(self, other):
        if not isinstance(other, Vec) or len(other) != len(self):
            raise ShapeError(f"shape mismatch: {shape_of(self)} vs {shape_of(other)}")
        return zip(self.entries, other.entries)

    def __add__(self, other):
        return Vec(a + b for a, b in self._zip(other))

    def __sub__(self, other):
        return Vec(a - b for a, b in self._zip(other))

    def __mul__(self, other):
        if isinstance(other, Vec):
            return Vec(a * b for a, b in self._zip(other))
        c = as_rational(other)
        return Vec(a * c for a in self.entries)

    def __rmul__(self, other):
        c = as_rational(other)
        return Vec(c * a for a in self.entries)

    def __neg__(self):
        return Vec(-a for a in self.entries)


MValue = Union[Fraction, Vec]


def shape_of(v: MValue) -> AlgebraShape:
    if isinstance(v, Vec):
        return v.shape
    if isinstance(v, Fraction):
        return SCALAR
    raise ShapeError(f"not a measurement value: {v!r}")


def check_shape(v: MValue, shape: AlgebraShape) -> MValue:
    if shape_of(v) != shape:
        raise ShapeError(f"expected {shape}, got {shape_of(v)}")
    return v


def _same(a: MValue, b: MValue) -> AlgebraShape:
    sa, sb = shape_of(a), shape_of(b)
    if sa != sb:
        raise ShapeError(f"shape mismatch: {sa} vs {sb}")
    return sa


def zero(shape: AlgebraShape = SCALAR) -> MValue:
    return Fraction(0) if shape.is_scalar else Vec([0] * shape.dim)


def one(shape: AlgebraShape = SCALAR) -> MValue:
    return Fraction(1) if shape.is_scalar else Vec([1] * shape.dim)


def constant(c, shape: AlgebraShape = SCALAR) -> MValue:
    """The scalar c acting on the unit: c . 1M."""
    return smul(as_rational(c), one(shape))


def add(a: MValue, b: MValue) -> MValue:
    _same(a, b)
    return a + b


def sub(a: MValue, b: MValue) -> MValue:
    _same(a, b)
    return a - b


def neg(a: MValue) -> MValue:
    shape_of(a)
    return -a


def mul(a: MValue, b: MValue) -> MValue:
    _same(a, b)
    return a * b


def smul(c, a: MValue) -> MValue:
    """Left scalar action c . a."""
    shape_of(a)
    return as_rational(c) * a


def smul_right(a: MValue, c) -> MValue:
    """Right scalar action a . c; equal to the left action since the field is commutative."""
    shape_of(a)
    return a * as_rational(c)


def le(a: MValue, b: MValue) -> bool:
    """Partial order: usual order on scalars, componentwise on vectors."""
    if _same(a, b).is_scalar:
        return a <= b
    return all(x <= y for x, y in zip(a, b))


def trace(v: MValue) -> Fraction:
    if shape_of(v).is_scalar:
        return v
    return sum(v.entries, Fraction(0)) / len(v)


def seminorm(v: MValue) -> Fraction:
    if shape_of(v).is_scalar:
        return abs(v)
    return max(abs(e) for e in v.entries)


def format_mvalue(v: MValue) -> str:
    if shape_of(v).is_scalar:
        return format_rational(v)
    return "[" + ", ".join(format_rational(e) for e in v.entries) + "]"


def mvalue_to_json(v: MValue):
    if shape_of(v).is_scalar:
        return format_rational(v)
    return [format_rational(e) for e in v.entries]


def mvalue_from_json(obj) -> MValue:
    if isinstance(obj, list):
        return Vec(as_rational(e) for e in obj)
    return as_rational(obj)
