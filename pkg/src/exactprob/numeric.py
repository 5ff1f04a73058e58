"""Exact scalars and the constrained numeric types built on them.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

from .errors import EmptySimplex, NotAProportion, UndefinedRatio, ZeroDenominator

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_TEXT = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def make_rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, rationals and rational text to a Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Proportion):
        return value.value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return make_rational(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_TEXT.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(num, den)


def format_rational(q: Fraction) -> str:
    # str(Fraction) already gives "-55/68" and "9" for integers
    return str(q)


@dataclass(frozen=True)
class Proportion:
    """A rational in the closed unit interval."""

    value: Fraction

    def __post_init__(self):
        v = as_rational(self.value)
        if not 0 <= v <= 1:
            raise NotAProportion(f"{v} is not in [0, 1]")
        object.__setattr__(self, "value", v)

    @property
    def complement(self) -> "Proportion":
        return Proportion(1 - self.value)

    def __str__(self):
        return format_rational(self.value)


def as_proportion(p) -> Proportion:
    return p if isinstance(p, Proportion) else Proportion(as_rational(p))


@dataclass(frozen=True)
class Simplex:
    """Nonnegative weights summing to exactly one. Zero weights are allowed."""

    weights: tuple

    def __post_init__(self):
        ws = tuple(as_rational(w) for w in self.weights)
        if not ws:
            raise EmptySimplex("a simplex needs at least one weight")
        if any(w < 0 for w in ws):
            raise NotAProportion(f"negative simplex weight in {ws}")
        if sum(ws) != 1:
            raise NotAProportion(f"simplex weights sum to {sum(ws)}, not 1")
        object.__setattr__(self, "weights", ws)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def simplex(weights: Iterable[RationalLike]) -> Simplex:
    return Simplex(tuple(weights))


def uniform_simplex(k: int) -> Simplex:
    if k < 1:
        raise EmptySimplex(f"uniform simplex needs k >= 1, got {k}")
    return Simplex((Fraction(1, k),) * k)


def proportion_to_simplex(p) -> Simplex:
    p = as_proportion(p)
    return Simplex((p.value, 1 - p.value))


def count_ratio(m: int, n: int) -> Proportion:
    """The proportion m/(m+n) of successes among m successes and n failures."""
    if m < 0 or n < 0:
        raise UndefinedRatio(f"counts must be natural numbers, got ({m}, {n})")
    if m + n == 0:
        raise UndefinedRatio("m/(m+n) is undefined for m = n = 0")
    return Proportion(Fraction(m, m + n))
