"""Primitive and derived operations that build distributions from distributions.

The primitives are ``dirac``, ``pushforward``, ``ap``, ``bind`` and ``mix``;
everything else here is defined in terms of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .core import Dist
from .errors import ArityError, EmptyMixture, MapDomainError, SpaceMismatch
from .numeric import Simplex, as_proportion, as_rational, simplex
from .outcomes import (
    L,
    R,
    FinSpace,
    FinVal,
    IndexedSumSpace,
    Outcome,
    OutcomeSpace,
    Pair,
    ProductSpace,
    SumSpace,
    Tag,
    TupleSpace,
    Tuple_,
    space_of,
)

Mapping = Callable[[Outcome], Outcome]


def dirac(w: Outcome, space: Optional[OutcomeSpace] = None) -> Dist:
    if space is None:
        space = space_of([w])
    return Dist(space, [(1, w)])


def pushforward(f: Mapping, d: Dist, target: Optional[OutcomeSpace] = None) -> Dist:
    """Image distribution of ``d`` under ``f``.

    When ``target`` is omitted it is inferred from the images, which fails for
    one-sided tags; pass it explicitly in that case.
    """
    image = []
    for w, x in d.support:
        try:
            y = f(x)
        except (KeyError, IndexError, TypeError, ValueError, AttributeError) as exc:
            raise MapDomainError(f"mapping undefined at {x!r}: {exc}") from None
        if not isinstance(y, Outcome):
            raise MapDomainError(f"mapping returned non-outcome {y!r} at {x!r}")
        image.append((w, y))
    if target is None:
        target = space_of(y for _, y in image)
    elif not all(target.contains(y) for _, y in image):
        bad = next(y for _, y in image if not target.contains(y))
        raise MapDomainError(f"mapping leaves the target space {target}: {bad!r}")
    return Dist(target, image)


def bind(d: Dist, k) -> Dist:
    """Sequential composition: draw from ``d``, then from ``k`` at the result.

    ``k`` is a Kernel or any callable from outcomes to distributions sharing
    one space.
    """
    source = getattr(k, "source", None)
    if source is not None and source != d.space:
        raise SpaceMismatch(f"kernel source {source} does not match distribution space {d.space}")
    target = getattr(k, "target", None)
    acc = []
    for w, x in d.support:
        inner = k(x)
        if target is None:
            target = inner.space
        elif inner.space != target:
            raise SpaceMismatch(f"kernel returned {inner.space}, expected {target}")
        acc.extend((w * v, y) for v, y in inner.support)
    return Dist(target, acc)


def ap(df: Sequence, dx: Dist, target: Optional[OutcomeSpace] = None) -> Dist:
    """Apply a distribution over functions to a distribution over arguments.

    ``df`` is a weighted family ``[(weight, mapping), ...]`` forming a simplex.
    Functions are indexed by position so no equality on functions is needed:
    the result is the image of ``index-dist x dx`` under ``(i, x) -> f_i(x)``.
    """
    weights = [as_rational(w) for w, _ in df]
    fns = [f for _, f in df]
    if not fns:
        raise EmptyMixture("ap needs at least one function")
    index = Dist(FinSpace(len(fns)), [(w, FinVal(len(fns), i)) for i, w in enumerate(weights)])
    joint = Dist(ProductSpace(index.space, dx.space), [(wi * wx, Pair(i, x)) for wi, i in index.support for wx, x in dx.support])
    return pushforward(lambda p: fns[p.fst.index](p.snd), joint, target)


def mix(branches: Sequence[Dist], s) -> Dist:
    """Weighted mixture; branch i's points are tagged ``Pair(FinVal(k, i), point)``.

    A single branch is returned untagged.
    """
    s = s if isinstance(s, Simplex) else simplex(s)
    if len(branches) != len(s):
        raise ArityError(f"{len(branches)} branches but {len(s)} weights")
    if len(branches) == 1:
        return branches[0]
    k = len(branches)
    space = IndexedSumSpace(tuple(b.space for b in branches))
    return Dist(space, [(si * w, Pair(FinVal(k, i), x)) for i, (si, b) in enumerate(zip(s, branches)) for w, x in b.support])


def mix_n(d: Dist, s) -> Dist:
    """k tagged copies of one distribution weighted by ``s``."""
    s = s if isinstance(s, Simplex) else simplex(s)
    return mix([d] * len(s), s)


def untag(d: Dist) -> Dist:
    """Forget the branch tags of a mixture whose branches share one space."""
    if not isinstance(d.space, IndexedSumSpace):
        return d
    spaces = set(d.space.components)
    if len(spaces) != 1:
        raise SpaceMismatch("cannot untag a mixture over different spaces")
    return pushforward(lambda p: p.snd, d, spaces.pop())


def map2(op: Callable[[Outcome, Outcome], Outcome], d1: Dist, d2: Dist, target: Optional[OutcomeSpace] = None) -> Dist:
    """Lift a binary outcome map: ``ap(map(curry op, d1), d2)``."""
    df = [(w, (lambda a: lambda b: op(a, b))(a)) for w, a in d1.support]
    return ap(df, d2, target)


def product(d1: Dist, d2: Dist) -> Dist:
    return map2(Pair, d1, d2, ProductSpace(d1.space, d2.space))


def _pair_space(d: Dist) -> ProductSpace:
    if not isinstance(d.space, ProductSpace):
        raise SpaceMismatch(f"expected a product space, got {d.space}")
    return d.space


def marginal1(d: Dist) -> Dist:
    return pushforward(lambda p: p.fst, d, _pair_space(d).fst)


def marginal2(d: Dist) -> Dist:
    return pushforward(lambda p: p.snd, d, _pair_space(d).snd)


def _flatten(n: int) -> Mapping:
    def go(x):
        items = []
        for _ in range(n - 1):
            items.append(x.fst)
            x = x.snd
        items.append(x)
        return Tuple_(tuple(items))

    return go


def product_n(ds: Sequence[Dist]) -> Dist:
    """Independent product of ``ds``, right-nested internally and exposed as flat tuples."""
    ds = list(ds)
    if not ds:
        raise ArityError("product_n needs at least one factor")
    nested = ds[-1]
    for d in reversed(ds[:-1]):
        nested = product(d, nested)
    return pushforward(_flatten(len(ds)), nested, TupleSpace(tuple(d.space for d in ds)))


def power_n(d: Dist, n: int) -> Dist:
    return product_n([d] * n)


def marginal_i(d: Dist, i: int) -> Dist:
    if not isinstance(d.space, TupleSpace):
        raise SpaceMismatch(f"marginal_i needs a tuple space, got {d.space}")
    if not 0 <= i < len(d.space):
        raise ArityError(f"component {i} out of range for {d.space}")
    return pushforward(lambda t: t.items[i], d, d.space.items[i])


@dataclass(frozen=True)
class Monoid:
    """An associative operation with unit on the points of ``space``."""

    op: Callable[[Outcome, Outcome], Outcome]
    unit: Outcome
    space: OutcomeSpace


def convolution(monoid: Monoid, d1: Dist, d2: Dist) -> Dist:
    return pushforward(lambda p: monoid.op(p.fst, p.snd), product(d1, d2), monoid.space)


def unit_dist(monoid: Monoid) -> Dist:
    return dirac(monoid.unit, monoid.space)


def convolution_fold(monoid: Monoid, n: int, branch: Callable[[int], Dist]) -> Dist:
    """``branch(0) * branch(1) * ... * branch(n-1)`` folded left to right."""
    if n == 0:
        return unit_dist(monoid)
    acc = branch(0)
    for i in range(1, n):
        acc = convolution(monoid, acc, branch(i))
    return acc


def binary_mixture(d1: Dist, p, d2: Dist) -> Dist:
    """Mixture over the sum space: left with probability p, right with 1 - p."""
    p = as_proportion(p)
    m = mix([d1, d2], [p.value, 1 - p.value])
    return pushforward(lambda t: Tag(L if t.fst.index == 0 else R, t.snd), m, SumSpace(d1.space, d2.space))


def choose(p, d1: Dist, d2: Dist) -> Dist:
    if d1.space != d2.space:
        raise SpaceMismatch(f"choose needs one space, got {d1.space} and {d2.space}")
    return pushforward(lambda t: t.inner, binary_mixture(d1, p, d2), d1.space)


def uniform_component_mixture(dists: Sequence[Dist]) -> Dist:
    """Equal-weight mixture of distributions on one space, by nested ``choose``."""
    dists = list(dists)
    if not dists:
        raise EmptyMixture("uniform mixture of nothing")
    acc = dists[-1]
    for j in range(len(dists) - 2, -1, -1):
        acc = choose(Fraction(1, len(dists) - j), dists[j], acc)
    return acc


def uniform_tuple_mixture(rows: Sequence[Sequence[Outcome]], space: Optional[TupleSpace] = None) -> Dist:
    rows = [Tuple_(tuple(r)) for r in rows]
    if not rows:
        raise EmptyMixture("uniform mixture of nothing")
    space = space_of(rows) if space is None else space
    return uniform_component_mixture([dirac(r, space) for r in rows])


def uniform_mixture(points: Sequence[Outcome], space: Optional[OutcomeSpace] = None) -> Dist:
    points = list(points)
    if not points:
        raise EmptyMixture("uniform mixture of nothing")
    space = space_of(points) if space is None else space
    return uniform_component_mixture([dirac(x, space) for x in points])
