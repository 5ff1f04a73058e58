"""Markov kernels: maps from outcomes to distributions, and their algebra."""

from __future__ import annotations

from typing import Callable

from . import combinators as C
from .core import Dist
from .errors import ShapeError, SpaceMismatch
from .outcomes import BOOL, L, R, OutcomeSpace, Pair, ProductSpace, SumSpace, Tag, TupleSpace, Tuple_


_STRUCTURE = {ProductSpace: Pair, SumSpace: Tag, TupleSpace: Tuple_}


class Kernel:
    """A kernel from ``source`` to distributions over ``target``.

    Kernels are pure, so results are cached per outcome.
    """

    __slots__ = ("source", "target", "_fn", "_cache")

    def __init__(self, source: OutcomeSpace, target: OutcomeSpace, fn: Callable[..., Dist]):
        self.source = source
        self.target = target
        self._fn = fn
        self._cache = {}

    def __call__(self, w) -> Dist:
        try:
            return self._cache[w]
        except KeyError:
            pass
        if not self.source.contains(w):
            shape = _STRUCTURE.get(type(self.source))
            if shape is not None and not isinstance(w, shape):
                raise ShapeError(f"{w!r} does not have the shape of {self.source}")
            raise SpaceMismatch(f"{w!r} is not in the kernel source {self.source}")
        d = self._fn(w)
        if d.space != self.target:
            raise SpaceMismatch(f"kernel produced {d.space}, declared {self.target}")
        self._cache[w] = d
        return d

    def __repr__(self):
        return f"Kernel({self.source} -> {self.target})"


def _expect_target(k: Kernel, space: OutcomeSpace, what: str):
    if k.target != space:
        raise SpaceMismatch(f"{what}: {k.target} != {space}")


def from_function(source: OutcomeSpace, target: OutcomeSpace, f) -> Kernel:
    """Deterministic kernel ``dirac . f``."""
    return Kernel(source, target, lambda w: C.dirac(f(w), target))


def kernel_id(space: OutcomeSpace) -> Kernel:
    return Kernel(space, space, lambda w: C.dirac(w, space))


pure_kernel = kernel_id


def const_kernel(source: OutcomeSpace, d: Dist) -> Kernel:
    return Kernel(source, d.space, lambda _w: d)


def kernel_compose(f: Kernel, g: Kernel) -> Kernel:
    """``f`` after ``g``."""
    if g.target != f.source:
        raise SpaceMismatch(f"cannot compose: {g.target} != {f.source}")
    return Kernel(g.source, f.target, lambda w: C.bind(g(w), f))


def kernel_diag(f: Kernel, g: Kernel) -> Kernel:
    if f.source != g.source:
        raise SpaceMismatch(f"diag needs one source, got {f.source} and {g.source}")
    return Kernel(f.source, ProductSpace(f.target, g.target), lambda w: C.product(f(w), g(w)))


def kernel_tensor(f: Kernel, g: Kernel) -> Kernel:
    def run(w):
        if not isinstance(w, Pair):
            raise ShapeError(f"tensor kernel needs a pair, got {w!r}")
        return C.product(f(w.fst), g(w.snd))

    return Kernel(ProductSpace(f.source, g.source), ProductSpace(f.target, g.target), run)


def proj1_kernel(space: ProductSpace) -> Kernel:
    return from_function(space, space.fst, lambda p: p.fst)


def proj2_kernel(space: ProductSpace) -> Kernel:
    return from_function(space, space.snd, lambda p: p.snd)


def inj1_kernel(left: OutcomeSpace, right: OutcomeSpace) -> Kernel:
    return from_function(left, SumSpace(left, right), lambda w: Tag(L, w))


def inj2_kernel(left: OutcomeSpace, right: OutcomeSpace) -> Kernel:
    return from_function(right, SumSpace(left, right), lambda w: Tag(R, w))


def kernel_case(f: Kernel, g: Kernel) -> Kernel:
    """Route ``Tag L a`` to ``f(a)`` and ``Tag R b`` to ``g(b)``."""
    _expect_target(g, f.target, "case branches disagree on target")

    def run(w):
        if not isinstance(w, Tag):
            raise ShapeError(f"case kernel needs a tagged outcome, got {w!r}")
        return f(w.inner) if w.side == L else g(w.inner)

    return Kernel(SumSpace(f.source, g.source), f.target, run)


def kernel_sum(f: Kernel, g: Kernel) -> Kernel:
    """Apply the side-matching kernel and re-tag the result."""
    target = SumSpace(f.target, g.target)

    def run(w):
        if not isinstance(w, Tag):
            raise ShapeError(f"sum kernel needs a tagged outcome, got {w!r}")
        if w.side == L:
            return C.pushforward(lambda y: Tag(L, y), f(w.inner), target)
        return C.pushforward(lambda y: Tag(R, y), g(w.inner), target)

    return Kernel(SumSpace(f.source, g.source), target, run)


def kernel_if(test: Kernel, then_k: Kernel, else_k: Kernel) -> Kernel:
    _expect_target(test, BOOL, "test kernel must produce booleans")
    if not (test.source == then_k.source == else_k.source):
        raise SpaceMismatch("if-kernel branches must share the test's source")
    _expect_target(else_k, then_k.target, "if-kernel branches disagree on target")
    return Kernel(
        test.source,
        then_k.target,
        lambda w: C.bind(test(w), Kernel(BOOL, then_k.target, lambda b: then_k(w) if b.side == L else else_k(w))),
    )


def iterate(step: Kernel, loop: Kernel) -> Kernel:
    """One unrolling: run ``step``; continue with ``loop`` on L, stop on R."""
    if not isinstance(step.target, SumSpace):
        raise SpaceMismatch("step kernel must target a sum space")
    return kernel_compose(kernel_case(loop, kernel_id(step.target.right)), step)


def fix_approx(fuel: int, tail: Kernel, phi: Callable[[Kernel], Kernel]) -> Kernel:
    """``phi`` applied ``fuel`` times to ``tail``."""
    k = tail
    for _ in range(fuel):
        k = phi(k)
    return k


def kernel_unfoldn(fuel: int, tail: Kernel, step: Kernel) -> Kernel:
    """Bounded unfolding of ``step`` with at most ``fuel`` steps; leftover state goes through ``tail``."""
    if step.source != tail.source:
        raise SpaceMismatch("step and tail must share a source")
    if step.target != SumSpace(step.source, tail.target):
        raise SpaceMismatch(f"step must target {SumSpace(step.source, tail.target)}, got {step.target}")
    return fix_approx(fuel, tail, lambda loop: iterate(step, loop))
