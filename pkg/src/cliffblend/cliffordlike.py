"""Clifford-like parallelisms: blends of the left and right Clifford parallelism.

A Clifford-like parallelism is fixed by choosing, for every isomorphism type
of maximal subfield, whether lines of that type use their left or their right
parallel class.  Isomorphism types over Q are square classes, so a blend is
described by the set of square classes that go left (the *chooser*).
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .blendcore import FinitePartition
from .exactnum import same_square_class, squarefree_part
from .doublespace import (
    LEFT,
    RIGHT,
    Side,
    class_line_through,
    is_parallel,
    line_from_generator,
    subfield_invariant,
    subfield_square,
    through_one,
    transversal,
)
from .projgeom import Line, Point, incident, join, meet, random_point
from .quat import HAMILTON, AlgebraSpec

DEFAULT_PROBE_BOUND = 10


class Kind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    BLEND = "blend"


@dataclass(frozen=True)
class ParallelismDescriptor:
    kind: Kind
    chooser: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "chooser", frozenset(self.chooser))
        if self.kind is not Kind.BLEND and self.chooser:
            raise ValueError("only blends carry a chooser set")
        for s in self.chooser:
            if not isinstance(s, int) or s == 0 or squarefree_part(s) != s:
                raise ValueError(f"chooser entries must be squarefree nonzero integers, got {s}")

    @classmethod
    def left(cls) -> "ParallelismDescriptor":
        return cls(Kind.LEFT)

    @classmethod
    def right(cls) -> "ParallelismDescriptor":
        return cls(Kind.RIGHT)

    @classmethod
    def blend(cls, chooser: Iterable[int]) -> "ParallelismDescriptor":
        return cls(Kind.BLEND, frozenset(chooser))

    def side_for(self, m: Line) -> Side:
        """The Clifford parallelism whose class of ``m`` this parallelism uses."""
        if self.kind is Kind.LEFT:
            return LEFT
        if self.kind is Kind.RIGHT:
            return RIGHT
        s = subfield_square(m)
        return LEFT if any(same_square_class(s, c) for c in self.chooser) else RIGHT

    def __str__(self) -> str:
        if self.kind is not Kind.BLEND:
            return self.kind.value
        return "blend:" + ",".join(str(s) for s in sorted(self.chooser))


def build_parallelism(seed_lines: Iterable[Line]) -> ParallelismDescriptor:
    """Blend taking the left class exactly for subfields isomorphic to a seed."""
    chooser = set()
    for line in seed_lines:
        if not through_one(line):
            raise ValueError(f"seed line {line} does not pass through F1")
        chooser.add(subfield_invariant(line))
    return ParallelismDescriptor.blend(chooser)


def are_parallel(par: ParallelismDescriptor, m: Line, n: Line) -> bool:
    return is_parallel(m, n, par.side_for(m))


def class_line(par: ParallelismDescriptor, m: Line, p: Point) -> Line:
    """The line through ``p`` parallel to ``m`` under ``par``."""
    return class_line_through(m, p, par.side_for(m))


@lru_cache(maxsize=None)
def _invariant_witnesses(algebra: AlgebraSpec, height_bound: int) -> dict[int, tuple]:
    found: dict[int, tuple] = {}
    rng = range(-height_bound, height_bound + 1)
    # increasing height so the stored witness is a smallest generator
    for g in sorted(itertools.product(rng, rng, rng), key=lambda v: (max(map(abs, v)), v)):
        if g == (0, 0, 0):
            continue
        q = algebra.quaternion(0, *g)
        # F1 + Fq passes through F1, so its invariant is the class of q^2
        found.setdefault(squarefree_part((q * q).scalar()), g)
    return found


def triviality_scan(height_bound: int, algebra: AlgebraSpec = HAMILTON) -> frozenset[int]:
    """Square classes of maximal subfields ``F1 + Fg`` over integral pure ``g`` of bounded height.

    Two or more classes mean ``H`` has non-isomorphic maximal subfields, so
    Clifford-like parallelisms other than left and right exist.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    return frozenset(_invariant_witnesses(algebra, height_bound))


def realised_chooser(par: ParallelismDescriptor, algebra: AlgebraSpec = HAMILTON,
                     probe_bound: int = DEFAULT_PROBE_BOUND) -> frozenset[int]:
    realised = triviality_scan(probe_bound, algebra)
    if par.kind is Kind.LEFT:
        return realised
    if par.kind is Kind.RIGHT:
        return frozenset()
    return par.chooser & realised


@dataclass(frozen=True)
class ProbeWitness:
    line: Line
    point: Point
    line1: Line
    line2: Line


@dataclass(frozen=True)
class DescriptorComparison:
    """Equality of two parallelisms, decided up to the probe bound on generator height."""

    equal: bool
    probe_bound: int
    witness: Optional[ProbeWitness] = None

    def __bool__(self) -> bool:
        return self.equal


def _separating_point(line: Line) -> Point:
    """A point whose left and right class lines through ``line``'s class differ."""
    algebra = line.algebra
    for coords in itertools.product((0, 1, -1, 2), repeat=4):
        q = algebra.quaternion(*coords)
        if q.is_zero():
            continue
        p = Point(q)
        if class_line_through(line, p, LEFT) != class_line_through(line, p, RIGHT):
            return p
    raise ArithmeticError(f"no separating point found for {line}")


def descriptors_equal(par1: ParallelismDescriptor, par2: ParallelismDescriptor,
                      probe_bound: int = DEFAULT_PROBE_BOUND,
                      algebra: AlgebraSpec = HAMILTON) -> DescriptorComparison:
    c1 = realised_chooser(par1, algebra, probe_bound)
    c2 = realised_chooser(par2, algebra, probe_bound)
    if c1 == c2:
        return DescriptorComparison(True, probe_bound)
    s = min(c1 ^ c2, key=lambda v: (abs(v), v))
    m = line_from_generator(algebra.quaternion(0, *_invariant_witnesses(algebra, probe_bound)[s]))
    p = _separating_point(m)
    witness = ProbeWitness(m, p, class_line(par1, m, p), class_line(par2, m, p))
    return DescriptorComparison(False, probe_bound, witness)


# -- the double space axiom --------------------------------------------------

@dataclass(frozen=True)
class DsReport:
    triangle: tuple[Point, Point, Point]
    m1: Line
    m2: Line
    common: Optional[Point]

    @property
    def holds(self) -> bool:
        return self.common is not None


def is_triangle(p0: Point, p1: Point, p2: Point) -> bool:
    if len({p0, p1, p2}) < 3:
        return False
    return not incident(p2, join(p0, p1))


def ds_check(p0: Point, p1: Point, p2: Point,
             par1: ParallelismDescriptor, par2: ParallelismDescriptor) -> DsReport:
    """Line through ``p2`` par1-parallel to ``p0p1`` versus line through ``p1`` par2-parallel to ``p0p2``."""
    if not is_triangle(p0, p1, p2):
        raise ValueError("p0, p1, p2 must be three non-collinear points")
    m1 = class_line(par1, join(p0, p1), p2)
    m2 = class_line(par2, join(p0, p2), p1)
    return DsReport((p0, p1, p2), m1, m2, meet(m1, m2))


@dataclass(frozen=True)
class DsScanSummary:
    trials: int
    holds: int
    seed: int
    counterexample: Optional[DsReport] = None
    counterexample_trial: Optional[int] = None


def random_triangle(algebra: AlgebraSpec, rng: random.Random) -> tuple[Point, Point, Point]:
    while True:
        pts = tuple(random_point(algebra, rng) for _ in range(3))
        if is_triangle(*pts):
            return pts


def ds_property_scan(par1: ParallelismDescriptor, par2: ParallelismDescriptor,
                     trials: int, seed: int, algebra: AlgebraSpec = HAMILTON) -> DsScanSummary:
    """Run :func:`ds_check` on seeded random triangles; keeps the first failure."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    holds = 0
    first: Optional[DsReport] = None
    first_trial: Optional[int] = None
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        report = ds_check(*random_triangle(algebra, rng), par1, par2)
        if report.holds:
            holds += 1
        elif first is None:
            first, first_trial = report, t
    return DsScanSummary(trials, holds, seed, first, first_trial)


# -- finite restrictions -----------------------------------------------------

def restrict_to_lines(lines: list[Line], par: ParallelismDescriptor) -> FinitePartition:
    """Partition of a finite list of distinct lines into classes of ``par``."""
    keys = [(par.side_for(m), transversal(m, par.side_for(m))) for m in lines]
    index = {k: i for i, k in enumerate(dict.fromkeys(keys))}
    return FinitePartition.from_labels([index[k] for k in keys])
