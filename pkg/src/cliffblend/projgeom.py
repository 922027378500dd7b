"""Points and lines of the projective space P(H), incidence, and the polarity.

A point is a one-dimensional subspace of ``H`` and a line a two-dimensional
one.  Lines are stored as reduced row-echelon 2x4 matrices so that equal
subspaces compare and hash equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import _linalg
from .quat import AlgebraSpec, AlgebraMismatchError, Quaternion, inverse, multiply


class RankError(ValueError):
    """Spanning vectors do not have the required rank."""


def _canonical_coords(q: Quaternion) -> tuple[Fraction, ...]:
    lead = next((x for x in q.coords if x != 0), None)
    if lead is None:
        raise ValueError("the zero vector does not represent a point")
    return tuple(x / lead for x in q.coords)


@dataclass(frozen=True)
class Point:
    """Projective point ``F q``; ``representative`` has first nonzero coordinate 1."""

    representative: Quaternion

    def __post_init__(self) -> None:
        q = self.representative
        object.__setattr__(self, "representative", Quaternion(_canonical_coords(q), q.algebra))

    @property
    def algebra(self) -> AlgebraSpec:
        return self.representative.algebra

    def __str__(self) -> str:
        return str(self.representative)

    def __repr__(self) -> str:
        return f"Point{self.representative}"


@dataclass(frozen=True)
class Line:
    """Two-dimensional subspace of ``H`` in canonical (RREF) form."""

    basis: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    algebra: AlgebraSpec

    def __post_init__(self) -> None:
        rows, _ = _linalg.rref(self.basis)
        if len(rows) != 2:
            raise RankError(f"a line needs two independent spanning vectors, got rank {len(rows)}")
        object.__setattr__(self, "basis", (rows[0], rows[1]))

    @property
    def rows(self) -> tuple[Quaternion, Quaternion]:
        return (Quaternion(self.basis[0], self.algebra), Quaternion(self.basis[1], self.algebra))

    def contains(self, q: Quaternion) -> bool:
        """Whether the vector ``q`` lies in this subspace (the zero vector always does)."""
        if q.algebra != self.algebra:
            raise AlgebraMismatchError("vector and line belong to different algebras")
        return _linalg.in_row_space(self.basis, q.coords)

    def points(self, parameters) -> Iterator[Point]:
        """Points ``r0 + t r1`` for finite ``t`` and ``r1`` for ``t is None``."""
        r0, r1 = self.rows
        for t in parameters:
            yield Point(r1 if t is None else r0 + t * r1)

    def __str__(self) -> str:
        r0, r1 = self.rows
        return f"[{r0};{r1}]"

    def __repr__(self) -> str:
        return f"Line{self}"


def line_from_span(q1: Quaternion, q2: Quaternion) -> Line:
    if q1.algebra != q2.algebra:
        raise AlgebraMismatchError("spanning vectors belong to different algebras")
    return Line((q1.coords, q2.coords), q1.algebra)


def incident(p: Point, m: Line) -> bool:
    return m.contains(p.representative)


def join(p: Point, q: Point) -> Line:
    if p == q:
        raise ValueError("the join of a point with itself is not a line")
    return line_from_span(p.representative, q.representative)


def meet(m: Line, n: Line) -> Optional[Point]:
    """Common point of two distinct lines, or ``None`` when they are skew."""
    if m == n:
        raise ValueError("a line meets itself in infinitely many points")
    if m.algebra != n.algebra:
        raise AlgebraMismatchError("lines belong to different algebras")
    # alpha*m0 + beta*m1 - gamma*n0 - delta*n1 = 0, one equation per coordinate
    cols = [m.basis[0], m.basis[1], tuple(-x for x in n.basis[0]), tuple(-x for x in n.basis[1])]
    system = [tuple(col[r] for col in cols) for r in range(4)]
    kernel = _linalg.nullspace(system, 4)
    if not kernel:
        return None
    alpha, beta = kernel[0][0], kernel[0][1]
    r0, r1 = m.rows
    return Point(alpha * r0 + beta * r1)


def orthogonal_complement(vectors: list[Quaternion], algebra: AlgebraSpec) -> list[Quaternion]:
    """Basis of the subspace orthogonal to ``vectors`` for the polarised norm form."""
    gram = algebra.gram_diagonal()
    system = [tuple(g * x for g, x in zip(gram, v.coords)) for v in vectors]
    return [Quaternion(v, algebra) for v in _linalg.nullspace(system, 4)]


def polar_line(m: Line) -> Line:
    u, v = orthogonal_complement(list(m.rows), m.algebra)
    return line_from_span(u, v)


def polar_hyperplane(p: Point) -> list[Quaternion]:
    """Basis (three vectors) of the polar plane of a point."""
    return orthogonal_complement([p.representative], p.algebra)


def commutation_kernel(g: Quaternion) -> list[Quaternion]:
    """Basis of ``{u : u conj(g) = g u}``, computed as a kernel over the coordinates."""
    gbar = g.conjugate()
    rows = []
    images = [multiply(e, gbar) - multiply(g, e) for e in g.algebra.basis()]
    for r in range(4):
        rows.append(tuple(img.coords[r] for img in images))
    return [Quaternion(v, g.algebra) for v in _linalg.nullspace(rows, 4)]


def apply_mu(c: Quaternion, d: Quaternion, m: Line) -> Line:
    """Image of ``m`` under the collineation ``x -> c x d``."""
    if c.is_zero() or d.is_zero():
        raise ValueError("mu_{c,d} needs nonzero c and d")
    r0, r1 = m.rows
    return line_from_span(c * r0 * d, c * r1 * d)


def left_multiply(c: Quaternion, m: Line) -> Line:
    return apply_mu(c, c.algebra.one, m)


def right_multiply(m: Line, d: Quaternion) -> Line:
    return apply_mu(d.algebra.one, d, m)


def conjugate_line(e: Quaternion, m: Line) -> Line:
    """``e^{-1} m e``."""
    return apply_mu(inverse(e), e, m)


# -- seeded sampling ---------------------------------------------------------

DEFAULT_SAMPLE_BOUND = 9


def random_quaternion(algebra: AlgebraSpec, rng: random.Random,
                      bound: int = DEFAULT_SAMPLE_BOUND, nonzero: bool = True) -> Quaternion:
    while True:
        q = algebra.quaternion(*(rng.randint(-bound, bound) for _ in range(4)))
        if not (nonzero and q.is_zero()):
            return q


def random_point(algebra: AlgebraSpec, rng: random.Random,
                 bound: int = DEFAULT_SAMPLE_BOUND) -> Point:
    return Point(random_quaternion(algebra, rng, bound))


def random_line(algebra: AlgebraSpec, rng: random.Random,
                bound: int = DEFAULT_SAMPLE_BOUND) -> Line:
    while True:
        q1 = random_quaternion(algebra, rng, bound)
        q2 = random_quaternion(algebra, rng, bound)
        try:
            return line_from_span(q1, q2)
        except RankError:
            continue


def random_line_through_one(algebra: AlgebraSpec, rng: random.Random,
                            bound: int = DEFAULT_SAMPLE_BOUND) -> Line:
    """Random line through the point F1, i.e. a random maximal subfield."""
    while True:
        g = random_quaternion(algebra, rng, bound)
        if not g.is_scalar():
            return line_from_span(algebra.one, g)
