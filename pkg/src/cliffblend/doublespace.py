"""Left and right Clifford parallelism on P(H) and left-right equivalence.

``M`` is left parallel to ``N`` when ``c M = N`` for some nonzero ``c``, and
right parallel when ``M d = N``.  Every parallel class has exactly one line
through the point ``F1`` (its transversal), which is a maximal subfield of
``H``.  Two lines are left-right equivalent exactly when the transversal
subfields are isomorphic, i.e. when their square-class invariants agree.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import _linalg
import math

from .exactnum import rational_sqrt, same_square_class, squarefree_part
from .projgeom import (
    Line,
    Point,
    apply_mu,
    conjugate_line,
    incident,
    left_multiply,
    line_from_span,
    meet,
    polar_line,
    right_multiply,
)
from .quat import Quaternion, inverse, left_mult_matrix, pure_part, right_mult_matrix


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


LEFT, RIGHT = Side.LEFT, Side.RIGHT


@dataclass(frozen=True)
class EquivalenceCertificate:
    """``e^{-1} L1 e = L2``, with ``g1 e = mu e g2`` for the pure generators."""

    e: Quaternion
    mu_scale: Fraction
    source: Line
    target: Line

    def verify(self) -> bool:
        return conjugate_line(self.e, self.source) == self.target


@dataclass(frozen=True)
class LREquivalence:
    equivalent: bool
    certificate: Optional[EquivalenceCertificate] = None

    def __bool__(self) -> bool:
        return self.equivalent


def through_one(m: Line) -> bool:
    return m.contains(m.algebra.one)


def _require_through_one(m: Line) -> None:
    if not through_one(m):
        raise ValueError(f"{m} does not pass through the point F1")


def transversal(m: Line, side: Side) -> Line:
    """The line through ``F1`` in the ``side``-parallel class of ``m``."""
    p = m.rows[0]
    return left_multiply(inverse(p), m) if side is LEFT else right_multiply(m, inverse(p))


def is_parallel(m: Line, n: Line, side: Side) -> bool:
    return transversal(m, side) == transversal(n, side)


def parallel_multiplier_oracle(m: Line, n: Line, side: Side) -> Optional[Quaternion]:
    """Solve ``c m_t in N`` (or ``m_t c in N``) for both basis rows of ``m``.

    Membership in ``N`` is tested against the coordinate annihilator of
    ``N`` (plain dot product), so no transversal or polarity is involved.
    Returns a nonzero multiplier or ``None``.
    """
    annihilator = _linalg.nullspace(n.basis, 4)
    rows = []
    for r in m.rows:
        # c -> c r is right multiplication by r; c -> r c is left multiplication
        mat = right_mult_matrix(r) if side is LEFT else left_mult_matrix(r)
        for ann in annihilator:
            rows.append(tuple(sum(ann[i] * mat[i][col] for i in range(4)) for col in range(4)))
    kernel = _linalg.nullspace(rows, 4)
    if not kernel:
        return None
    return Quaternion(kernel[0], m.algebra)


def class_line_through(m: Line, p: Point, side: Side) -> Line:
    q = p.representative
    if side is LEFT:
        return left_multiply(q, transversal(m, LEFT))
    return right_multiply(transversal(m, RIGHT), q)


def subfield_generator(line: Line) -> Quaternion:
    """Pure quaternion ``g`` with ``line = F1 + Fg`` for a line through ``F1``."""
    _require_through_one(line)
    # the RREF of a line through F1 is (1,0,0,0) together with a pure row
    return pure_part(line.rows[1])


def _primitive(q: Quaternion) -> Quaternion:
    """Integer multiple of ``q`` with coprime coordinates."""
    scale = math.lcm(*(x.denominator for x in q))
    ints = [int(x * scale) for x in q]
    return Quaternion(tuple(x // math.gcd(*ints) for x in ints), q.algebra)


def subfield_square(m: Line) -> Fraction:
    """``g^2`` for the primitive integral generator ``g`` of the left transversal of ``m``.

    Its square class is the invariant; comparing two of these with
    :func:`same_square_class` needs no factorisation.
    """
    g = _primitive(subfield_generator(transversal(m, LEFT)))
    return (g * g).scalar()


def subfield_invariant(m: Line) -> int:
    """Square class of ``g^2`` where ``F1 + Fg`` is the left transversal of ``m``."""
    return squarefree_part(subfield_square(m))


def _certificate_kernel(g1: Quaternion, g2: Quaternion, mu: Fraction) -> list[Quaternion]:
    # g1 e - mu e g2 = 0 as a linear system in e
    lm, rm = left_mult_matrix(g1), right_mult_matrix(g2)
    rows = [tuple(lm[r][c] - mu * rm[r][c] for c in range(4)) for r in range(4)]
    return [Quaternion(v, g1.algebra) for v in _linalg.nullspace(rows, 4)]


def conjugation_certificate(l1: Line, l2: Line) -> Optional[EquivalenceCertificate]:
    """Find ``e`` with ``e^{-1} L1 e = L2`` for lines through ``F1``, if one exists."""
    _require_through_one(l1)
    _require_through_one(l2)
    g1, g2 = subfield_generator(l1), subfield_generator(l2)
    s1, s2 = (g1 * g1).scalar(), (g2 * g2).scalar()
    mu = rational_sqrt(s1 / s2)
    if mu is None:
        return None
    for m in (mu, -mu):
        kernel = _certificate_kernel(g1, g2, m)
        if kernel:
            cert = EquivalenceCertificate(kernel[0], m, l1, l2)
            if not cert.verify():
                raise ArithmeticError(f"certificate {kernel[0]} failed re-verification")
            return cert
    raise ArithmeticError("isomorphic subfields without a conjugating element; H is not a skew field")


def lr_equivalent(m1: Line, m2: Line) -> LREquivalence:
    if not same_square_class(subfield_square(m1), subfield_square(m2)):
        return LREquivalence(False)
    cert = conjugation_certificate(transversal(m1, LEFT), transversal(m2, RIGHT))
    return LREquivalence(cert is not None, cert)


@dataclass(frozen=True)
class TwoSidedMultipliers:
    """``e1 M1 = M2 e2``."""

    e1: Quaternion
    e2: Quaternion


def two_sided_multipliers(m1: Line, m2: Line) -> Optional[TwoSidedMultipliers]:
    """Nonzero ``e1, e2`` with ``e1 M1 = M2 e2`` built from the certificate."""
    verdict = lr_equivalent(m1, m2)
    if not verdict:
        return None
    e = verdict.certificate.e
    d1 = inverse(m1.rows[0])  # d1 M1 = L1
    d2 = inverse(m2.rows[0])  # M2 d2 = L2
    return TwoSidedMultipliers(inverse(e) * d1, d2 * inverse(e))


def common_lines(m1: Line, m2: Line) -> frozenset[Line]:
    """The lines left parallel to ``M1`` and right parallel to ``M2``.

    Empty unless the lines are left-right equivalent, otherwise ``{M, M^perp}``.
    """
    verdict = lr_equivalent(m1, m2)
    if not verdict:
        return frozenset()
    l1 = transversal(m1, LEFT)
    m = left_multiply(inverse(verdict.certificate.e), l1)
    return frozenset({m, polar_line(m)})


def is_line_stabilized(line: Line, u: Quaternion) -> bool:
    """Whether ``u^{-1} L u = L`` for a line ``L`` through ``F1``."""
    _require_through_one(line)
    if u.is_zero():
        raise ValueError("u must be nonzero")
    return conjugate_line(u, line) == line


@dataclass(frozen=True)
class FlagTransport:
    """``x -> c x d`` maps the flag ``(p1, M1)`` onto ``(p2, M2)``."""

    c: Quaternion
    d: Quaternion

    def verify(self, p1: Point, m1: Line, p2: Point, m2: Line) -> bool:
        image = self.c * p1.representative * self.d
        return apply_mu(self.c, self.d, m1) == m2 and not image.is_zero() and Point(image) == p2


def flag_transport(p1: Point, m1: Line, p2: Point, m2: Line) -> Optional[FlagTransport]:
    if not (incident(p1, m1) and incident(p2, m2)):
        raise ValueError("both point-line pairs must be incident flags")
    q1, q2 = p1.representative, p2.representative
    l1 = left_multiply(inverse(q1), m1)
    l2 = right_multiply(m2, inverse(q2))
    cert = conjugation_certificate(l1, l2)
    if cert is None:
        return None
    transport = FlagTransport(inverse(cert.e) * inverse(q1), cert.e * q2)
    if not transport.verify(p1, m1, p2, m2):
        raise ArithmeticError("flag transport failed re-verification")
    return transport


def _rational_parameters(rng: random.Random, bound: int = 9) -> Iterable[Optional[Fraction]]:
    """Endless stream of parameters in ``[-bound, bound]`` and ``None`` for infinity."""
    while True:
        if rng.randrange(2 * bound + 2) == 0:
            yield None
        else:
            den = rng.randint(1, bound)
            yield Fraction(rng.randint(-bound * den, bound * den), den)


def regulus_sample(m: Line, n: Line, side: Side, count: int, seed: int) -> list[Line]:
    """``count`` distinct lines of the ``side`` class of ``m`` meeting ``n``.

    ``n`` must not itself belong to that class (otherwise the set is ``{n}``).
    """
    if count < 1:
        raise ValueError("count must be positive")
    if is_parallel(m, n, side):
        raise ValueError(f"{n} lies in the {side.value} class of {m}; no regulus arises")
    rng = random.Random(seed)
    seen_t: set = set()
    out: list[Line] = []
    for t in _rational_parameters(rng):
        if t in seen_t:
            continue
        seen_t.add(t)
        (q,) = n.points([t])
        out.append(class_line_through(m, q, side))
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


def sample_regulus_meets(lines_a: list[Line], lines_b: list[Line]) -> bool:
    """Whether every line of ``lines_a`` meets every line of ``lines_b``."""
    return all(a == b or meet(a, b) is not None for a in lines_a for b in lines_b)


def line_from_generator(g: Quaternion) -> Line:
    """The maximal subfield ``F1 + Fg``."""
    return line_from_span(g.algebra.one, g)
