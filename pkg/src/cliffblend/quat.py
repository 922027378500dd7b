"""The quaternion algebra ``H = (a, b | Q)`` with exact rational coordinates.

Basis ``1, i, j, k`` with ``i^2 = a``, ``j^2 = b``, ``ij = -ji = k`` and hence
``k^2 = -ab``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exactnum import RationalLike, as_rational, format_rational, is_division


class SplitAlgebraError(ValueError):
    """The requested parameters give a split algebra, not a skew field."""


class AlgebraMismatchError(ValueError):
    """Quaternions from different algebras were combined."""


@dataclass(frozen=True)
class AlgebraSpec:
    a: Fraction
    b: Fraction
    division_checked: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a == 0 or self.b == 0:
            raise ValueError("quaternion algebra parameters must be nonzero")
        if self.division_checked and not is_division(self.a, self.b):
            raise SplitAlgebraError(
                f"({format_rational(self.a)}, {format_rational(self.b)} | Q) is not a division algebra"
            )

    def __str__(self) -> str:
        return f"a={format_rational(self.a)} b={format_rational(self.b)}"

    def quaternion(self, x0: RationalLike = 0, x1: RationalLike = 0,
                   x2: RationalLike = 0, x3: RationalLike = 0) -> "Quaternion":
        return Quaternion((x0, x1, x2, x3), self)

    def from_coords(self, coords: Iterable[RationalLike]) -> "Quaternion":
        return Quaternion(tuple(coords), self)

    @property
    def one(self) -> "Quaternion":
        return self.quaternion(1)

    @property
    def zero(self) -> "Quaternion":
        return self.quaternion()

    @property
    def i(self) -> "Quaternion":
        return self.quaternion(0, 1)

    @property
    def j(self) -> "Quaternion":
        return self.quaternion(0, 0, 1)

    @property
    def k(self) -> "Quaternion":
        return self.quaternion(0, 0, 0, 1)

    def basis(self) -> tuple["Quaternion", ...]:
        return self.one, self.i, self.j, self.k

    def gram_diagonal(self) -> tuple[Fraction, ...]:
        """Diagonal of the norm form ``x0^2 - a x1^2 - b x2^2 + ab x3^2``."""
        return (Fraction(1), -self.a, -self.b, self.a * self.b)


#: The ordinary (Hamilton) quaternions over Q.
HAMILTON = AlgebraSpec(-1, -1)


@dataclass(frozen=True)
class Quaternion:
    coords: tuple[Fraction, Fraction, Fraction, Fraction]
    algebra: AlgebraSpec

    def __post_init__(self) -> None:
        coords = tuple(as_rational(x) for x in self.coords)
        if len(coords) != 4:
            raise ValueError("a quaternion has exactly four coordinates")
        object.__setattr__(self, "coords", coords)

    def _same(self, other: "Quaternion") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError("quaternions belong to different algebras")

    def _coerce(self, other: Union["Quaternion", RationalLike]) -> "Quaternion":
        if isinstance(other, Quaternion):
            self._same(other)
            return other
        return Quaternion((other, 0, 0, 0), self.algebra)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, idx: int) -> Fraction:
        return self.coords[idx]

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_scalar(self) -> bool:
        return not any(self.coords[1:])

    def __add__(self, other):
        other = self._coerce(other)
        return Quaternion(tuple(x + y for x, y in zip(self, other)), self.algebra)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(tuple(-x for x in self), self.algebra)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            s = as_rational(other)
            return Quaternion(tuple(x * s for x in self), self.algebra)
        return multiply(self, other)

    def __rmul__(self, other):
        s = as_rational(other)
        return Quaternion(tuple(s * x for x in self), self.algebra)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * inverse(other)
        s = as_rational(other)
        return Quaternion(tuple(x / s for x in self), self.algebra)

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        result = self.algebra.one
        for _ in range(n):
            result = result * self
        return result

    def scalar(self) -> Fraction:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.coords[0]

    def conjugate(self) -> "Quaternion":
        return conjugate(self)

    def norm(self) -> Fraction:
        return norm(self)

    def inverse(self) -> "Quaternion":
        return inverse(self)

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(x) for x in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Quaternion{self}"


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    p._same(q)
    a, b = p.algebra.a, p.algebra.b
    x0, x1, x2, x3 = p.coords
    y0, y1, y2, y3 = q.coords
    return Quaternion(
        (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ),
        p.algebra,
    )


def conjugate(q: Quaternion) -> Quaternion:
    x0, x1, x2, x3 = q.coords
    return Quaternion((x0, -x1, -x2, -x3), q.algebra)


def norm(q: Quaternion) -> Fraction:
    """The norm form ``q * conj(q)``."""
    return sum((g * x * x for g, x in zip(q.algebra.gram_diagonal(), q.coords)), Fraction(0))


def bilinear(p: Quaternion, q: Quaternion) -> Fraction:
    """Polarised norm form ``p conj(q) + q conj(p)``."""
    p._same(q)
    return (p * conjugate(q) + q * conjugate(p)).scalar()


def inverse(q: Quaternion) -> Quaternion:
    n = norm(q)
    if n == 0:
        if q.is_zero():
            raise ZeroDivisionError("the zero quaternion has no inverse")
        raise ZeroDivisionError(f"{q} is a zero divisor in a split algebra")
    return conjugate(q) / n


def pure_part(q: Quaternion) -> Quaternion:
    x0, x1, x2, x3 = q.coords
    return Quaternion((0, x1, x2, x3), q.algebra)


def left_mult_matrix(c: Quaternion) -> list[tuple[Fraction, ...]]:
    """Rows of the 4x4 matrix of ``x -> c x`` acting on coordinate columns."""
    cols = [(c * e).coords for e in c.algebra.basis()]
    return [tuple(col[r] for col in cols) for r in range(4)]


def right_mult_matrix(d: Quaternion) -> list[tuple[Fraction, ...]]:
    """Rows of the 4x4 matrix of ``x -> x d`` acting on coordinate columns."""
    cols = [(e * d).coords for e in d.algebra.basis()]
    return [tuple(col[r] for col in cols) for r in range(4)]


def quaternions_from_rows(rows: Sequence[Sequence[Fraction]], algebra: AlgebraSpec) -> list[Quaternion]:
    return [Quaternion(tuple(r), algebra) for r in rows]
