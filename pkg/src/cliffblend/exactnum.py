"""Exact rationals, square classes of Q*, and the division test for (a, b | Q).

Rationals are :class:`fractions.Fraction`.  A square class of ``Q*`` is keyed
by its signed squarefree integer representative.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC
from typing import Optional, Union

RationalLike = Union[int, Fraction, str]

#: Default bound for trial-division factorisation.
DEFAULT_PRIME_BOUND = 10**6


class FactorizationBoundError(ArithmeticError):
    """An integer could not be fully factored with the configured prime bound."""


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]digits[/digits]``, e.g. ``-3/7`` or ``5``."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"malformed rational literal {text!r}")
    if sep and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if sep else 1)
    return -value if s.startswith("-") else value


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def factorize(n: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> dict[int, int]:
    """Prime factorisation of ``|n|`` by trial division up to ``prime_bound``.

    A leftover cofactor is accepted as prime only when it is below
    ``prime_bound**2``; otherwise :class:`FactorizationBoundError` is raised.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        if p > prime_bound:
            raise FactorizationBoundError(
                f"{n} has no prime factor <= {prime_bound} and is too large to certify"
            )
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _squarefree_int(n: int, prime_bound: int) -> int:
    core = 1
    for p, e in factorize(n, prime_bound).items():
        if e % 2:
            core *= p
    return -core if n < 0 else core


def squarefree_part(r: RationalLike, prime_bound: int = DEFAULT_PRIME_BOUND) -> int:
    """Signed squarefree integer ``s`` with ``r = s * t**2`` for some rational ``t``.

    For ``r = p/q`` in lowest terms this is the squarefree part of ``p*q``.
    """
    r = as_rational(r)
    if r == 0:
        raise ValueError("zero has no square class")
    return _squarefree_int(r.numerator * r.denominator, prime_bound)


def same_square_class(r1: RationalLike, r2: RationalLike) -> bool:
    """True iff ``r1 / r2`` is a square in ``Q*``.

    Same answer as comparing squarefree parts, but needs no factorisation.
    """
    r1, r2 = as_rational(r1), as_rational(r2)
    if r1 == 0 or r2 == 0:
        raise ValueError("square classes are defined for nonzero rationals only")
    return rational_sqrt(r1 / r2) is not None


def rational_sqrt(r: RationalLike) -> Optional[Fraction]:
    """Non-negative rational square root, or ``None`` if ``r`` is not a square."""
    r = as_rational(r)
    if r < 0:
        return None
    p, q = r.numerator, r.denominator
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


def _legendre(u: int, p: int) -> int:
    t = pow(u % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def hilbert_symbol(a: int, b: int, p: Union[int, None]) -> int:
    """Hilbert symbol ``(a, b)_p`` for nonzero squarefree integers.

    ``p=None`` selects the real place.
    """
    if p is None:
        return -1 if a < 0 and b < 0 else 1
    alpha, u = 0, a
    while u % p == 0:
        u //= p
        alpha += 1
    beta, v = 0, b
    while v % p == 0:
        v //= p
        beta += 1
    if p == 2:
        eps_u, eps_v = ((u - 1) // 2) % 2, ((v - 1) // 2) % 2
        om_u, om_v = ((u * u - 1) // 8) % 2, ((v * v - 1) // 8) % 2
        return -1 if (eps_u * eps_v + alpha * om_v + beta * om_u) % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** beta * _legendre(v, p) ** alpha


def ramified_places(a: RationalLike, b: RationalLike) -> list[Union[int, None]]:
    """Places (``None`` = real) where ``(a, b | Q)`` does not split."""
    sa, sb = squarefree_part(a), squarefree_part(b)
    primes = {2} | set(factorize(sa)) | set(factorize(sb))
    places: list[Union[int, None]] = [None, *sorted(primes)]
    return [v for v in places if hilbert_symbol(sa, sb, v) == -1]


def is_division(a: RationalLike, b: RationalLike) -> bool:
    """Whether the quaternion algebra ``(a, b | Q)`` is a skew field."""
    if as_rational(a) == 0 or as_rational(b) == 0:
        raise ValueError("quaternion algebra parameters must be nonzero")
    return bool(ramified_places(a, b))


def brute_force_isotropy(
    a: RationalLike, b: RationalLike, height_bound: int
) -> Optional[tuple[int, int, int]]:
    """Search a nonzero integer zero of ``x^2 - a y^2 - b z^2`` of height <= bound.

    Signs are irrelevant, so only non-negative triples are returned.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    a, b = as_rational(a), as_rational(b)
    # x^2 * D = A y^2 + B z^2 with integer A, B, D
    den = a.denominator * b.denominator
    ca = a.numerator * b.denominator
    cb = b.numerator * a.denominator
    limit = height_bound * height_bound
    for z in range(height_bound + 1):
        for y in range(height_bound + 1):
            if y == 0 and z == 0:
                continue
            rhs = ca * y * y + cb * z * z
            if rhs < 0 or rhs % den:
                continue
            x2 = rhs // den
            if x2 > limit:
                continue
            x = isqrt(x2)
            if x * x == x2:
                return (x, y, z)
    return None
