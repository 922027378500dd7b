"""Exact arithmetic in the Hamilton quaternions over Q.

Run with ``python demos/01_quaternions.py``.
"""

from fractions import Fraction

from cliffblend import HAMILTON as H
from cliffblend.exactnum import is_division, ramified_places
from cliffblend.quat import AlgebraSpec, SplitAlgebraError, bilinear, norm

one, i, j, k = H.basis()

print("i*j =", i * j, " j*i =", j * i)
print("(1+j)*i =", (one + j) * i, "(that is i - k)")

q = H.quaternion(1, Fraction(1, 2), -2, 3)
print("q =", q, " norm =", norm(q), " q*q^-1 =", q * q.inverse())

# the norm form polarises to the bilinear form used for orthogonality
print("<1, i> =", bilinear(one, i), " <i, i> =", bilinear(i, i))

# which parameter pairs give a skew field?
for a, b in [(-1, -1), (-1, -3), (-1, 2), (3, 5)]:
    places = ["inf" if p is None else p for p in ramified_places(a, b)]
    print(f"({a},{b} | Q): division={is_division(a, b)} ramified at {places or 'nowhere'}")

try:
    AlgebraSpec(-1, 2)
except SplitAlgebraError as exc:
    print("rejected:", exc)
