"""Left and right parallelism, and when a left class meets a right class.

Every line has a left and a right transversal through F1.  Lines M1, M2 are
left-right equivalent when these subfields are isomorphic; then exactly two
lines are left parallel to M1 and right parallel to M2.
"""

from cliffblend import HAMILTON as H
from cliffblend.doublespace import (
    LEFT,
    RIGHT,
    common_lines,
    flag_transport,
    lr_equivalent,
    subfield_invariant,
    transversal,
)
from cliffblend.projgeom import Point, line_from_span, polar_line

one, i, j, k = H.basis()
m = line_from_span(one + i, j + k)
print("M =", m)
print("left transversal  =", transversal(m, LEFT))
print("right transversal =", transversal(m, RIGHT))
print("invariant         =", subfield_invariant(m))

a, b = line_from_span(one, i), line_from_span(one, k)
verdict = lr_equivalent(a, b)
cert = verdict.certificate
print(f"\n{a} ~ {b}: {verdict.equivalent}, e = {cert.e}, e^-1 i e = {cert.e.inverse() * i * cert.e}")
for line in sorted(common_lines(a, b), key=str):
    print("  common line", line)

c = line_from_span(one, i + j)
print(f"\n{a} ~ {c}: {bool(lr_equivalent(a, c))} (invariants {subfield_invariant(a)} and {subfield_invariant(c)})")

n = line_from_span(one + j, i - k)
print("\nS_l(N) and S_r(N) share exactly N and its polar:", common_lines(n, n) == {n, polar_line(n)})

tr = flag_transport(Point(one), a, Point(j), line_from_span(j, k))
print("flag (F1, span{1,i}) -> (Fj, span{j,k}) via x -> c x d with c =", tr.c, "d =", tr.d)
